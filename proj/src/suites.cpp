#include "relfork/suites.hpp"

#include "relfork/error.hpp"

namespace relfork {

namespace {

const std::vector<std::string> kEquational = {
    "r;(s;t) = (r;s);t",
    "(r + s);t = r;t + s;t",
    "(r + s)^ = r^ + s^",
    "r^^ = r",
    "r;1' = r",
    "(r;s)^ = s^;r^",
    "(r;s) & t <= (r & t;s^);(s & r^;t)",
};

// The Boolean part is carried by the commutativity, distributivity,
// identity and complement laws (items 3-7).
const std::vector<std::string> kTarski = {
    "r = s /\\ r = t -> s = t",
    "r = s -> r + t = s + t /\\ r & t = s & t",
    "r + s = s + r /\\ r & s = s & r",
    "r + s & t = (r + s) & (r + t) /\\ r & (s + t) = r & s + r & t",
    "r + 0 = r /\\ r & 1 = r",
    "r + ~r = 1 /\\ r & ~r = 0",
    "~1 = 0",
    "r^^ = r",
    "(r;s)^ = s^;r^",
    "r;(s;t) = (r;s);t",
    "r;1' = r",
    "r;1 = 1 \\/ 1;~r = 1",
    "(r;s) & t^ = 0 -> (s;t) & r^ = 0",
};

const std::vector<std::string> kFork = {
    "r # s = r;(1' # 1) & s;(1 # 1')",
    "(r # s);(t # u)^ = r;t^ & s;u^",
    "(1' # 1)^ # (1 # 1')^ <= 1'",
};

const std::string kUrelement = "1;(~(1 # 1) & 1');1 = 1";

}  // namespace

std::vector<std::string> suite_names() { return {"cr_equational", "cr_tarski", "cfa", "cfau"}; }

std::vector<std::string> axiom_suite_text(const std::string& name) {
  if (name == "cr_equational") return kEquational;
  if (name == "cr_tarski") return kTarski;
  if (name == "cfa" || name == "cfau") {
    auto out = kEquational;
    out.insert(out.end(), kFork.begin(), kFork.end());
    if (name == "cfau") out.push_back(kUrelement);
    return out;
  }
  throw Error("unknown-suite", "unknown axiom suite '" + name +
                                   "' (expected cr_equational, cr_tarski, cfa or cfau)");
}

std::vector<FormulaPtr> axiom_suite(const std::string& name) {
  std::vector<FormulaPtr> out;
  for (const auto& text : axiom_suite_text(name)) out.push_back(parse_formula(text));
  return out;
}

}  // namespace relfork
