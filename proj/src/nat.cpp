#include "relfork/nat.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "relfork/error.hpp"

namespace relfork {

Nat parse_nat(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](unsigned char c) { return std::isdigit(c); })) {
    throw Error("bad-number", "not a natural number: '" + text + "'");
  }
  return Nat(text);
}

std::string to_string(const Nat& n) { return n.str(); }

Nat isqrt(const Nat& n) {
  if (n < 0) throw Error("bad-number", "square root of a negative number");
  return boost::multiprecision::sqrt(n);
}

std::vector<Nat> parse_nat_list(const std::string& text) {
  std::vector<Nat> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    out.push_back(parse_nat(item));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string join_nats(const std::vector<Nat>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i].str();
  }
  return out;
}

}  // namespace relfork
