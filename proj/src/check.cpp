#include "relfork/check.hpp"

#include <algorithm>
#include <thread>

#include "relfork/error.hpp"
#include "relfork/random.hpp"

namespace relfork {

namespace {

struct Scan {
  std::uint64_t evaluated = 0;
  std::optional<std::uint64_t> first_failure;
};

FiniteEnv env_for(std::uint64_t index, const std::vector<std::string>& vars,
                  const std::vector<FiniteRelation>& carrier) {
  FiniteEnv env;
  const std::uint64_t c = carrier.size();
  for (std::size_t v = vars.size(); v-- > 0;) {
    env.insert_or_assign(vars[v], carrier[index % c]);
    index /= c;
  }
  return env;
}

Scan scan_range(const Formula& f, const AlgebraModel& model, const std::vector<std::string>& vars,
                std::uint64_t begin, std::uint64_t end) {
  Scan s;
  for (std::uint64_t i = begin; i < end; ++i) {
    ++s.evaluated;
    if (!holds(f, env_for(i, vars, model.carrier()), model)) {
      s.first_failure = i;
      break;
    }
  }
  return s;
}

}  // namespace

CheckReport check_formula(const Formula& f, const AlgebraModel& model, const Strategy& strategy,
                          unsigned threads) {
  const auto var_set = variables(f);
  const std::vector<std::string> vars(var_set.begin(), var_set.end());
  const std::vector<FiniteRelation>& carrier = model.carrier();
  CheckReport report;

  if (strategy.kind == Strategy::Kind::Sampled) {
    Rng rng(strategy.seed);
    for (std::uint64_t k = 0; k < strategy.samples; ++k) {
      FiniteEnv env;
      for (const auto& v : vars) env.insert_or_assign(v, carrier[uniform_below(rng, carrier.size())]);
      ++report.assignments;
      if (!holds(f, env, model)) {
        report.valid = false;
        report.counterexample.emplace(env.begin(), env.end());
        break;
      }
    }
    return report;
  }

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (total > kMaxExhaustiveAssignments / std::max<std::uint64_t>(carrier.size(), 1)) {
      throw Error("cap-exceeded", "exhaustive check needs " + std::to_string(carrier.size()) + "^" +
                                      std::to_string(vars.size()) +
                                      " assignments; use a sampled strategy");
    }
    total *= carrier.size();
  }

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(total / 1024, 1))));
  std::vector<Scan> parts(threads);
  if (threads == 1) {
    parts[0] = scan_range(f, model, vars, 0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t b = std::min(total, w * chunk);
      const std::uint64_t e = std::min(total, b + chunk);
      pool.emplace_back([&, w, b, e] { parts[w] = scan_range(f, model, vars, b, e); });
    }
    for (auto& t : pool) t.join();
  }

  // Ranges are ordered, so the first failing part holds the global first
  // failure; count work as a sequential scan would have.
  for (const auto& p : parts) {
    if (p.first_failure) {
      report.valid = false;
      report.assignments = *p.first_failure + 1;
      auto env = env_for(*p.first_failure, vars, carrier);
      report.counterexample.emplace(env.begin(), env.end());
      return report;
    }
  }
  report.assignments = total;
  return report;
}

}  // namespace relfork
