#pragma once

// Model checking formulas over finite relation algebras.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relfork/eval.hpp"

namespace relfork {

struct Strategy {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static Strategy exhaustive() { return {}; }
  static Strategy sampled(std::uint64_t k, std::uint64_t seed) { return {Kind::Sampled, k, seed}; }
};

inline constexpr std::uint64_t kMaxExhaustiveAssignments = std::uint64_t{1} << 26;

struct CheckReport {
  bool valid = true;
  std::uint64_t assignments = 0;  // assignments evaluated
  // Variables in sorted order with their values at the first failure.
  std::optional<std::vector<std::pair<std::string, FiniteRelation>>> counterexample;
};

// Exhaustive enumeration walks the carrier in canonical order for each
// variable (sorted by name, last variable fastest) and reports the first
// failing assignment. `threads` > 1 partitions the enumeration range; the
// result does not depend on it.
CheckReport check_formula(const Formula& f, const AlgebraModel& model, const Strategy& strategy,
                          unsigned threads = 1);

}  // namespace relfork
