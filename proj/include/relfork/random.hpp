#pragma once

#include <cstdint>
#include <random>

namespace relfork {

using Rng = std::mt19937_64;

// Unbiased draw from [0, bound). std::uniform_int_distribution is not
// specified bit-for-bit across standard libraries, and reports must be
// byte-identical for a given seed.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

}  // namespace relfork
