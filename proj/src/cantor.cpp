#include "relfork/nat.hpp"

namespace relfork {

Nat cantor_pair(const Nat& i, const Nat& k) {
  const Nat s = i + k;
  return s * (s + 1) / 2 + k;
}

NatPair cantor_unpair(const Nat& n) {
  // s is the largest value with s(s+1)/2 <= n.
  Nat s = (isqrt(8 * n + 1) - 1) / 2;
  const Nat k = n - s * (s + 1) / 2;
  return {s - k, k};
}

namespace {

// Diagonal cells (m, m) sit at index 2m^2 + 2m; count those strictly below c.
Nat diagonal_below(const Nat& c) {
  if (c == 0) return 0;
  // largest m with 2m^2 + 2m <= c - 1
  Nat m = (isqrt(2 * (c - 1) + 1) - 1) / 2;
  while (2 * m * m + 2 * m > c - 1) --m;
  while (2 * (m + 1) * (m + 1) + 2 * (m + 1) <= c - 1) ++m;
  return m + 1;
}

bool is_diagonal_index(const Nat& c) {
  Nat m = (isqrt(2 * c + 1) - 1) / 2;
  return 2 * m * m + 2 * m == c;
}

}  // namespace

Nat offdiag_pair(const Nat& i, const Nat& k) {
  const Nat c = cantor_pair(i, k);
  return c - diagonal_below(c);
}

NatPair offdiag_unpair(const Nat& n) {
  // Least fixpoint of c = n + diagonal_below(c); diagonal_below grows like
  // sqrt, so the iteration settles after a handful of steps.
  Nat c = n;
  for (;;) {
    Nat next = n + diagonal_below(c);
    if (next == c) break;
    c = next;
  }
  if (is_diagonal_index(c)) ++c;
  return cantor_unpair(c);
}

}  // namespace relfork
