#pragma once

// Unbounded naturals. Nested pairing makes values grow quickly (each level
// roughly quadruples the bit length), so 64-bit integers are not enough.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace relfork {

using Nat = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                         boost::multiprecision::et_off>;
using NatPair = std::pair<Nat, Nat>;

Nat parse_nat(const std::string& text);
std::string to_string(const Nat& n);

// floor(sqrt(n))
Nat isqrt(const Nat& n);

// Diagonal pairing: cantor_pair(i, k) = (i+k)(i+k+1)/2 + k.
Nat cantor_pair(const Nat& i, const Nat& k);
NatPair cantor_unpair(const Nat& n);

// Bijection between off-diagonal pairs (i != k) and N, following the
// diagonal enumeration with the diagonal cells skipped.
Nat offdiag_pair(const Nat& i, const Nat& k);
NatPair offdiag_unpair(const Nat& n);

// Parses "1,2,5" into sorted, de-duplicated naturals.
std::vector<Nat> parse_nat_list(const std::string& text);
std::string join_nats(const std::vector<Nat>& xs, const std::string& sep = ",");

}  // namespace relfork
