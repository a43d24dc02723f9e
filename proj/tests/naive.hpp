#pragma once

// Set-of-pairs reference implementation used as an oracle for the bit-row
// relations.

#include <cstddef>
#include <set>
#include <utility>

#include "relfork/relcore.hpp"

namespace naive {

using Rel = std::set<std::pair<std::size_t, std::size_t>>;

inline Rel from(const relfork::FiniteRelation& r) {
  Rel out;
  for (std::size_t a = 0; a < r.base_size(); ++a)
    for (std::size_t b = 0; b < r.base_size(); ++b)
      if (r.contains(a, b)) out.insert({a, b});
  return out;
}

inline Rel compose(const Rel& r, const Rel& s) {
  Rel out;
  for (const auto& [a, c] : r)
    for (const auto& [c2, b] : s)
      if (c == c2) out.insert({a, b});
  return out;
}

inline Rel converse(const Rel& r) {
  Rel out;
  for (const auto& [a, b] : r) out.insert({b, a});
  return out;
}

inline Rel meet(const Rel& r, const Rel& s) {
  Rel out;
  for (const auto& p : r)
    if (s.count(p)) out.insert(p);
  return out;
}

inline Rel join(Rel r, const Rel& s) {
  r.insert(s.begin(), s.end());
  return r;
}

inline bool subset(const Rel& r, const Rel& s) {
  for (const auto& p : r)
    if (!s.count(p)) return false;
  return true;
}

}  // namespace naive
