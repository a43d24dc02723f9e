#pragma once

// Relations on N given intensionally: a membership predicate, plus
// optionally an exact finite support and successor/predecessor enumerators.
// Operations propagate whichever of these stay computable.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relfork/nat.hpp"

namespace relfork {

class LazyRelation {
 public:
  using Pred = std::function<bool(const Nat&, const Nat&)>;
  // Enumerators return sorted, duplicate-free vectors.
  using Enum = std::function<std::vector<Nat>(const Nat&)>;

  struct Parts {
    Pred contains;
    Enum successors;    // optional
    Enum predecessors;  // optional
  };

  explicit LazyRelation(Parts parts);
  static LazyRelation finite(std::vector<NatPair> pairs);
  static LazyRelation empty();
  static LazyRelation full();
  static LazyRelation identity();

  bool contains(const Nat& a, const Nat& b) const { return impl_->contains(a, b); }

  bool has_support() const noexcept { return impl_->support.has_value(); }
  const std::vector<NatPair>& support() const;  // sorted

  bool has_successors() const noexcept { return static_cast<bool>(impl_->successors); }
  bool has_predecessors() const noexcept { return static_cast<bool>(impl_->predecessors); }
  std::vector<Nat> successors(const Nat& a) const;
  std::vector<Nat> predecessors(const Nat& b) const;

 private:
  struct Impl {
    Pred contains;
    Enum successors;
    Enum predecessors;
    std::optional<std::vector<NatPair>> support;
    std::map<Nat, std::vector<Nat>> forward;
    std::map<Nat, std::vector<Nat>> backward;
  };
  LazyRelation() = default;
  std::shared_ptr<const Impl> impl_;
};

LazyRelation join(const LazyRelation& r, const LazyRelation& s);
LazyRelation meet(const LazyRelation& r, const LazyRelation& s);
LazyRelation complement(const LazyRelation& r);  // with respect to N x N
LazyRelation converse(const LazyRelation& r);
// Throws "undecidable-composition" unless r enumerates successors or s
// enumerates predecessors.
LazyRelation compose(const LazyRelation& r, const LazyRelation& s);

using WindowPairs = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

inline constexpr std::uint64_t kMaxWindow = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMaxWindowScan = std::uint64_t{1} << 24;

// {(a,b) : a,b < n, rel(a,b)}, sorted. Uses successors when available;
// otherwise scans n^2 pairs (capped at kMaxWindowScan).
WindowPairs window(const LazyRelation& rel, std::uint64_t n);

// A pair on which the two relations differ. Exact when both are finitely
// supported; when both enumerate successors, compares the successor sets of
// [0,n) and of the left points of `extra`; otherwise tests the support pairs
// of either side, `extra`, and every pair of [0,scan_n)^2.
std::optional<NatPair> find_difference(const LazyRelation& a, const LazyRelation& b, std::uint64_t n,
                                       const std::vector<NatPair>& extra = {},
                                       std::optional<std::uint64_t> scan_n = std::nullopt);

}  // namespace relfork
