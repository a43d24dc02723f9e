#pragma once

// Finite binary relations and finite proper relation algebras.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace relfork {

inline constexpr std::size_t kMaxBase = 16;
inline constexpr std::size_t kMaxCarrier = std::size_t{1} << 16;
// Largest n for which full_pra(n) is enumerable under kMaxCarrier.
inline constexpr std::size_t kMaxFullBase = 4;

using Pair = std::pair<std::size_t, std::size_t>;

/// A binary relation on {0..base_size-1}, stored as one bit row per element.
class FiniteRelation {
 public:
  using Row = std::uint16_t;

  FiniteRelation() = default;
  explicit FiniteRelation(std::size_t base_size);
  FiniteRelation(std::size_t base_size, std::initializer_list<Pair> pairs);
  FiniteRelation(std::size_t base_size, std::span<const Pair> pairs);

  static FiniteRelation full(std::size_t base_size);
  static FiniteRelation identity(std::size_t base_size);
  // Bit a*n+b of `code` is the pair (a,b); requires base_size^2 <= 64.
  static FiniteRelation from_code(std::size_t base_size, std::uint64_t code);

  std::size_t base_size() const noexcept { return base_; }
  bool contains(std::size_t a, std::size_t b) const;
  void insert(std::size_t a, std::size_t b);
  Row row(std::size_t a) const { return rows_[a]; }
  void set_row(std::size_t a, Row bits);

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  std::vector<Pair> pairs() const;
  bool subset_of(const FiniteRelation& other) const;
  std::uint64_t code() const;  // inverse of from_code

  std::string to_string() const;

  friend bool operator==(const FiniteRelation&, const FiniteRelation&) = default;
  // Canonical order: base size, then the pair code read as a binary number.
  friend std::strong_ordering operator<=>(const FiniteRelation& x,
                                          const FiniteRelation& y);

 private:
  std::size_t base_ = 0;
  std::array<Row, kMaxBase> rows_{};
};

enum class BoolOp { Union, Meet, Complement };

FiniteRelation bool_op(BoolOp kind, const FiniteRelation& r,
                       const std::optional<FiniteRelation>& s,
                       const FiniteRelation& unit);
FiniteRelation join(const FiniteRelation& r, const FiniteRelation& s);
FiniteRelation meet(const FiniteRelation& r, const FiniteRelation& s);
FiniteRelation complement(const FiniteRelation& r, const FiniteRelation& unit);
FiniteRelation compose(const FiniteRelation& r, const FiniteRelation& s);
FiniteRelation converse(const FiniteRelation& r);

/// A finite proper relation algebra. Values are validated on construction
/// and immutable afterwards.
class AlgebraModel {
 public:
  // Validates membership of the distinguished elements, containment in the
  // unit and (for carriers up to kVerifyClosureLimit) closure under all five
  // operations.
  static AlgebraModel make(std::size_t base_size,
                           std::vector<FiniteRelation> carrier,
                           FiniteRelation unit, FiniteRelation identity);

  static constexpr std::size_t kVerifyClosureLimit = 4096;

  std::size_t base_size() const noexcept { return base_; }
  const std::vector<FiniteRelation>& carrier() const noexcept { return carrier_; }
  const FiniteRelation& unit() const noexcept { return unit_; }
  const FiniteRelation& identity() const noexcept { return identity_; }
  const FiniteRelation& empty() const noexcept { return empty_; }
  bool is_full() const noexcept { return full_; }
  bool contains(const FiniteRelation& r) const;

  FiniteRelation complement(const FiniteRelation& r) const;

 private:
  friend AlgebraModel full_pra(std::size_t n);
  friend AlgebraModel generate_subalgebra(std::size_t, std::span<const FiniteRelation>,
                                          std::size_t);
  friend AlgebraModel direct_product(const AlgebraModel&, const AlgebraModel&,
                                     std::size_t);

  AlgebraModel(std::size_t base, std::vector<FiniteRelation> carrier,
               FiniteRelation unit, FiniteRelation identity);

  std::size_t base_ = 0;
  std::vector<FiniteRelation> carrier_;  // sorted, unique
  FiniteRelation unit_;
  FiniteRelation identity_;
  FiniteRelation empty_;
  bool full_ = false;
};

AlgebraModel full_pra(std::size_t n);

/// x with 1;x;1 = x, in canonical order.
std::vector<FiniteRelation> ideal_elements(const AlgebraModel& m);

enum class AlgebraKind { Trivial, Prime, NonSimple };

struct Classification {
  std::size_t ideal_count = 0;
  bool simple = false;
  bool trivial = false;
  bool prime = false;
  AlgebraKind kind = AlgebraKind::NonSimple;
};

Classification classify(const AlgebraModel& m);
const char* to_string(AlgebraKind kind);

/// Least subalgebra of full_pra(n)'s operations containing `generators`
/// together with 0, 1' and n x n.
AlgebraModel generate_subalgebra(std::size_t n,
                                 std::span<const FiniteRelation> generators,
                                 std::size_t cap = kMaxCarrier);

/// Direct product realised over the disjoint union of the two base sets;
/// the unit is the union of the component units.
AlgebraModel direct_product(const AlgebraModel& left, const AlgebraModel& right,
                            std::size_t cap = kMaxCarrier);

// Helpers for the disjoint-union encoding used by direct_product.
FiniteRelation embed_product(const FiniteRelation& left, const FiniteRelation& right);
std::pair<FiniteRelation, FiniteRelation> split_product(const FiniteRelation& r,
                                                        std::size_t left_base);

}  // namespace relfork
