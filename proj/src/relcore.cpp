#include "relfork/relcore.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "relfork/error.hpp"

namespace relfork {

namespace {

void check_base(std::size_t n) {
  if (n > kMaxBase) {
    throw Error("cap-exceeded", "base size " + std::to_string(n) +
                                    " exceeds the limit of " + std::to_string(kMaxBase));
  }
}

void check_same_base(const FiniteRelation& r, const FiniteRelation& s) {
  if (r.base_size() != s.base_size()) {
    throw Error("base-size-mismatch", "operands have base sizes " +
                                          std::to_string(r.base_size()) + " and " +
                                          std::to_string(s.base_size()));
  }
}

FiniteRelation::Row full_row(std::size_t n) {
  return static_cast<FiniteRelation::Row>((std::uint32_t{1} << n) - 1);
}

}  // namespace

FiniteRelation::FiniteRelation(std::size_t base_size) : base_(base_size) {
  check_base(base_size);
}

FiniteRelation::FiniteRelation(std::size_t base_size, std::initializer_list<Pair> pairs)
    : FiniteRelation(base_size, std::span<const Pair>(pairs.begin(), pairs.size())) {}

FiniteRelation::FiniteRelation(std::size_t base_size, std::span<const Pair> pairs)
    : FiniteRelation(base_size) {
  for (const auto& [a, b] : pairs) insert(a, b);
}

FiniteRelation FiniteRelation::full(std::size_t base_size) {
  FiniteRelation r(base_size);
  for (std::size_t a = 0; a < base_size; ++a) r.rows_[a] = full_row(base_size);
  return r;
}

FiniteRelation FiniteRelation::identity(std::size_t base_size) {
  FiniteRelation r(base_size);
  for (std::size_t a = 0; a < base_size; ++a) r.rows_[a] = static_cast<Row>(1u << a);
  return r;
}

FiniteRelation FiniteRelation::from_code(std::size_t base_size, std::uint64_t code) {
  if (base_size * base_size > 64) {
    throw Error("cap-exceeded", "pair codes only cover base sizes up to 8");
  }
  FiniteRelation r(base_size);
  for (std::size_t a = 0; a < base_size; ++a) {
    r.rows_[a] = static_cast<Row>((code >> (a * base_size)) & full_row(base_size));
  }
  return r;
}

std::uint64_t FiniteRelation::code() const {
  if (base_ * base_ > 64) {
    throw Error("cap-exceeded", "pair codes only cover base sizes up to 8");
  }
  std::uint64_t c = 0;
  for (std::size_t a = 0; a < base_; ++a) c |= std::uint64_t{rows_[a]} << (a * base_);
  return c;
}

bool FiniteRelation::contains(std::size_t a, std::size_t b) const {
  return a < base_ && b < base_ && ((rows_[a] >> b) & 1u) != 0;
}

void FiniteRelation::insert(std::size_t a, std::size_t b) {
  if (a >= base_ || b >= base_) {
    throw Error("out-of-range", "pair (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") outside base of size " + std::to_string(base_));
  }
  rows_[a] = static_cast<Row>(rows_[a] | (1u << b));
}

void FiniteRelation::set_row(std::size_t a, Row bits) {
  if (a >= base_ || (bits & ~full_row(base_)) != 0) {
    throw Error("out-of-range", "row outside base");
  }
  rows_[a] = bits;
}

std::size_t FiniteRelation::size() const noexcept {
  std::size_t n = 0;
  for (std::size_t a = 0; a < base_; ++a) n += static_cast<std::size_t>(std::popcount(rows_[a]));
  return n;
}

bool FiniteRelation::empty() const noexcept {
  return std::all_of(rows_.begin(), rows_.end(), [](Row r) { return r == 0; });
}

std::vector<Pair> FiniteRelation::pairs() const {
  std::vector<Pair> out;
  for (std::size_t a = 0; a < base_; ++a) {
    for (std::size_t b = 0; b < base_; ++b) {
      if ((rows_[a] >> b) & 1u) out.emplace_back(a, b);
    }
  }
  return out;
}

bool FiniteRelation::subset_of(const FiniteRelation& other) const {
  check_same_base(*this, other);
  for (std::size_t a = 0; a < base_; ++a) {
    if ((rows_[a] & ~other.rows_[a]) != 0) return false;
  }
  return true;
}

std::string FiniteRelation::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [a, b] : pairs()) {
    if (!first) out << ',';
    first = false;
    out << '(' << a << ',' << b << ')';
  }
  out << '}';
  return out.str();
}

std::strong_ordering operator<=>(const FiniteRelation& x, const FiniteRelation& y) {
  if (auto c = x.base_ <=> y.base_; c != 0) return c;
  for (std::size_t a = kMaxBase; a-- > 0;) {
    if (auto c = x.rows_[a] <=> y.rows_[a]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

FiniteRelation bool_op(BoolOp kind, const FiniteRelation& r,
                       const std::optional<FiniteRelation>& s,
                       const FiniteRelation& unit) {
  check_same_base(r, unit);
  switch (kind) {
    case BoolOp::Complement:
      return complement(r, unit);
    case BoolOp::Union:
    case BoolOp::Meet:
      if (!s) throw Error("missing-operand", "binary Boolean operation needs two operands");
      return kind == BoolOp::Union ? join(r, *s) : meet(r, *s);
  }
  throw Error("internal", "unknown Boolean operation");
}

FiniteRelation join(const FiniteRelation& r, const FiniteRelation& s) {
  check_same_base(r, s);
  FiniteRelation out(r.base_size());
  for (std::size_t a = 0; a < r.base_size(); ++a) {
    out.set_row(a, static_cast<FiniteRelation::Row>(r.row(a) | s.row(a)));
  }
  return out;
}

FiniteRelation meet(const FiniteRelation& r, const FiniteRelation& s) {
  check_same_base(r, s);
  FiniteRelation out(r.base_size());
  for (std::size_t a = 0; a < r.base_size(); ++a) {
    out.set_row(a, static_cast<FiniteRelation::Row>(r.row(a) & s.row(a)));
  }
  return out;
}

FiniteRelation complement(const FiniteRelation& r, const FiniteRelation& unit) {
  check_same_base(r, unit);
  FiniteRelation out(r.base_size());
  for (std::size_t a = 0; a < r.base_size(); ++a) {
    out.set_row(a, static_cast<FiniteRelation::Row>(unit.row(a) & ~r.row(a)));
  }
  return out;
}

FiniteRelation compose(const FiniteRelation& r, const FiniteRelation& s) {
  check_same_base(r, s);
  FiniteRelation out(r.base_size());
  for (std::size_t a = 0; a < r.base_size(); ++a) {
    FiniteRelation::Row acc = 0;
    for (auto bits = r.row(a); bits != 0; bits = static_cast<FiniteRelation::Row>(bits & (bits - 1))) {
      acc = static_cast<FiniteRelation::Row>(acc | s.row(static_cast<std::size_t>(std::countr_zero(bits))));
    }
    out.set_row(a, acc);
  }
  return out;
}

FiniteRelation converse(const FiniteRelation& r) {
  FiniteRelation out(r.base_size());
  for (const auto& [a, b] : r.pairs()) out.insert(b, a);
  return out;
}

// ---------------------------------------------------------------------------

AlgebraModel::AlgebraModel(std::size_t base, std::vector<FiniteRelation> carrier,
                           FiniteRelation unit, FiniteRelation identity)
    : base_(base),
      carrier_(std::move(carrier)),
      unit_(std::move(unit)),
      identity_(std::move(identity)),
      empty_(base) {
  std::sort(carrier_.begin(), carrier_.end());
  carrier_.erase(std::unique(carrier_.begin(), carrier_.end()), carrier_.end());
  full_ = unit_ == FiniteRelation::full(base_) && base_ * base_ < 64 &&
          carrier_.size() == (std::size_t{1} << (base_ * base_));
}

AlgebraModel AlgebraModel::make(std::size_t base_size, std::vector<FiniteRelation> carrier,
                                FiniteRelation unit, FiniteRelation identity) {
  check_base(base_size);
  if (carrier.size() > kMaxCarrier) {
    throw Error("cap-exceeded", "carrier has more than " + std::to_string(kMaxCarrier) +
                                    " elements");
  }
  for (const auto& r : carrier) {
    if (r.base_size() != base_size) {
      throw Error("base-size-mismatch", "carrier element " + r.to_string() +
                                            " is not on base " + std::to_string(base_size));
    }
  }
  if (unit.base_size() != base_size || identity.base_size() != base_size) {
    throw Error("base-size-mismatch", "unit or identity is on the wrong base");
  }
  AlgebraModel m(base_size, std::move(carrier), std::move(unit), std::move(identity));
  for (const auto* d : {&m.empty_, &m.unit_, &m.identity_}) {
    if (!m.contains(*d)) {
      throw Error("invalid-model", "distinguished element " + d->to_string() +
                                       " is missing from the carrier");
    }
  }
  for (const auto& r : m.carrier_) {
    if (!r.subset_of(m.unit_)) {
      throw Error("invalid-model", "carrier element " + r.to_string() + " is not below the unit");
    }
  }
  if (m.carrier_.size() <= kVerifyClosureLimit) {
    auto require = [&](const FiniteRelation& r, const char* op) {
      if (!m.contains(r)) {
        throw Error("invalid-model", std::string("carrier not closed under ") + op +
                                         ": missing " + r.to_string());
      }
    };
    for (const auto& x : m.carrier_) {
      require(m.complement(x), "complement");
      require(converse(x), "converse");
      for (const auto& y : m.carrier_) {
        require(join(x, y), "union");
        require(meet(x, y), "meet");
        require(compose(x, y), "composition");
      }
    }
  } else {
    throw Error("cap-exceeded", "closure of carriers above " +
                                    std::to_string(kVerifyClosureLimit) +
                                    " elements is not verified; use full_pra or "
                                    "generate_subalgebra");
  }
  return m;
}

bool AlgebraModel::contains(const FiniteRelation& r) const {
  if (r.base_size() != base_) return false;
  if (full_) return true;
  return std::binary_search(carrier_.begin(), carrier_.end(), r);
}

FiniteRelation AlgebraModel::complement(const FiniteRelation& r) const {
  return relfork::complement(r, unit_);
}

AlgebraModel full_pra(std::size_t n) {
  if (n > kMaxFullBase) {
    throw Error("cap-exceeded", "full_pra(" + std::to_string(n) +
                                    ") has too many elements to enumerate (limit n <= " +
                                    std::to_string(kMaxFullBase) + ")");
  }
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  std::vector<FiniteRelation> carrier;
  carrier.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    carrier.push_back(FiniteRelation::from_code(n, code));
  }
  return AlgebraModel(n, std::move(carrier), FiniteRelation::full(n),
                      FiniteRelation::identity(n));
}

std::vector<FiniteRelation> ideal_elements(const AlgebraModel& m) {
  std::vector<FiniteRelation> out;
  for (const auto& x : m.carrier()) {
    if (compose(m.unit(), compose(x, m.unit())) == x) out.push_back(x);
  }
  return out;
}

Classification classify(const AlgebraModel& m) {
  Classification c;
  c.ideal_count = ideal_elements(m).size();
  c.simple = c.ideal_count <= 2;
  c.trivial = m.carrier().size() == 1 || m.carrier().size() == 2;
  c.prime = c.simple && !c.trivial;
  c.kind = c.trivial ? AlgebraKind::Trivial
                     : (c.prime ? AlgebraKind::Prime : AlgebraKind::NonSimple);
  return c;
}

const char* to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Trivial: return "trivial";
    case AlgebraKind::Prime: return "prime";
    case AlgebraKind::NonSimple: return "not-simple";
  }
  return "?";
}

AlgebraModel generate_subalgebra(std::size_t n, std::span<const FiniteRelation> generators,
                                 std::size_t cap) {
  check_base(n);
  const FiniteRelation unit = FiniteRelation::full(n);
  std::set<FiniteRelation> seen;
  std::vector<FiniteRelation> elems;
  std::vector<FiniteRelation> work;

  auto add = [&](const FiniteRelation& r) {
    if (seen.insert(r).second) {
      if (seen.size() > cap) {
        throw Error("cap-exceeded", "generated subalgebra exceeds " + std::to_string(cap) +
                                        " elements");
      }
      work.push_back(r);
    }
  };

  add(FiniteRelation(n));
  add(FiniteRelation::identity(n));
  add(unit);
  for (const auto& g : generators) {
    if (g.base_size() != n) {
      throw Error("base-size-mismatch", "generator " + g.to_string() + " is not on base " +
                                            std::to_string(n));
    }
    add(g);
  }

  // Worklist closure: each element is combined with everything found before
  // it (both argument orders) exactly once.
  while (!work.empty()) {
    FiniteRelation x = work.back();
    work.pop_back();
    elems.push_back(x);
    add(complement(x, unit));
    add(converse(x));
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const FiniteRelation y = elems[i];
      add(join(x, y));
      add(meet(x, y));
      add(compose(x, y));
      add(compose(y, x));
    }
  }

  return AlgebraModel(n, std::vector<FiniteRelation>(seen.begin(), seen.end()), unit,
                      FiniteRelation::identity(n));
}

FiniteRelation embed_product(const FiniteRelation& left, const FiniteRelation& right) {
  const std::size_t n1 = left.base_size();
  FiniteRelation out(n1 + right.base_size());
  for (std::size_t a = 0; a < n1; ++a) out.set_row(a, left.row(a));
  for (std::size_t a = 0; a < right.base_size(); ++a) {
    out.set_row(n1 + a, static_cast<FiniteRelation::Row>(right.row(a) << n1));
  }
  return out;
}

std::pair<FiniteRelation, FiniteRelation> split_product(const FiniteRelation& r,
                                                        std::size_t left_base) {
  if (left_base > r.base_size()) {
    throw Error("base-size-mismatch", "left base exceeds the product base");
  }
  const std::size_t n2 = r.base_size() - left_base;
  const auto left_mask = static_cast<FiniteRelation::Row>((1u << left_base) - 1);
  FiniteRelation left(left_base);
  FiniteRelation right(n2);
  for (std::size_t a = 0; a < left_base; ++a) {
    left.set_row(a, static_cast<FiniteRelation::Row>(r.row(a) & left_mask));
  }
  for (std::size_t a = 0; a < n2; ++a) {
    right.set_row(a, static_cast<FiniteRelation::Row>(r.row(left_base + a) >> left_base));
  }
  return {left, right};
}

AlgebraModel direct_product(const AlgebraModel& left, const AlgebraModel& right,
                            std::size_t cap) {
  const std::size_t n = left.base_size() + right.base_size();
  check_base(n);
  const std::size_t size = left.carrier().size() * right.carrier().size();
  if (size > cap) {
    throw Error("cap-exceeded", "product carrier of " + std::to_string(size) +
                                    " elements exceeds " + std::to_string(cap));
  }
  std::vector<FiniteRelation> carrier;
  carrier.reserve(size);
  for (const auto& x : left.carrier()) {
    for (const auto& y : right.carrier()) carrier.push_back(embed_product(x, y));
  }
  return AlgebraModel(n, std::move(carrier), embed_product(left.unit(), right.unit()),
                      embed_product(left.identity(), right.identity()));
}

}  // namespace relfork
