#include "relfork/lazy_relation.hpp"

#include <algorithm>
#include <set>

#include "relfork/error.hpp"

namespace relfork {

namespace {

void normalize(std::vector<Nat>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

std::vector<Nat> filter(std::vector<Nat> xs, const std::function<bool(const Nat&)>& keep) {
  xs.erase(std::remove_if(xs.begin(), xs.end(), [&](const Nat& x) { return !keep(x); }), xs.end());
  return xs;
}

}  // namespace

LazyRelation::LazyRelation(Parts parts) {
  auto impl = std::make_shared<Impl>();
  impl->contains = std::move(parts.contains);
  impl->successors = std::move(parts.successors);
  impl->predecessors = std::move(parts.predecessors);
  impl_ = std::move(impl);
}

LazyRelation LazyRelation::finite(std::vector<NatPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  auto impl = std::make_shared<Impl>();
  for (const auto& [a, b] : pairs) {
    impl->forward[a].push_back(b);
    impl->backward[b].push_back(a);
  }
  for (auto& [k, v] : impl->backward) normalize(v);
  impl->support = std::move(pairs);
  const Impl* raw = impl.get();
  impl->contains = [raw](const Nat& a, const Nat& b) {
    auto it = raw->forward.find(a);
    return it != raw->forward.end() && std::binary_search(it->second.begin(), it->second.end(), b);
  };
  impl->successors = [raw](const Nat& a) {
    auto it = raw->forward.find(a);
    return it == raw->forward.end() ? std::vector<Nat>{} : it->second;
  };
  impl->predecessors = [raw](const Nat& b) {
    auto it = raw->backward.find(b);
    return it == raw->backward.end() ? std::vector<Nat>{} : it->second;
  };
  LazyRelation r;
  r.impl_ = std::move(impl);
  return r;
}

LazyRelation LazyRelation::empty() { return finite({}); }

LazyRelation LazyRelation::full() {
  return LazyRelation(Parts{[](const Nat&, const Nat&) { return true; }, nullptr, nullptr});
}

LazyRelation LazyRelation::identity() {
  auto self = [](const Nat& a) { return std::vector<Nat>{a}; };
  return LazyRelation(Parts{[](const Nat& a, const Nat& b) { return a == b; }, self, self});
}

const std::vector<NatPair>& LazyRelation::support() const {
  if (!impl_->support) throw Error("no-finite-support", "relation is not finitely supported");
  return *impl_->support;
}

std::vector<Nat> LazyRelation::successors(const Nat& a) const {
  if (!impl_->successors) throw Error("no-successors", "relation does not enumerate successors");
  return impl_->successors(a);
}

std::vector<Nat> LazyRelation::predecessors(const Nat& b) const {
  if (!impl_->predecessors) throw Error("no-predecessors", "relation does not enumerate predecessors");
  return impl_->predecessors(b);
}

LazyRelation join(const LazyRelation& r, const LazyRelation& s) {
  if (r.has_support() && s.has_support()) {
    std::vector<NatPair> pairs = r.support();
    pairs.insert(pairs.end(), s.support().begin(), s.support().end());
    return LazyRelation::finite(std::move(pairs));
  }
  LazyRelation::Parts p;
  p.contains = [r, s](const Nat& a, const Nat& b) { return r.contains(a, b) || s.contains(a, b); };
  if (r.has_successors() && s.has_successors()) {
    p.successors = [r, s](const Nat& a) {
      auto xs = r.successors(a);
      auto ys = s.successors(a);
      xs.insert(xs.end(), ys.begin(), ys.end());
      normalize(xs);
      return xs;
    };
  }
  if (r.has_predecessors() && s.has_predecessors()) {
    p.predecessors = [r, s](const Nat& b) {
      auto xs = r.predecessors(b);
      auto ys = s.predecessors(b);
      xs.insert(xs.end(), ys.begin(), ys.end());
      normalize(xs);
      return xs;
    };
  }
  return LazyRelation(std::move(p));
}

LazyRelation meet(const LazyRelation& r, const LazyRelation& s) {
  if (r.has_support() || s.has_support()) {
    const LazyRelation& fin = r.has_support() ? r : s;
    const LazyRelation& other = r.has_support() ? s : r;
    std::vector<NatPair> pairs;
    for (const auto& [a, b] : fin.support()) {
      if (other.contains(a, b)) pairs.emplace_back(a, b);
    }
    return LazyRelation::finite(std::move(pairs));
  }
  LazyRelation::Parts p;
  p.contains = [r, s](const Nat& a, const Nat& b) { return r.contains(a, b) && s.contains(a, b); };
  if (r.has_successors() || s.has_successors()) {
    const LazyRelation enumer = r.has_successors() ? r : s;
    const LazyRelation other = r.has_successors() ? s : r;
    p.successors = [enumer, other](const Nat& a) {
      return filter(enumer.successors(a), [&](const Nat& b) { return other.contains(a, b); });
    };
  }
  if (r.has_predecessors() || s.has_predecessors()) {
    const LazyRelation enumer = r.has_predecessors() ? r : s;
    const LazyRelation other = r.has_predecessors() ? s : r;
    p.predecessors = [enumer, other](const Nat& b) {
      return filter(enumer.predecessors(b), [&](const Nat& a) { return other.contains(a, b); });
    };
  }
  return LazyRelation(std::move(p));
}

LazyRelation complement(const LazyRelation& r) {
  return LazyRelation(
      LazyRelation::Parts{[r](const Nat& a, const Nat& b) { return !r.contains(a, b); }, nullptr, nullptr});
}

LazyRelation converse(const LazyRelation& r) {
  if (r.has_support()) {
    std::vector<NatPair> pairs;
    for (const auto& [a, b] : r.support()) pairs.emplace_back(b, a);
    return LazyRelation::finite(std::move(pairs));
  }
  LazyRelation::Parts p;
  p.contains = [r](const Nat& a, const Nat& b) { return r.contains(b, a); };
  if (r.has_predecessors()) p.successors = [r](const Nat& a) { return r.predecessors(a); };
  if (r.has_successors()) p.predecessors = [r](const Nat& b) { return r.successors(b); };
  return LazyRelation(std::move(p));
}

LazyRelation compose(const LazyRelation& r, const LazyRelation& s) {
  if (r.has_support() && s.has_successors()) {
    std::vector<NatPair> pairs;
    for (const auto& [a, x] : r.support()) {
      for (auto& b : s.successors(x)) pairs.emplace_back(a, std::move(b));
    }
    return LazyRelation::finite(std::move(pairs));
  }
  if (s.has_support() && r.has_predecessors()) {
    std::vector<NatPair> pairs;
    for (const auto& [x, b] : s.support()) {
      for (auto& a : r.predecessors(x)) pairs.emplace_back(std::move(a), b);
    }
    return LazyRelation::finite(std::move(pairs));
  }
  LazyRelation::Parts p;
  if (r.has_successors()) {
    p.contains = [r, s](const Nat& a, const Nat& b) {
      for (const auto& x : r.successors(a)) {
        if (s.contains(x, b)) return true;
      }
      return false;
    };
  } else if (s.has_predecessors()) {
    p.contains = [r, s](const Nat& a, const Nat& b) {
      for (const auto& x : s.predecessors(b)) {
        if (r.contains(a, x)) return true;
      }
      return false;
    };
  } else {
    throw Error("undecidable-composition",
                "composition needs successors on the left or predecessors on the right");
  }
  if (r.has_successors() && s.has_successors()) {
    p.successors = [r, s](const Nat& a) {
      std::vector<Nat> out;
      for (const auto& x : r.successors(a)) {
        auto ys = s.successors(x);
        out.insert(out.end(), ys.begin(), ys.end());
      }
      normalize(out);
      return out;
    };
  }
  if (r.has_predecessors() && s.has_predecessors()) {
    p.predecessors = [r, s](const Nat& b) {
      std::vector<Nat> out;
      for (const auto& x : s.predecessors(b)) {
        auto ys = r.predecessors(x);
        out.insert(out.end(), ys.begin(), ys.end());
      }
      normalize(out);
      return out;
    };
  }
  return LazyRelation(std::move(p));
}

WindowPairs window(const LazyRelation& rel, std::uint64_t n) {
  if (n > kMaxWindow) {
    throw Error("cap-exceeded", "window of " + std::to_string(n) + " exceeds " + std::to_string(kMaxWindow));
  }
  WindowPairs out;
  if (rel.has_successors()) {
    for (std::uint64_t a = 0; a < n; ++a) {
      for (const auto& b : rel.successors(a)) {
        if (b < n) out.emplace_back(a, static_cast<std::uint64_t>(b));
      }
    }
    return out;
  }
  if (n * n > kMaxWindowScan) {
    throw Error("cap-exceeded", "scanning a " + std::to_string(n) + "^2 window without successor enumeration");
  }
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      if (rel.contains(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::optional<NatPair> find_difference(const LazyRelation& a, const LazyRelation& b, std::uint64_t n,
                                       const std::vector<NatPair>& extra,
                                       std::optional<std::uint64_t> scan_n) {
  if (a.has_support() && b.has_support()) {
    const auto& x = a.support();
    const auto& y = b.support();
    auto ix = x.begin();
    auto iy = y.begin();
    while (ix != x.end() || iy != y.end()) {
      if (iy == y.end() || (ix != x.end() && *ix < *iy)) return *ix;
      if (ix == x.end() || *iy < *ix) return *iy;
      ++ix;
      ++iy;
    }
    return std::nullopt;
  }
  // Pairs of a finite side must be matched exactly by the other side.
  for (const auto* side : {&a, &b}) {
    if (!side->has_support()) continue;
    const auto& other = side == &a ? b : a;
    for (const auto& [u, v] : side->support()) {
      if (!other.contains(u, v)) return NatPair{u, v};
    }
  }
  if (a.has_successors() && b.has_successors()) {
    std::set<Nat> rows;
    for (std::uint64_t u = 0; u < n; ++u) rows.insert(u);
    for (const auto& [u, v] : extra) rows.insert(u);
    for (const auto& u : rows) {
      auto x = a.successors(u);
      auto y = b.successors(u);
      if (x != y) {
        std::vector<Nat> diff;
        std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
        return NatPair{u, diff.front()};
      }
    }
    return std::nullopt;
  }
  for (const auto& [u, v] : extra) {
    if (a.contains(u, v) != b.contains(u, v)) return NatPair{u, v};
  }
  const std::uint64_t m = scan_n.value_or(n);
  if (m * m > kMaxWindowScan) {
    throw Error("cap-exceeded", "comparing a " + std::to_string(m) + "^2 window pointwise");
  }
  for (std::uint64_t u = 0; u < m; ++u) {
    for (std::uint64_t v = 0; v < m; ++v) {
      if (a.contains(u, v) != b.contains(u, v)) return NatPair{Nat(u), Nat(v)};
    }
  }
  return std::nullopt;
}

}  // namespace relfork
