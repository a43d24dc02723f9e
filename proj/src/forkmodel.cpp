#include "relfork/forkmodel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "relfork/error.hpp"
#include "relfork/suites.hpp"

namespace relfork {

PairingFunction::PairingFunction(StarFn star, UnstarFn unstar, std::string description)
    : star_(std::move(star)), unstar_(std::move(unstar)), description_(std::move(description)) {}

namespace {

void normalize(std::vector<Nat>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

LazyRelation fork(const LazyRelation& r, const LazyRelation& s, const PairingFunction& pf) {
  if (r.has_support() && s.has_support()) {
    std::vector<NatPair> pairs;
    std::set<Nat> domain;
    for (const auto& [a, x] : r.support()) domain.insert(a);
    for (const auto& a : domain) {
      auto ys = s.successors(a);
      for (const auto& x : r.successors(a)) {
        for (const auto& y : ys) pairs.emplace_back(a, pf.star(x, y));
      }
    }
    return LazyRelation::finite(std::move(pairs));
  }
  LazyRelation::Parts p;
  p.contains = [r, s, pf](const Nat& a, const Nat& b) {
    auto xy = pf.unstar(b);
    return xy && r.contains(a, xy->first) && s.contains(a, xy->second);
  };
  if (r.has_successors() && s.has_successors()) {
    p.successors = [r, s, pf](const Nat& a) {
      std::vector<Nat> out;
      auto ys = s.successors(a);
      for (const auto& x : r.successors(a)) {
        for (const auto& y : ys) out.push_back(pf.star(x, y));
      }
      normalize(out);
      return out;
    };
  }
  if (r.has_predecessors() || s.has_predecessors()) {
    p.predecessors = [r, s, pf](const Nat& b) {
      std::vector<Nat> out;
      auto xy = pf.unstar(b);
      if (!xy) return out;
      const auto& [x, y] = *xy;
      if (r.has_predecessors()) {
        for (auto& a : r.predecessors(x)) {
          if (s.contains(a, y)) out.push_back(std::move(a));
        }
      } else {
        for (auto& a : s.predecessors(y)) {
          if (r.contains(a, x)) out.push_back(std::move(a));
        }
      }
      return out;
    };
  }
  return LazyRelation(std::move(p));
}

Projections projections(const PairingFunction& pf) {
  auto make = [&pf](bool first) {
    LazyRelation::Parts p;
    p.contains = [pf, first](const Nat& u, const Nat& x) {
      auto xy = pf.unstar(u);
      return xy && (first ? xy->first : xy->second) == x;
    };
    p.successors = [pf, first](const Nat& u) {
      auto xy = pf.unstar(u);
      if (!xy) return std::vector<Nat>{};
      return std::vector<Nat>{first ? xy->first : xy->second};
    };
    return LazyRelation(std::move(p));
  };
  return {make(true), make(false)};
}

UrelementRelations urelement_relations(const PairingFunction& pf) {
  LazyRelation::Parts id;
  id.contains = [pf](const Nat& u, const Nat& v) { return u == v && pf.is_urelement(u); };
  id.successors = [pf](const Nat& u) {
    return pf.is_urelement(u) ? std::vector<Nat>{u} : std::vector<Nat>{};
  };
  id.predecessors = id.successors;
  LazyRelation::Parts all;
  all.contains = [pf](const Nat& u, const Nat& v) { return pf.is_urelement(u) && pf.is_urelement(v); };
  return {LazyRelation(std::move(id)), LazyRelation(std::move(all))};
}

Nat tree_map_star(const BT& t, const PairingFunction& pf, const Nat& u) {
  if (t.is_nil()) return u;
  return pf.star(tree_map_star(t.left(), pf, u), tree_map_star(t.right(), pf, u));
}

namespace {

// {u : map(t, star, u) = v}
std::vector<Nat> tree_preimages(const BT& t, const PairingFunction& pf, const Nat& v) {
  if (t.is_nil()) return {v};
  auto xy = pf.unstar(v);
  if (!xy) return {};
  auto left = tree_preimages(t.left(), pf, xy->first);
  auto right = tree_preimages(t.right(), pf, xy->second);
  std::vector<Nat> out;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(out));
  return out;
}

}  // namespace

LazyRelation underline_t(const BT& t, const PairingFunction& pf) {
  LazyRelation::Parts p;
  p.contains = [t, pf](const Nat& u, const Nat& v) { return tree_map_star(t, pf, u) == v; };
  p.successors = [t, pf](const Nat& u) { return std::vector<Nat>{tree_map_star(t, pf, u)}; };
  p.predecessors = [t, pf](const Nat& v) { return tree_preimages(t, pf, v); };
  return LazyRelation(std::move(p));
}

std::optional<Nat> follow_seq(const Seq& s, const PairingFunction& pf, const Nat& u) {
  Nat w = u;
  for (Proj p : s.symbols()) {
    auto xy = pf.unstar(w);
    if (!xy) return std::nullopt;
    w = p == Proj::Pi ? xy->first : xy->second;
  }
  return w;
}

LazyRelation underline_s(const Seq& s, const PairingFunction& pf) {
  LazyRelation::Parts p;
  p.contains = [s, pf](const Nat& u, const Nat& v) {
    auto w = follow_seq(s, pf, u);
    return w && *w == v;
  };
  p.successors = [s, pf](const Nat& u) {
    auto w = follow_seq(s, pf, u);
    return w ? std::vector<Nat>{*w} : std::vector<Nat>{};
  };
  return LazyRelation(std::move(p));
}

std::vector<Nat> fix_t_members(const BT& t, const PairingFunction& pf, const std::vector<Nat>& region) {
  if (t.is_nil()) throw Error("nil-control", "fixpoints controlled by nil are every element; use t != nil");
  std::vector<Nat> out;
  for (const auto& u : region) {
    if (tree_map_star(t, pf, u) == u) out.push_back(u);
  }
  return out;
}

std::vector<Nat> fix_pi_members(const PairingFunction& pf, const std::vector<Nat>& region, Proj which) {
  std::vector<Nat> out;
  for (const auto& u : region) {
    auto xy = pf.unstar(u);
    if (xy && (which == Proj::Pi ? xy->first : xy->second) == u) out.push_back(u);
  }
  return out;
}

std::vector<Nat> fix_s_members(const Seq& s, const PairingFunction& pf, const std::vector<Nat>& region) {
  std::vector<Nat> out;
  for (const auto& u : region) {
    auto w = follow_seq(s, pf, u);
    if (w && *w == u) out.push_back(u);
  }
  return out;
}

std::vector<Nat> range_region(std::uint64_t begin, std::uint64_t end) {
  std::vector<Nat> out;
  for (std::uint64_t u = begin; u < end; ++u) out.emplace_back(u);
  return out;
}

bool si_member(const LazyRelation& a, const LazyRelation& bound) {
  if (!a.has_support()) throw Error("no-finite-support", "subidentity test needs a finitely supported relation");
  for (const auto& [u, v] : a.support()) {
    if (u != v || !bound.contains(u, u)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

FinitePerm::FinitePerm(std::map<Nat, Nat> mapping) {
  std::set<Nat> images;
  for (const auto& [x, y] : mapping) {
    if (!mapping.count(y) || !images.insert(y).second) {
      throw Error("not-a-bijection", "permutation is not a bijection on its support (at " + x.str() + " -> " +
                                         y.str() + ")");
    }
    if (x == y) continue;
    forward_.emplace(x, y);
    backward_.emplace(y, x);
  }
}

FinitePerm FinitePerm::random(Rng& rng, std::uint64_t bound, std::size_t moved) {
  std::vector<std::uint64_t> pool(bound);
  for (std::uint64_t i = 0; i < bound; ++i) pool[i] = i;
  moved = std::min<std::size_t>(moved, bound);
  for (std::size_t i = 0; i < moved; ++i) {
    std::swap(pool[i], pool[i + uniform_below(rng, bound - i)]);
  }
  std::vector<std::uint64_t> points(pool.begin(), pool.begin() + static_cast<long>(moved));
  std::vector<std::uint64_t> images = points;
  for (std::size_t i = images.size(); i > 1; --i) std::swap(images[i - 1], images[uniform_below(rng, i)]);
  std::map<Nat, Nat> m;
  for (std::size_t i = 0; i < points.size(); ++i) m.emplace(points[i], images[i]);
  return FinitePerm(std::move(m));
}

Nat FinitePerm::apply(const Nat& x) const {
  auto it = forward_.find(x);
  return it == forward_.end() ? x : it->second;
}

Nat FinitePerm::inverse(const Nat& x) const {
  auto it = backward_.find(x);
  return it == backward_.end() ? x : it->second;
}

Conjugate conjugate(const PairingFunction& pf, const FinitePerm& perm) {
  PairingFunction pf2(
      [pf, perm](const Nat& x, const Nat& y) { return perm.apply(pf.star(perm.inverse(x), perm.inverse(y))); },
      [pf, perm](const Nat& w) -> std::optional<NatPair> {
        auto xy = pf.unstar(perm.inverse(w));
        if (!xy) return std::nullopt;
        return NatPair{perm.apply(xy->first), perm.apply(xy->second)};
      },
      pf.description() + " conjugated");
  auto transport = [perm](const LazyRelation& r) {
    if (r.has_support()) {
      std::vector<NatPair> pairs;
      for (const auto& [a, b] : r.support()) pairs.emplace_back(perm.apply(a), perm.apply(b));
      return LazyRelation::finite(std::move(pairs));
    }
    auto map_all = [perm](std::vector<Nat> xs) {
      for (auto& x : xs) x = perm.apply(x);
      normalize(xs);
      return xs;
    };
    LazyRelation::Parts p;
    p.contains = [r, perm](const Nat& a, const Nat& b) { return r.contains(perm.inverse(a), perm.inverse(b)); };
    if (r.has_successors()) {
      p.successors = [r, perm, map_all](const Nat& a) { return map_all(r.successors(perm.inverse(a))); };
    }
    if (r.has_predecessors()) {
      p.predecessors = [r, perm, map_all](const Nat& b) { return map_all(r.predecessors(perm.inverse(b))); };
    }
    return LazyRelation(std::move(p));
  };
  return {pf2, transport};
}

// ---------------------------------------------------------------------------

LazyRelation eval_lazy(const Term& t, const LazyEnv& env, const PairingFunction& pf) {
  switch (t.kind) {
    case TermKind::Var: {
      auto it = env.find(t.name);
      if (it == env.end()) throw Error("unbound-variable", "unbound variable '" + t.name + "'");
      return it->second;
    }
    case TermKind::Const:
      switch (t.constant) {
        case ConstKind::Zero: return LazyRelation::empty();
        case ConstKind::One: return LazyRelation::full();
        case ConstKind::Id: return LazyRelation::identity();
        case ConstKind::Pi: return projections(pf).pi;
        case ConstKind::Rho: return projections(pf).rho;
        case ConstKind::IdU: return urelement_relations(pf).id_u;
      }
      break;
    case TermKind::Union: return join(eval_lazy(*t.lhs, env, pf), eval_lazy(*t.rhs, env, pf));
    case TermKind::Meet: return meet(eval_lazy(*t.lhs, env, pf), eval_lazy(*t.rhs, env, pf));
    case TermKind::Complement: return complement(eval_lazy(*t.lhs, env, pf));
    case TermKind::Compose: return compose(eval_lazy(*t.lhs, env, pf), eval_lazy(*t.rhs, env, pf));
    case TermKind::Converse: return converse(eval_lazy(*t.lhs, env, pf));
    case TermKind::Fork: return fork(eval_lazy(*t.lhs, env, pf), eval_lazy(*t.rhs, env, pf), pf);
  }
  throw Error("internal", "unknown term kind");
}

const char* to_string(AxiomResult::Status s) {
  switch (s) {
    case AxiomResult::Status::Pass: return "pass";
    case AxiomResult::Status::Fail: return "FAIL";
    case AxiomResult::Status::Undecidable: return "undecidable";
  }
  return "?";
}

LazyRelation random_finite_relation(Rng& rng, std::uint64_t bound, std::size_t max_pairs) {
  std::vector<std::uint64_t> lefts(1 + uniform_below(rng, 4));
  for (auto& a : lefts) a = uniform_below(rng, bound);
  const std::uint64_t n = uniform_below(rng, max_pairs + 1);
  std::vector<NatPair> pairs;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t a = lefts[uniform_below(rng, lefts.size())];
    pairs.emplace_back(a, uniform_below(rng, bound));
  }
  return LazyRelation::finite(std::move(pairs));
}

namespace {

// Extra comparison points for sides that are neither finite nor successor
// enumerable: every pair (a, b) and (a, x*y) built from the points of the
// assignment's supports. Any pair of a fork-shaped term over the assignment
// has this form.
std::vector<NatPair> candidate_pairs(const LazyEnv& env, const PairingFunction& pf) {
  std::set<Nat> lefts;
  std::set<Nat> points;
  for (const auto& [name, rel] : env) {
    if (!rel.has_support()) continue;
    for (const auto& [a, b] : rel.support()) {
      lefts.insert(a);
      points.insert(a);
      points.insert(b);
    }
  }
  std::vector<NatPair> out;
  for (const auto& a : lefts) {
    for (const auto& x : points) {
      out.emplace_back(a, x);
      for (const auto& y : points) out.emplace_back(a, pf.star(x, y));
    }
  }
  return out;
}

struct Context {
  const PairingFunction& pf;
  const LazyCheckOptions& opts;
  const LazyEnv& env;
  std::optional<std::vector<NatPair>> extra;  // computed on demand
  std::string witness;
};

constexpr std::uint64_t kScanWindow = 16;

bool compare(Context& ctx, const LazyRelation& a, const LazyRelation& b, const std::string& what) {
  const bool cheap = (a.has_support() && b.has_support()) || (a.has_successors() && b.has_successors());
  if (!cheap && !ctx.extra) ctx.extra = candidate_pairs(ctx.env, ctx.pf);
  static const std::vector<NatPair> none;
  auto diff = find_difference(a, b, ctx.opts.window, cheap ? none : *ctx.extra, kScanWindow);
  if (diff && ctx.witness.empty()) {
    ctx.witness = what + " differ at (" + diff->first.str() + "," + diff->second.str() + ")";
  }
  return !diff;
}

bool lazy_holds(Context& ctx, const Formula& f) {
  switch (f.kind) {
    case FormulaKind::Eq:
      return compare(ctx, eval_lazy(*f.lhs_term, ctx.env, ctx.pf), eval_lazy(*f.rhs_term, ctx.env, ctx.pf),
                     "sides");
    case FormulaKind::Leq: {
      LazyRelation b = eval_lazy(*f.rhs_term, ctx.env, ctx.pf);
      return compare(ctx, join(eval_lazy(*f.lhs_term, ctx.env, ctx.pf), b), b, "lhs+rhs and rhs");
    }
    case FormulaKind::Not: return !lazy_holds(ctx, *f.lhs);
    case FormulaKind::And: return lazy_holds(ctx, *f.lhs) && lazy_holds(ctx, *f.rhs);
    case FormulaKind::Or: return lazy_holds(ctx, *f.lhs) || lazy_holds(ctx, *f.rhs);
    case FormulaKind::Implies: return !lazy_holds(ctx, *f.lhs) || lazy_holds(ctx, *f.rhs);
  }
  return false;
}

bool is_one(const TermPtr& t) { return t && t->kind == TermKind::Const && t->constant == ConstKind::One; }

// x when f reads 1;x;1 = 1 (either association).
TermPtr ideal_witness_term(const Formula& f) {
  if (f.kind != FormulaKind::Eq || !is_one(f.rhs_term)) return nullptr;
  const Term& l = *f.lhs_term;
  if (l.kind != TermKind::Compose) return nullptr;
  if (is_one(l.rhs) && l.lhs->kind == TermKind::Compose && is_one(l.lhs->lhs)) return l.lhs->rhs;
  if (is_one(l.lhs) && l.rhs->kind == TermKind::Compose && is_one(l.rhs->rhs)) return l.rhs->lhs;
  return nullptr;
}

std::string describe_env(const LazyEnv& env) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, rel] : env) {
    if (!first) out << ' ';
    first = false;
    out << name << "={";
    bool f2 = true;
    for (const auto& [a, b] : rel.support()) {
      if (!f2) out << ',';
      f2 = false;
      out << '(' << a << ',' << b << ')';
    }
    out << '}';
  }
  return out.str();
}

}  // namespace

AxiomResult check_formula_lazy(const Formula& f, const PairingFunction& pf, const LazyCheckOptions& opts,
                               const std::string& name, const LazyEnv& fixed) {
  AxiomResult result;
  result.name = name;
  result.formula = print(f);
  std::set<std::string> vars;
  for (const auto& v : variables(f)) {
    if (!fixed.count(v)) vars.insert(v);
  }
  Rng rng(opts.seed);
  const std::uint64_t instances = vars.empty() ? 1 : opts.trials;
  const TermPtr witness_term = ideal_witness_term(f);
  try {
    for (std::uint64_t i = 0; i < instances; ++i) {
      LazyEnv env = fixed;
      for (const auto& v : vars) env.insert_or_assign(v, random_finite_relation(rng, opts.support_bound));
      ++result.instances;
      if (witness_term) {
        // Over N x N, 1;x;1 = 1 holds iff x is non-empty.
        LazyRelation x = eval_lazy(*witness_term, env, pf);
        std::optional<NatPair> found;
        if (x.has_successors()) {
          for (std::uint64_t a = 0; a < opts.urelement_bound && !found; ++a) {
            auto succ = x.successors(a);
            if (!succ.empty()) found = NatPair{a, succ.front()};
          }
        } else {
          auto w = window(x, std::min<std::uint64_t>(opts.urelement_bound, 4096));
          if (!w.empty()) found = NatPair{w.front().first, w.front().second};
        }
        if (!found) {
          result.status = AxiomResult::Status::Fail;
          result.witness = "no witness below " + std::to_string(opts.urelement_bound);
          if (!env.empty()) result.witness += " for " + describe_env(env);
          return result;
        }
        if (result.witness.empty()) {
          result.witness = "witness (" + found->first.str() + "," + found->second.str() + ")";
        }
        continue;
      }
      Context ctx{pf, opts, env, std::nullopt, {}};
      if (!lazy_holds(ctx, f)) {
        result.status = AxiomResult::Status::Fail;
        result.witness = ctx.witness;
        if (!env.empty()) result.witness += " for " + describe_env(env);
        return result;
      }
    }
  } catch (const Error& e) {
    if (e.code() != "undecidable-composition") throw;
    result.status = AxiomResult::Status::Undecidable;
    result.witness = e.what();
  }
  return result;
}

std::vector<AxiomResult> cfa_axiom_check(const PairingFunction& pf, const LazyCheckOptions& opts) {
  static const char* names[] = {"fork-definition", "fork-composition", "projections", "urelement"};
  const auto suite = axiom_suite("cfau");
  std::vector<AxiomResult> out;
  for (std::size_t i = 0; i < 4; ++i) {
    out.push_back(check_formula_lazy(*suite[kEquationalAxiomCount + i], pf, opts, names[i]));
  }
  return out;
}

}  // namespace relfork
