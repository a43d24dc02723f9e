#pragma once

// Countable fork-algebra backend over N: pairing functions, fork,
// projections, urelement relations, underline terms and fixpoint queries.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relfork/btree.hpp"
#include "relfork/lazy_relation.hpp"
#include "relfork/nat.hpp"
#include "relfork/random.hpp"
#include "relfork/seq.hpp"
#include "relfork/term.hpp"

namespace relfork {

// An injective star: N x N -> N together with its partial inverse.
// unstar(u) is empty exactly for urelements.
class PairingFunction {
 public:
  using StarFn = std::function<Nat(const Nat&, const Nat&)>;
  using UnstarFn = std::function<std::optional<NatPair>(const Nat&)>;

  PairingFunction(StarFn star, UnstarFn unstar, std::string description);

  Nat star(const Nat& x, const Nat& y) const { return star_(x, y); }
  std::optional<NatPair> unstar(const Nat& u) const { return unstar_(u); }
  bool is_urelement(const Nat& u) const { return !unstar_(u).has_value(); }
  const std::string& description() const noexcept { return description_; }

 private:
  StarFn star_;
  UnstarFn unstar_;
  std::string description_;
};

// r # s = {(a, x*y) : a r x and a s y}
LazyRelation fork(const LazyRelation& r, const LazyRelation& s, const PairingFunction& pf);

struct Projections {
  LazyRelation pi;   // (u, x) when unstar(u) = (x, _)
  LazyRelation rho;  // (u, y) when unstar(u) = (_, y)
};
Projections projections(const PairingFunction& pf);

struct UrelementRelations {
  LazyRelation id_u;  // identity on urelements
  LazyRelation u1u;   // all pairs of urelements
};
UrelementRelations urelement_relations(const PairingFunction& pf);

Nat tree_map_star(const BT& t, const PairingFunction& pf, const Nat& u);

// (u, v) iff v = map(t, star, u).
LazyRelation underline_t(const BT& t, const PairingFunction& pf);
// (u, v) iff following the projections of s from u (head first) ends at v.
LazyRelation underline_s(const Seq& s, const PairingFunction& pf);
std::optional<Nat> follow_seq(const Seq& s, const PairingFunction& pf, const Nat& u);

// Throws "nil-control" for t = nil.
std::vector<Nat> fix_t_members(const BT& t, const PairingFunction& pf, const std::vector<Nat>& region);
std::vector<Nat> fix_pi_members(const PairingFunction& pf, const std::vector<Nat>& region, Proj which);
std::vector<Nat> fix_s_members(const Seq& s, const PairingFunction& pf, const std::vector<Nat>& region);

std::vector<Nat> range_region(std::uint64_t begin, std::uint64_t end);

// a is a subidentity whose points all satisfy bound(u, u). Throws when a
// has no finite support.
bool si_member(const LazyRelation& a, const LazyRelation& bound);

// A permutation of N that moves only finitely many points.
class FinitePerm {
 public:
  FinitePerm() = default;
  // Throws "not-a-bijection" unless the map permutes its own key set.
  explicit FinitePerm(std::map<Nat, Nat> mapping);
  static FinitePerm random(Rng& rng, std::uint64_t bound, std::size_t moved);

  Nat apply(const Nat& x) const;
  Nat inverse(const Nat& x) const;
  const std::map<Nat, Nat>& mapping() const noexcept { return forward_; }

 private:
  std::map<Nat, Nat> forward_;
  std::map<Nat, Nat> backward_;
};

struct Conjugate {
  PairingFunction pf;  // perm . star . (perm^-1 x perm^-1)
  std::function<LazyRelation(const LazyRelation&)> transport;
};
Conjugate conjugate(const PairingFunction& pf, const FinitePerm& perm);

// Evaluation of terms over the fork backend; 1 is N x N.
using LazyEnv = std::map<std::string, LazyRelation>;
LazyRelation eval_lazy(const Term& t, const LazyEnv& env, const PairingFunction& pf);

struct LazyCheckOptions {
  std::uint64_t support_bound = 64;  // random supports lie in [0, bound)^2
  std::uint64_t trials = 200;
  std::uint64_t seed = 0;
  std::uint64_t window = 1000;           // for successor comparisons
  std::uint64_t urelement_bound = 1000;  // search bound for 1;x;1 = 1
};

struct AxiomResult {
  std::string name;
  std::string formula;
  enum class Status { Pass, Fail, Undecidable } status = Status::Pass;
  std::uint64_t instances = 0;
  std::string witness;  // counterexample, or the urelement found
};

const char* to_string(AxiomResult::Status s);

// Random finitely supported relation with at most max_pairs pairs inside
// [0, bound)^2, drawn from a few left points so that forks are non-trivial.
LazyRelation random_finite_relation(Rng& rng, std::uint64_t bound, std::size_t max_pairs = 8);

// Checks one formula on `trials` random finitely supported assignments
// (once when it has no variables). Equations of the shape 1;x;1 = 1 are
// decided by searching a witness of x below urelement_bound. Variables
// bound in `fixed` keep their value; if every variable is bound the formula
// is checked once.
AxiomResult check_formula_lazy(const Formula& f, const PairingFunction& pf, const LazyCheckOptions& opts,
                               const std::string& name = "", const LazyEnv& fixed = {});

// Fork axioms 1-3 and the urelement axiom.
std::vector<AxiomResult> cfa_axiom_check(const PairingFunction& pf, const LazyCheckOptions& opts);

}  // namespace relfork
