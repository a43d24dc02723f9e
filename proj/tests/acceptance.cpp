// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "random_ast.hpp"
#include "relfork/check.hpp"
#include "relfork/constructions.hpp"
#include "relfork/forkmodel.hpp"
#include "relfork/relcore.hpp"
#include "relfork/suites.hpp"

using namespace relfork;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      else detail.str("");
      pass = false;
      detail << what;
    }
  }
};

const BT N = BT::nil();
BT B(const BT& l, const BT& r) { return BT::bin(l, r); }

std::vector<Nat> nats(std::initializer_list<unsigned> xs) { return {xs.begin(), xs.end()}; }

std::vector<BT> trees_up_to(std::size_t max_internal) {
  std::vector<BT> out;
  for (std::size_t k = 0; k <= max_internal; ++k) {
    auto level = trees_with_internal_nodes(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// fix_t restricted to `region`; every point is fixed by nil.
std::vector<Nat> fix_t_or_all(const BT& t, const PairingFunction& pf, const std::vector<Nat>& region) {
  return t.is_nil() ? region : fix_t_members(t, pf, region);
}

std::vector<Nat> intersect(const std::vector<Nat>& a, const std::vector<Nat>& b) {
  std::vector<Nat> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset(const std::vector<Nat>& a, const std::vector<Nat>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string braces(const std::vector<Nat>& xs) { return "{" + join_nats(xs) + "}"; }

void c1(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t exhaustive = 0;
  for (std::size_t n = 0; n <= 2; ++n) {
    for (const auto& f : axiom_suite("cr_equational")) {
      auto rep = check_formula(*f, full_pra(n), Strategy::exhaustive());
      exhaustive += rep.assignments;
      o.require(rep.valid, print(f) + " fails on full_pra(" + std::to_string(n) + ")");
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 60.0, "exhaustive run took " + std::to_string(secs) + " s");
  std::uint64_t sampled = 0;
  for (const auto& f : axiom_suite("cr_equational")) {
    auto rep = check_formula(*f, full_pra(3), Strategy::sampled(100000, 1));
    sampled += rep.assignments;
    o.require(rep.valid, print(f) + " fails on a sampled full_pra(3) assignment");
  }
  if (o.pass)
    o.detail << exhaustive << " exhaustive assignments on n=0,1,2 in " << secs << " s; " << sampled
             << " sampled on n=3, 0 failures";
}

void c2(Outcome& o) {
  std::uint64_t total = 0;
  const auto suite = axiom_suite("cr_tarski");
  for (std::size_t n = 0; n <= 2; ++n)
    for (const auto& f : suite) {
      auto rep = check_formula(*f, full_pra(n), Strategy::exhaustive());
      total += rep.assignments;
      o.require(rep.valid, print(f) + " fails on full_pra(" + std::to_string(n) + ")");
    }
  auto simplicity = parse_formula("r;1 = 1 \\/ 1;~r = 1");
  o.require(std::any_of(suite.begin(), suite.end(), [&](const FormulaPtr& f) { return equal(f, simplicity); }),
            "simplicity disjunction missing from the suite");
  if (o.pass) o.detail << suite.size() << " axioms, " << total << " assignments on n<=2";
}

void c3(Outcome& o) {
  auto c = Construction::basic(nats({1, 2}));
  auto pf = as_pairing_function(c);
  auto fix = fix_t_members(B(N, N), pf, range_region(0, 1000));
  o.require(fix == nats({1, 2}), "fixpoints on [0,1000) = " + braces(fix));
  for (unsigned x = 0; x < 150; ++x)
    for (unsigned y = 0; y < 150; ++y)
      if (pf.unstar(pf.star(x, y)) != NatPair{x, y}) {
        o.require(false, "round trip fails at (" + std::to_string(x) + "," + std::to_string(y) + ")");
        return;
      }
  // Unique preimages, counted by brute force over a box that holds every
  // decoded preimage.
  Nat box = 0;
  for (unsigned w = 0; w < 500; ++w) {
    auto xy = pf.unstar(w);
    o.require(xy.has_value(), std::to_string(w) + " has no preimage");
    if (!xy) return;
    box = std::max({box, xy->first + 1, xy->second + 1});
  }
  const auto m = box.convert_to<unsigned>();
  std::vector<unsigned> hits(500, 0);
  for (unsigned x = 0; x < m; ++x)
    for (unsigned y = 0; y < m; ++y) {
      const Nat w = pf.star(x, y);
      if (w < 500) ++hits[w.convert_to<unsigned>()];
    }
  const auto bad = std::count_if(hits.begin(), hits.end(), [](unsigned h) { return h != 1; });
  o.require(bad == 0, std::to_string(bad) + " points below 500 without a unique preimage");
  if (o.pass)
    o.detail << "fix = {1,2} on [0,1000); 22500 round trips; 500 unique preimages in a " << m << "x" << m << " box";
}

void c4(Outcome& o) {
  const BT t = B(B(N, N), N);
  auto c = Construction::tree(nats({0, 1, 2, 3, 4}), t);
  auto pf = as_pairing_function(c);
  for (const auto& s : c->S())
    o.require(tree_map_star(t, pf, s) == s, "map(t,*," + to_string(s) + ") != " + to_string(s));
  const auto region = c->candidate_region();
  auto in_region = fix_t_members(t, pf, region);
  o.require(in_region.size() == 5, "candidate-region count " + std::to_string(in_region.size()));
  std::vector<Nat> outside;
  for (const auto& u : fix_t_members(t, pf, range_region(0, 5000)))
    if (!std::binary_search(region.begin(), region.end(), u)) outside.push_back(u);
  o.require(outside.empty(), "fixpoints outside the candidate region: " + braces(outside));
  if (o.pass) o.detail << "count 5 over " << braces(region) << ", none outside it in [0,5000)";
}

void c5(Outcome& o) {
  LazyCheckOptions opts;
  opts.urelement_bound = 1000;
  for (Proj which : {Proj::Pi, Proj::Rho}) {
    const std::string name = to_string(which);
    auto pf = build_star_proj(nats({3, 4}), which);
    auto fix = fix_pi_members(pf, range_region(0, 1000), which);
    o.require(fix == nats({3, 4}), "fix_" + name + " = " + braces(fix));
    std::optional<unsigned> urelement;
    for (unsigned u = 0; u < 1000 && !urelement; ++u)
      if (pf.is_urelement(u)) urelement = u;
    o.require(urelement.has_value(), "no urelement below 1000 for " + name);
    auto cfau = cfa_axiom_check(pf, opts).back();
    o.require(cfau.status == AxiomResult::Status::Pass, "urelement axiom " + std::string(to_string(cfau.status)) +
                                                            " for " + name + ": " + cfau.witness);
    if (o.pass) o.detail << name << ": fix = {3,4}, first urelement " << *urelement << "; ";
  }
  if (o.pass) o.detail << "urelement axiom passes for both";
}

void c6(Outcome& o) {
  const Seq s = Seq::parse("pi.rho");
  auto c = Construction::seq(nats({0, 1, 2}), s);
  auto pf = as_pairing_function(c);
  auto us = underline_s(s, pf);
  for (const auto& u : c->S()) o.require(us.contains(u, u), "(u,u) not in s for u = " + to_string(u));
  auto count = fix_s_members(s, pf, c->candidate_region());
  o.require(count.size() == 3, "candidate-region fixpoints " + braces(count));
  if (o.pass) o.detail << "fix_s over " << braces(c->candidate_region()) << " = " << braces(count);
}

std::vector<std::shared_ptr<const Construction>> built_stars() {
  return {Construction::basic(nats({1, 2})), Construction::tree(nats({0, 1, 2, 3, 4}), B(B(N, N), N)),
          Construction::proj(nats({3, 4}), Proj::Pi), Construction::proj(nats({3, 4}), Proj::Rho),
          Construction::seq(nats({0, 1, 2}), Seq::parse("pi.rho"))};
}

void c7(Outcome& o) {
  LazyCheckOptions opts;
  opts.trials = 200;
  opts.support_bound = 64;
  opts.seed = 7;
  const auto suite = axiom_suite("cfa");
  std::size_t stars = 0;
  for (const auto& c : built_stars()) {
    auto pf = as_pairing_function(c);
    for (std::size_t i = kEquationalAxiomCount; i < suite.size(); ++i) {
      auto r = check_formula_lazy(*suite[i], pf, opts);
      o.require(r.status == AxiomResult::Status::Pass,
                c->describe() + ": fork axiom " + std::to_string(i - kEquationalAxiomCount + 1) + " " +
                    to_string(r.status) + " " + r.witness);
    }
    ++stars;
  }
  if (o.pass) o.detail << "3 axioms x " << stars << " stars, 200 trials each, supports in [0,64)^2";
}

void c8(Outcome& o) {
  const auto window = range_region(0, 2000);
  std::uint64_t nonvacuous = 0;
  std::size_t ll_pairs = 0;
  for (const auto& c : built_stars()) {
    auto pf = as_pairing_function(c);
    const std::string who = c->describe();

    // fix_s and fix_s' together force fix of the concatenation.
    std::map<Seq, std::vector<Nat>> fix_s;
    for (const auto& s : all_seqs(4)) fix_s[s] = fix_s_members(s, pf, window);
    for (const auto& s1 : all_seqs(2))
      for (const auto& s2 : all_seqs(2)) {
        auto both = intersect(fix_s[s1], fix_s[s2]);
        nonvacuous += both.size();
        o.require(subset(both, fix_s[seq_concat(s1, s2)]),
                  who + ": fix_" + s1.to_string() + " & fix_" + s2.to_string() + " not in fix_concat");
      }

    // s << t implies fix_t within fix_s, on the first ten related pairs.
    std::size_t pairs = 0;
    for (const auto& t : trees_up_to(3)) {
      if (t.is_nil()) continue;
      for (const auto& s : all_seqs(3)) {
        if (pairs == 10 || !ll_rel(s, t)) continue;
        ++pairs;
        auto ft = fix_t_members(t, pf, window);
        nonvacuous += ft.size();
        o.require(subset(ft, fix_s_members(s, pf, window)),
                  who + ": fix_" + t.to_string() + " not in fix_" + s.to_string());
      }
    }
    ll_pairs = pairs;

    // Variants: fix_t & fix_t' within fix_{t''[t]} for t'' in V_t'.
    for (const auto& t : trees_up_to(2)) {
      if (t.is_nil()) continue;
      const auto ft = fix_t_members(t, pf, window);
      for (const auto& t1 : trees_up_to(2)) {
        const auto both = intersect(ft, fix_t_or_all(t1, pf, window));
        for (const auto& ctx : variants(t1)) {
          const BT target = substitute(ctx, t);
          nonvacuous += both.size();
          o.require(subset(both, fix_t_or_all(target, pf, both)),
                    who + ": variant " + ctx.to_string() + " of " + t1.to_string() + " with t = " + t.to_string());
        }
      }
    }

    // Composition of sequence relations is the relation of the concatenation.
    for (const auto& s1 : all_seqs(2))
      for (const auto& s2 : all_seqs(2)) {
        auto lhs = relfork::window(compose(underline_s(s1, pf), underline_s(s2, pf)), 2000);
        auto rhs = relfork::window(underline_s(seq_concat(s1, s2), pf), 2000);
        o.require(lhs == rhs, who + ": composition of " + s1.to_string() + " and " + s2.to_string());
      }
  }
  o.require(ll_pairs == 10, "only " + std::to_string(ll_pairs) + " related (s,t) pairs");
  if (o.pass)
    o.detail << "5 stars on [0,2000); 10 (s,t) pairs; " << nonvacuous << " non-vacuous fixpoint instances; 0 violations";
}

void c9(Outcome& o) {
  auto c = Construction::tree(nats({0, 1, 2, 3, 4}), B(B(N, N), N));
  auto pf = as_pairing_function(c);
  const BT t = *c->control_tree();
  const Seq s = Seq::parse("pi.rho");
  Rng rng(99);
  for (int i = 0; i < 20; ++i) {
    auto perm = FinitePerm::random(rng, 300, 12);
    auto conj = conjugate(pf, perm);
    o.require(window(conj.transport(underline_t(t, pf)), 300) == window(underline_t(t, conj.pf), 300),
              "underline_t transport differs for permutation " + std::to_string(i));
    o.require(window(conj.transport(underline_s(s, pf)), 300) == window(underline_s(s, conj.pf), 300),
              "underline_s transport differs for permutation " + std::to_string(i));
  }
  std::size_t members = 0;
  for (int i = 0; i < 50; ++i) {
    auto perm = FinitePerm::random(rng, 300, 12);
    auto conj = conjugate(pf, perm);
    std::vector<NatPair> diag;
    const auto k = 1 + uniform_below(rng, 3);
    for (std::uint64_t j = 0; j < k; ++j) {
      // Mostly fixpoints of t, sometimes an arbitrary point.
      const Nat u = uniform_below(rng, 4) ? Nat(uniform_below(rng, 5)) : Nat(uniform_below(rng, 300));
      diag.emplace_back(u, u);
    }
    auto a = LazyRelation::finite(diag);
    const bool before = si_member(a, underline_t(t, pf));
    const bool after = si_member(conj.transport(a), underline_t(t, conj.pf));
    members += before;
    o.require(before == after, "Si membership changes under permutation " + std::to_string(i));
  }
  if (o.pass) o.detail << "20 permutations on [0,300); 50 subidentities (" << members << " members)";
}

void c10(Outcome& o) {
  auto two = ideal_elements(full_pra(2)).size();
  o.require(two == 2, "full_pra(2) has " + std::to_string(two) + " ideals");
  AlgebraModel m = full_pra(2);
  for (std::size_t zeta = 0; zeta <= 2; ++zeta) {
    if (zeta > 0) m = direct_product(full_pra(1), m);
    const auto cls = classify(m);
    o.require(cls.ideal_count == (std::size_t{2} << zeta),
              "zeta=" + std::to_string(zeta) + ": " + std::to_string(cls.ideal_count) + " ideals");
    if (zeta > 0) o.require(!cls.simple, "product with zeta=" + std::to_string(zeta) + " reported simple");
    if (o.pass) o.detail << "zeta=" << zeta << ": " << cls.ideal_count << " ideals; ";
  }
  if (o.pass) o.detail << "products non-simple";
}

void c11(Outcome& o) {
  Rng rng(1);
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    auto t = random_term(rng, 5);
    if (!equal(parse_term(print(t)), t)) ++failures;
    auto f = random_formula(rng, 3);
    if (!equal(parse_formula(print(f)), f)) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " round-trip failures");
  if (o.pass) o.detail << "1000 terms and 1000 formulas";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"C1 equational suite on full_pra(0..2), sampled on full_pra(3)", c1},
      {"C2 Tarski suite on full_pra(n), n <= 2", c2},
      {"C3 basic star S={1,2}", c3},
      {"C4 tree-controlled star t=(bin (bin nil nil) nil), S={0..4}", c4},
      {"C5 pi/rho-controlled star S={3,4}", c5},
      {"C6 seq-controlled star s=pi.rho, S={0,1,2}", c6},
      {"C7 fork axioms on every built star", c7},
      {"C8 fixpoint theorems on [0,2000)", c8},
      {"C9 transport along finite permutations", c9},
      {"C10 ideal-element counts", c10},
      {"C11 parser round trip", c11},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " -- " << o.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
