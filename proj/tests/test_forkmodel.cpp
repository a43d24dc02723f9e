#include "doctest.h"

#include <set>

#include "relfork/constructions.hpp"
#include "relfork/error.hpp"
#include "relfork/forkmodel.hpp"
#include "relfork/random.hpp"
#include "relfork/suites.hpp"
#include "relfork/term.hpp"

using namespace relfork;

namespace {

const BT N = BT::nil();
BT B(const BT& l, const BT& r) { return BT::bin(l, r); }

std::vector<Nat> nats(std::initializer_list<unsigned> xs) { return {xs.begin(), xs.end()}; }

const PairingFunction& basic12() {
  static const PairingFunction pf = build_star_basic(nats({1, 2}));
  return pf;
}

const PairingFunction& pi34() {
  static const PairingFunction pf = build_star_proj(nats({3, 4}), Proj::Pi);
  return pf;
}

std::vector<BT> small_trees(std::size_t max_internal) {
  std::vector<BT> out;
  for (std::size_t k = 0; k <= max_internal; ++k) {
    auto level = trees_with_internal_nodes(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// map(t, #, r) through the generic fork engine.
LazyRelation fork_map(const BT& t, const PairingFunction& pf, const LazyRelation& r) {
  if (t.is_nil()) return r;
  return fork(fork_map(t.left(), pf, r), fork_map(t.right(), pf, r), pf);
}

LazyRelation identity_below(std::uint64_t n) {
  std::vector<NatPair> pairs;
  for (std::uint64_t u = 0; u < n; ++u) pairs.emplace_back(u, u);
  return LazyRelation::finite(std::move(pairs));
}

}  // namespace

TEST_CASE("fork") {
  const auto& pf = basic12();
  auto r = LazyRelation::finite({{0, 2}}), s = LazyRelation::finite({{0, 3}});
  auto rs = fork(r, s, pf);
  CHECK(rs.contains(0, pf.star(2, 3)));
  REQUIRE(rs.has_support());
  CHECK(rs.support().size() == 1);
  auto e = fork(LazyRelation::empty(), s, pf);
  CHECK(e.has_support());
  CHECK(e.support().empty());
  auto two = fork(LazyRelation::identity(), LazyRelation::identity(), pf);
  for (unsigned u = 0; u < 30; ++u)
    for (unsigned v = 0; v < 60; ++v) CHECK(two.contains(u, v) == (Nat(v) == pf.star(u, u)));
}

TEST_CASE("window of a fork agrees with the supports") {
  const auto& pf = pi34();
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    auto r = random_finite_relation(rng, 12), s = random_finite_relation(rng, 12);
    std::set<std::pair<std::uint64_t, std::uint64_t>> want;
    for (const auto& [a, x] : r.support())
      for (const auto& [a2, y] : s.support())
        if (a == a2) {
          Nat w = pf.star(x, y);
          if (w < 400) want.insert({a.convert_to<std::uint64_t>(), w.convert_to<std::uint64_t>()});
        }
    auto got = window(fork(r, s, pf), 400);
    CHECK(std::set(got.begin(), got.end()) == want);
  }
}

TEST_CASE("window") {
  CHECK(window(LazyRelation::full(), 2).size() == 4);
  auto [pi, rho] = projections(pi34());
  auto w = window(pi, 300);
  std::set<std::uint64_t> lefts;
  for (const auto& p : w) CHECK(lefts.insert(p.first).second);
  CHECK_THROWS_AS(window(LazyRelation::full(), kMaxWindow + 1), Error);
}

TEST_CASE("projections") {
  const auto& pf = pi34();
  auto [pi, rho] = projections(pf);
  const Nat w = pf.star(4, 7);
  CHECK(pi.contains(w, 4));
  CHECK(rho.contains(w, 7));
  CHECK_FALSE(pi.contains(w, 7));
  bool seen_urelement = false;
  for (unsigned u = 0; u < 1000; ++u) {
    if (pf.is_urelement(u)) {
      seen_urelement = true;
      CHECK(pi.successors(u).empty());
      CHECK(rho.successors(u).empty());
    }
  }
  CHECK(seen_urelement);
}

TEST_CASE("urelement relations") {
  auto basic = urelement_relations(basic12());
  // Bijective: every point has a preimage, checked by unstar directly.
  for (unsigned u = 0; u < 500; ++u) CHECK(basic12().unstar(u).has_value());
  CHECK(window(basic.id_u, 500).empty());
  auto pi = urelement_relations(pi34());
  CHECK_FALSE(window(pi.id_u, 500).empty());
  for (unsigned u = 0; u < 40; ++u)
    for (unsigned v = 0; v < 40; ++v) CHECK(pi.u1u.contains(u, v) == pi.u1u.contains(v, u));
}

TEST_CASE("underline_t") {
  const auto& pf = pi34();
  auto id = underline_t(N, pf);
  for (unsigned u = 0; u < 30; ++u)
    for (unsigned v = 0; v < 30; ++v) CHECK(id.contains(u, v) == (u == v));
  auto two = underline_t(B(N, N), pf);
  for (unsigned u = 0; u < 100; ++u) CHECK(two.contains(u, pf.star(u, u)));

  // Meet with the identity is the identity on fixpoints.
  for (const auto& t : small_trees(2)) {
    if (t.is_nil()) continue;
    auto ut = underline_t(t, basic12());
    auto fixed = fix_t_members(t, basic12(), range_region(0, 2000));
    std::set<Nat> fixset(fixed.begin(), fixed.end());
    for (unsigned u = 0; u < 2000; ++u) CHECK(ut.contains(u, u) == (fixset.count(u) == 1));
  }
}

TEST_CASE("underline_t agrees with generic fork composition on finite approximations") {
  const auto& pf = pi34();
  const std::uint64_t k = 12;
  auto idk = identity_below(k);
  for (const auto& t : small_trees(3)) {
    auto generic = fork_map(t, pf, idk);
    REQUIRE(generic.has_support());
    std::vector<NatPair> want;
    for (std::uint64_t u = 0; u < k; ++u) want.emplace_back(u, tree_map_star(t, pf, u));
    std::sort(want.begin(), want.end());
    CHECK(generic.support() == want);
    auto direct = underline_t(t, pf);
    for (const auto& [u, v] : want) CHECK(direct.contains(u, v));
  }
}

TEST_CASE("underline_s") {
  const auto& pf = pi34();
  auto [pi, rho] = projections(pf);
  auto upi = underline_s(Seq::elem(Proj::Pi), pf);
  CHECK(window(upi, 300) == window(pi, 300));
  const Nat a = 5, b = 9, c = 2;
  CHECK(underline_s(Seq::parse("pi.rho"), pf).contains(pf.star(pf.star(a, b), c), b));
  for (const auto& s1 : all_seqs(2))
    for (const auto& s2 : all_seqs(2)) {
      auto lhs = compose(underline_s(s1, pf), underline_s(s2, pf));
      auto rhs = underline_s(seq_concat(s1, s2), pf);
      CHECK(window(lhs, 500) == window(rhs, 500));
    }
}

TEST_CASE("fixpoint queries") {
  CHECK(fix_t_members(B(N, N), basic12(), range_region(0, 1000)) == nats({1, 2}));
  CHECK_THROWS_AS(fix_t_members(N, basic12(), range_region(0, 10)), Error);
  CHECK(fix_pi_members(pi34(), range_region(0, 1000), Proj::Pi) == nats({3, 4}));
  auto basic_pi = fix_pi_members(basic12(), range_region(0, 1000), Proj::Pi);
  const auto s12 = nats({1, 2});
  CHECK(std::includes(basic_pi.begin(), basic_pi.end(), s12.begin(), s12.end()));
  auto empty_pi = build_star_proj({}, Proj::Pi);
  CHECK(fix_pi_members(empty_pi, range_region(0, 1000), Proj::Pi).empty());
}

TEST_CASE("tree fixpoints project to sequence membership") {
  const auto& pf = pi34();
  Rng rng(21);
  for (const auto& t : small_trees(3))
    for (const auto& s : all_seqs(3)) {
      if (!ll_rel(s, t)) continue;
      auto us = underline_s(s, pf);
      for (int i = 0; i < 40; ++i) {
        const Nat v = uniform_below(rng, 300);
        CHECK(us.contains(tree_map_star(t, pf, v), v));
      }
    }
}

TEST_CASE("si_member") {
  const auto& pf = basic12();
  auto two = underline_t(B(N, N), pf);
  CHECK(si_member(LazyRelation::finite({{1, 1}, {2, 2}}), two));
  CHECK_FALSE(si_member(LazyRelation::finite({{1, 1}, {3, 3}}), two));
  CHECK_FALSE(si_member(LazyRelation::finite({{1, 2}}), two));
  CHECK_THROWS_AS(si_member(LazyRelation::full(), two), Error);

  // Si over 2 = Id # Id through the generic fork equals Si over bin nil nil.
  auto generic_two = fork(LazyRelation::identity(), LazyRelation::identity(), pf);
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    std::vector<NatPair> pairs;
    for (int k = 0; k < 3; ++k) {
      const Nat u = uniform_below(rng, 6);
      pairs.emplace_back(u, u);
    }
    auto a = LazyRelation::finite(pairs);
    bool generic = true;
    for (const auto& [u, v] : a.support()) generic = generic && generic_two.contains(u, v);
    CHECK(si_member(a, two) == generic);
  }
}

TEST_CASE("conjugation") {
  const auto& pf = pi34();
  auto same = conjugate(pf, FinitePerm());
  for (unsigned x = 0; x < 30; ++x)
    for (unsigned y = 0; y < 30; ++y) CHECK(same.pf.star(x, y) == pf.star(x, y));

  auto swap01 = conjugate(pf, FinitePerm(std::map<Nat, Nat>{{0, 1}, {1, 0}}));
  const auto t = B(B(N, N), N);
  CHECK(window(swap01.transport(underline_t(t, pf)), 300) == window(underline_t(t, swap01.pf), 300));
  const auto s = Seq::parse("pi.rho");
  CHECK(window(swap01.transport(underline_s(s, pf)), 300) == window(underline_s(s, swap01.pf), 300));

  CHECK_THROWS_AS(FinitePerm(std::map<Nat, Nat>{{0, 1}}), Error);
  CHECK_THROWS_AS(FinitePerm(std::map<Nat, Nat>{{0, 1}, {1, 1}}), Error);
}

TEST_CASE("fork axiom checks") {
  LazyCheckOptions opts;
  opts.trials = 60;
  opts.urelement_bound = 300;
  auto basic = cfa_axiom_check(basic12(), opts);
  REQUIRE(basic.size() == 4);
  for (std::size_t i = 0; i < 3; ++i) CHECK_MESSAGE(basic[i].status == AxiomResult::Status::Pass, basic[i].witness);
  CHECK(basic[3].status == AxiomResult::Status::Fail);
  for (const auto& r : cfa_axiom_check(pi34(), opts)) CHECK_MESSAGE(r.status == AxiomResult::Status::Pass, r.name);

  // pi # rho <= 1' on a window: a paired u is star of its coordinates.
  for (unsigned u = 0; u < 500; ++u) {
    if (auto xy = pi34().unstar(u)) CHECK(pi34().star(xy->first, xy->second) == u);
  }
  auto id_check = check_formula_lazy(*parse_formula("pi # rho <= 1'"), pi34(), opts);
  CHECK(id_check.status == AxiomResult::Status::Pass);
}

TEST_CASE("undecidable compositions are reported") {
  LazyRelation::Parts p;
  p.contains = [](const Nat& a, const Nat& b) { return a < b; };
  LazyRelation lt(p);
  CHECK_THROWS_AS(compose(lt, lt), Error);
  CHECK(compose(LazyRelation::finite({{0, 1}}), lt).contains(0, 5));
}

TEST_CASE("fork axioms detect an inconsistent pairing") {
  // star is Cantor pairing but unstar swaps the coordinates back.
  PairingFunction broken([](const Nat& x, const Nat& y) { return cantor_pair(x, y); },
                         [](const Nat& w) -> std::optional<NatPair> {
                           auto [x, y] = cantor_unpair(w);
                           return NatPair{y, x};
                         },
                         "swapped");
  LazyCheckOptions opts;
  opts.trials = 50;
  auto results = cfa_axiom_check(broken, opts);
  CHECK(std::any_of(results.begin(), results.begin() + 3,
                    [](const AxiomResult& r) { return r.status == AxiomResult::Status::Fail; }));
}
