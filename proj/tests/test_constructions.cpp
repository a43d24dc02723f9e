#include "doctest.h"

#include <map>
#include <set>

#include "relfork/construction_config.hpp"
#include "relfork/constructions.hpp"
#include "relfork/error.hpp"
#include "relfork/forkmodel.hpp"

using namespace relfork;

namespace {

const BT N = BT::nil();
BT B(const BT& l, const BT& r) { return BT::bin(l, r); }

std::vector<Nat> nats(std::initializer_list<unsigned> xs) { return {xs.begin(), xs.end()}; }

std::vector<std::shared_ptr<const Construction>> sample_constructions() {
  return {
      Construction::basic(nats({1, 2})),
      Construction::basic({}),
      Construction::tree(nats({0, 1, 2, 3, 4}), B(B(N, N), N)),
      Construction::tree(nats({2, 7}), B(B(N, N), B(N, B(N, N)))),
      Construction::proj(nats({3, 4}), Proj::Pi),
      Construction::proj(nats({3, 4}), Proj::Rho),
      Construction::seq(nats({0, 1, 2}), Seq::parse("pi.rho")),
      Construction::seq(nats({5}), Seq::parse("rho.rho.pi")),
  };
}

}  // namespace

TEST_CASE("cantor pairing") {
  CHECK(cantor_pair(0, 0) == 0);
  std::set<Nat> seen;
  for (unsigned i = 0; i < 100; ++i)
    for (unsigned k = 0; k < 100; ++k) {
      const Nat n = cantor_pair(i, k);
      CHECK(cantor_unpair(n) == NatPair{i, k});
      seen.insert(n);
    }
  CHECK(seen.size() == 10000);
  for (unsigned n = 0; n < 5000; ++n) {
    auto [i, k] = cantor_unpair(n);
    CHECK(cantor_pair(i, k) == n);
  }
}

TEST_CASE("off-diagonal pairing is a bijection") {
  std::set<Nat> seen;
  for (unsigned i = 0; i < 60; ++i)
    for (unsigned k = 0; k < 60; ++k) {
      if (i == k) continue;
      const Nat n = offdiag_pair(i, k);
      CHECK(offdiag_unpair(n) == NatPair{i, k});
      seen.insert(n);
    }
  for (unsigned n = 0; n < 3000; ++n) {
    auto [i, k] = offdiag_unpair(n);
    CHECK(i != k);
    CHECK(offdiag_pair(i, k) == n);
  }
}

TEST_CASE("basic star") {
  auto c = Construction::basic(nats({5}));
  CHECK(c->star(5, 5) == 5);
  for (unsigned u = 0; u < 300; ++u)
    if (u != 5) CHECK(c->star(u, u) != u);
  for (unsigned w = 0; w < 200; ++w) {
    auto xy = c->unstar(w);
    REQUIRE(xy);
    CHECK(c->star(xy->first, xy->second) == w);
  }
}

TEST_CASE("basic star is bijective on a brute-force box") {
  auto c = Construction::basic(nats({1, 2}));
  Nat box = 0;
  for (unsigned w = 0; w < 500; ++w) {
    auto xy = c->unstar(w);
    REQUIRE(xy);
    box = std::max({box, xy->first + 1, xy->second + 1});
  }
  const auto m = box.convert_to<unsigned>();
  std::map<Nat, unsigned> hits;
  for (unsigned x = 0; x < m; ++x)
    for (unsigned y = 0; y < m; ++y) {
      const Nat w = c->star(x, y);
      if (w < 500) ++hits[w];
    }
  CHECK(hits.size() == 500);
  for (const auto& [w, n] : hits) CHECK(n == 1);
}

TEST_CASE("every star is injective with disjoint case ranges") {
  for (const auto& c : sample_constructions()) {
    INFO(c->describe());
    std::set<Nat> images;
    for (unsigned x = 0; x < 150; ++x)
      for (unsigned y = 0; y < 150; ++y) {
        const Nat w = c->star(x, y);
        CHECK(c->unstar(w) == NatPair{x, y});
        images.insert(w);
      }
    CHECK(images.size() == 150u * 150u);
  }
}

TEST_CASE("layout partitions the naturals") {
  for (const auto& c : sample_constructions()) {
    INFO(c->describe());
    std::set<Nat> in_families;
    for (const auto& f : c->families()) {
      CHECK(f.members.size() == c->S().size());
      for (const auto& m : f.members) CHECK(in_families.insert(m).second);
    }
    CHECK(std::vector<Nat>(in_families.begin(), in_families.end()) == c->core());
    for (unsigned w = 0; w < 3000; ++w) {
      const bool core = c->in_core(w);
      CHECK(core == (in_families.count(w) == 1));
      auto bk = c->block_of(w);
      CHECK(bk.has_value() == !core);
      if (bk) CHECK(c->block_elem(bk->first, bk->second) == w);
    }
  }
}

TEST_CASE("tree-controlled star") {
  const BT t = B(B(N, N), N);
  auto c = Construction::tree(nats({0, 1, 2, 3, 4}), t);
  auto pf = as_pairing_function(c);
  for (const auto& s : c->S()) CHECK(tree_map_star(t, pf, s) == s);
  CHECK(fix_t_members(t, pf, c->candidate_region()).size() == 5);
  auto window = fix_t_members(t, pf, range_region(0, 5000));
  for (const auto& u : window) CHECK(c->in_core(u));
  CHECK(window.size() == 5);

  // Family members are the images of S under their subtree.
  for (const auto& ct : {c, Construction::tree(nats({2, 7}), B(B(N, N), B(N, B(N, N))))}) {
    auto p = as_pairing_function(ct);
    const auto subs = strict_subtrees(*ct->control_tree());
    for (const auto& sub : subs) {
      const auto it = std::find_if(ct->families().begin(), ct->families().end(), [&](const Family& f) {
        return f.label == (sub.is_nil() ? std::string("S") : sub.to_string());
      });
      REQUIRE(it != ct->families().end());
      for (std::size_t x = 0; x < ct->S().size(); ++x) CHECK(it->members[x] == tree_map_star(sub, p, ct->S()[x]));
    }
  }
  CHECK_THROWS_AS(Construction::tree(nats({1}), N), Error);
  CHECK_THROWS_AS(Construction::tree({}, B(N, N)), Error);
}

TEST_CASE("projection-controlled star") {
  for (Proj which : {Proj::Pi, Proj::Rho}) {
    auto c = Construction::proj(nats({3, 4}), which);
    auto pf = as_pairing_function(c);
    const auto& P = c->families().back();
    REQUIRE(P.label == "P");
    for (std::size_t x = 0; x < 2; ++x) {
      const Nat u = c->S()[x];
      CHECK((which == Proj::Pi ? c->star(u, P.members[x]) : c->star(P.members[x], u)) == u);
    }
    CHECK(fix_pi_members(pf, range_region(0, 1000), which) == nats({3, 4}));
    bool urelement = false;
    for (unsigned u = 0; u < 1000 && !urelement; ++u) urelement = pf.is_urelement(u);
    CHECK(urelement);
  }
}

TEST_CASE("sequence-controlled star") {
  for (const auto& c : {Construction::seq(nats({0, 1, 2}), Seq::parse("pi.rho")),
                        Construction::seq(nats({5, 9}), Seq::parse("rho.pi.pi")),
                        Construction::seq(nats({4}), Seq::parse("rho"))}) {
    INFO(c->describe());
    auto pf = as_pairing_function(c);
    const Seq s = *c->control_seq();
    auto us = underline_s(s, pf);
    for (const auto& u : c->S()) CHECK(us.contains(u, u));
    CHECK(fix_s_members(s, pf, c->candidate_region()).size() == c->S().size());
    for (const auto& u : fix_s_members(s, pf, range_region(0, 5000))) CHECK(c->in_core(u));
    // v in S_i relates to its S-origin along the length-i tail.
    for (std::size_t i = 1; i < seq_long(s); ++i) {
      const auto it = std::find_if(c->families().begin(), c->families().end(),
                                   [&](const Family& f) { return f.label == "S_" + std::to_string(i); });
      REQUIRE(it != c->families().end());
      auto tail = underline_s(seq_suffix(s, i), pf);
      for (std::size_t x = 0; x < c->S().size(); ++x) CHECK(tail.contains(it->members[x], c->S()[x]));
    }
  }
  CHECK_THROWS_AS(Construction::seq({}, Seq::parse("pi")), Error);
}

TEST_CASE("construction configs") {
  auto cfg = config_from_json_text(R"j({"kind": "tree", "S": [0, 2, 1], "control": "(bin nil nil)"})j");
  CHECK(cfg.kind == StarKind::Tree);
  CHECK(cfg.S == nats({0, 1, 2}));
  auto back = config_from_json_text(config_to_json_text(cfg));
  CHECK(back.kind == cfg.kind);
  CHECK(back.S == cfg.S);
  CHECK(back.control == cfg.control);
  CHECK(build(cfg)->describe() == Construction::tree(nats({0, 1, 2}), B(N, N))->describe());
  CHECK_THROWS_AS(config_from_json_text(R"({"kind": "weird", "S": []})"), Error);
  CHECK_THROWS_AS(config_from_json_text("{"), Error);
  CHECK_THROWS_AS(build(config_from_json_text(R"({"kind": "tree", "S": [1], "control": "nil"})")), Error);
}

TEST_CASE("layout report") {
  auto text = layout_report(*Construction::proj(nats({3, 4}), Proj::Pi));
  CHECK(text.find("families:") != std::string::npos);
  CHECK(text.find("P: {5,6}") != std::string::npos);
  CHECK(text.find("B_0:") != std::string::npos);
}
