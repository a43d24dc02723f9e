#include "relfork/constructions.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "relfork/error.hpp"

namespace relfork {

const char* to_string(StarKind k) {
  switch (k) {
    case StarKind::Basic: return "basic";
    case StarKind::Tree: return "tree";
    case StarKind::Pi: return "pi";
    case StarKind::Rho: return "rho";
    case StarKind::Seq: return "seq";
  }
  return "?";
}

StarKind parse_star_kind(const std::string& text) {
  for (StarKind k : {StarKind::Basic, StarKind::Tree, StarKind::Pi, StarKind::Rho, StarKind::Seq}) {
    if (text == to_string(k)) return k;
  }
  throw Error("unknown-kind", "unknown construction kind '" + text + "' (expected basic, tree, pi, rho or seq)");
}

Construction::Construction(StarKind kind, std::vector<Nat> S) : kind_(kind) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  S_ = std::move(S);
  families_.push_back({"S", S_});
}

void Construction::add_family(std::string label) {
  Nat next = 0;
  for (const auto& f : families_) {
    if (!f.members.empty()) next = std::max(next, f.members.back() + 1);
  }
  Family f{std::move(label), {}};
  for (std::size_t i = 0; i < S_.size(); ++i) f.members.push_back(next + i);
  families_.push_back(std::move(f));
}

void Construction::finish() {
  for (std::size_t fi = 0; fi < families_.size(); ++fi) {
    for (std::size_t i = 0; i < families_[fi].members.size(); ++i) {
      core_.push_back(families_[fi].members[i]);
      core_info_.push_back({families_[fi].members[i], CoreInfo{static_cast<int>(fi), i}});
    }
  }
  std::sort(core_.begin(), core_.end());
  std::sort(core_info_.begin(), core_info_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (std::adjacent_find(core_.begin(), core_.end()) != core_.end()) {
    throw Error("internal", "layout families overlap");
  }
}

std::shared_ptr<const Construction> Construction::basic(std::vector<Nat> S) {
  std::shared_ptr<Construction> c(new Construction(StarKind::Basic, std::move(S)));
  c->f_block_ = 0;
  c->finish();
  return c;
}

std::shared_ptr<const Construction> Construction::tree(std::vector<Nat> S, const BT& t) {
  if (t.is_nil()) throw Error("nil-control", "the control tree must not be nil");
  std::shared_ptr<Construction> c(new Construction(StarKind::Tree, std::move(S)));
  if (c->S_.empty()) throw Error("empty-set", "tree-controlled construction needs a non-empty S");
  c->tree_ = t;
  c->subtrees_ = strict_subtrees(t);  // nil sorts first
  for (std::size_t k = 1; k < c->subtrees_.size(); ++k) c->add_family(c->subtrees_[k].to_string());
  c->f_block_ = 1;
  c->finish();
  return c;
}

std::shared_ptr<const Construction> Construction::proj(std::vector<Nat> S, Proj which) {
  std::shared_ptr<Construction> c(new Construction(which == Proj::Pi ? StarKind::Pi : StarKind::Rho, std::move(S)));
  c->add_family("P");
  c->p_family_ = 1;
  c->f_block_ = 0;
  c->finish();
  return c;
}

std::shared_ptr<const Construction> Construction::seq(std::vector<Nat> S, const Seq& s) {
  std::shared_ptr<Construction> c(new Construction(StarKind::Seq, std::move(S)));
  if (c->S_.empty()) throw Error("empty-set", "sequence-controlled construction needs a non-empty S");
  c->seq_ = s;
  const std::size_t L = seq_long(s);
  for (std::size_t i = 1; i < L; ++i) c->add_family("S_" + std::to_string(i));
  c->add_family("P");
  c->p_family_ = static_cast<int>(L);
  c->f_block_ = 1;
  c->finish();
  return c;
}

std::string Construction::control_text() const {
  if (tree_) return tree_->to_string();
  if (seq_) return seq_->to_string();
  return "";
}

std::vector<Nat> Construction::candidate_region() const {
  std::vector<Nat> out;
  for (std::size_t fi = 0; fi < families_.size(); ++fi) {
    if (static_cast<int>(fi) == p_family_ && (kind_ == StarKind::Tree || kind_ == StarKind::Seq)) continue;
    out.insert(out.end(), families_[fi].members.begin(), families_[fi].members.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Construction::in_core(const Nat& w) const { return std::binary_search(core_.begin(), core_.end(), w); }

const Construction::CoreInfo* Construction::info(const Nat& w) const {
  auto it = std::lower_bound(core_info_.begin(), core_info_.end(), w,
                             [](const auto& e, const Nat& x) { return e.first < x; });
  if (it == core_info_.end() || it->first != w) return nullptr;
  return &it->second;
}

std::optional<NatPair> Construction::block_of(const Nat& w) const {
  auto it = std::lower_bound(core_.begin(), core_.end(), w);
  if (it != core_.end() && *it == w) return std::nullopt;
  const Nat j = w - static_cast<std::uint64_t>(it - core_.begin());
  return cantor_unpair(j);
}

Nat Construction::block_elem(const Nat& block, const Nat& pos) const {
  Nat c = cantor_pair(block, pos);
  for (const auto& x : core_) {
    if (x <= c) ++c;
    else break;
  }
  return c;
}

Nat Construction::core_pair_code(const Nat& u, const Nat& v) const {
  const auto m = static_cast<std::uint64_t>(core_.size());
  const auto pu = static_cast<std::uint64_t>(std::lower_bound(core_.begin(), core_.end(), u) - core_.begin());
  const auto pv = static_cast<std::uint64_t>(std::lower_bound(core_.begin(), core_.end(), v) - core_.begin());
  return Nat(pu) * m + pv;
}

int Construction::family_of_subtree(const BT& t) const {
  auto it = std::lower_bound(subtrees_.begin(), subtrees_.end(), t);
  if (it == subtrees_.end() || !(*it == t)) return -1;
  return static_cast<int>(it - subtrees_.begin());
}

int Construction::seq_family(std::size_t i) const { return static_cast<int>(i); }

std::optional<Nat> Construction::core_cell(const CoreInfo& iu, const CoreInfo& iv) const {
  if (iu.pos != iv.pos) return std::nullopt;
  const std::size_t x = iu.pos;
  switch (kind_) {
    case StarKind::Basic: return std::nullopt;
    case StarKind::Tree: {
      const BT joined = BT::bin(subtrees_[iu.family], subtrees_[iv.family]);
      if (joined == *tree_) return S_[x];
      const int k = family_of_subtree(joined);
      if (k >= 1) return families_[k].members[x];
      return std::nullopt;
    }
    case StarKind::Pi:
      if (iu.family == 0 && iv.family == p_family_) return S_[x];
      return std::nullopt;
    case StarKind::Rho:
      if (iu.family == p_family_ && iv.family == 0) return S_[x];
      return std::nullopt;
    case StarKind::Seq: {
      const std::size_t L = seq_long(*seq_);
      int i = -1;
      Proj needed = Proj::Pi;
      if (iu.family != p_family_ && iv.family == p_family_) {
        i = iu.family;
        needed = Proj::Pi;
      } else if (iu.family == p_family_ && iv.family != p_family_) {
        i = iv.family;
        needed = Proj::Rho;
      }
      if (i < 0) return std::nullopt;
      const auto ii = static_cast<std::size_t>(i);
      if (seq_index(*seq_, L - ii) != needed) return std::nullopt;
      return ii + 1 < L ? families_[seq_family(ii + 1)].members[x] : S_[x];
    }
  }
  return std::nullopt;
}

Nat Construction::residual_star(const Nat& u, const Nat& v) const {
  const auto bu = block_of(u);
  const auto bv = block_of(v);
  // Core arguments rank below every block.
  const bool pick_u = bu && (!bv || bu->first >= bv->first);
  const auto& chosen = pick_u ? *bu : *bv;
  const Nat& other = pick_u ? v : u;
  const unsigned side = pick_u ? 0 : 1;
  return block_elem(chosen.first + 1, 2 * cantor_pair(chosen.second, 2 * other + side) + 1);
}

Nat Construction::star(const Nat& u, const Nat& v) const {
  if (kind_ == StarKind::Basic) {
    if (u != v) return block_elem(0, offdiag_pair(u, v));
    if (in_core(u)) return u;
    const auto bk = *block_of(u);
    return block_elem(bk.first + 1, bk.second);
  }
  const CoreInfo* iu = info(u);
  const CoreInfo* iv = info(v);
  if (iu && iv) {
    if (auto cell = core_cell(*iu, *iv)) return *cell;
    return block_elem(f_block_, 2 * core_pair_code(u, v));
  }
  return residual_star(u, v);
}

std::optional<NatPair> Construction::checked(const Nat& w, const NatPair& candidate) const {
  if (star(candidate.first, candidate.second) == w) return candidate;
  return std::nullopt;
}

std::optional<NatPair> Construction::core_preimage(const CoreInfo& iw) const {
  const std::size_t x = iw.pos;
  switch (kind_) {
    case StarKind::Basic: return NatPair{S_[x], S_[x]};
    case StarKind::Tree: {
      const BT& T = iw.family == 0 ? *tree_ : subtrees_[iw.family];
      return NatPair{families_[family_of_subtree(T.left())].members[x],
                     families_[family_of_subtree(T.right())].members[x]};
    }
    case StarKind::Pi:
      if (iw.family != 0) return std::nullopt;
      return NatPair{S_[x], families_[p_family_].members[x]};
    case StarKind::Rho:
      if (iw.family != 0) return std::nullopt;
      return NatPair{families_[p_family_].members[x], S_[x]};
    case StarKind::Seq: {
      if (iw.family == p_family_) return std::nullopt;
      const std::size_t L = seq_long(*seq_);
      const std::size_t i = iw.family == 0 ? L - 1 : static_cast<std::size_t>(iw.family) - 1;
      const Nat& ui = families_[seq_family(i)].members[x];
      const Nat& l = families_[p_family_].members[x];
      if (seq_index(*seq_, L - i) == Proj::Pi) return NatPair{ui, l};
      return NatPair{l, ui};
    }
  }
  return std::nullopt;
}

std::optional<NatPair> Construction::unstar(const Nat& w) const {
  if (kind_ == StarKind::Basic) {
    if (in_core(w)) return NatPair{w, w};
    const auto [b, k] = *block_of(w);
    if (b == 0) return offdiag_unpair(k);
    Nat x = block_elem(b - 1, k);
    return NatPair{x, x};
  }
  if (const CoreInfo* iw = info(w)) {
    auto cand = core_preimage(*iw);
    if (!cand) return std::nullopt;
    return checked(w, *cand);
  }
  const auto [b, k] = *block_of(w);
  if (k % 2 == 0) {
    if (b != f_block_) return std::nullopt;
    const Nat code = k / 2;
    const auto m = static_cast<std::uint64_t>(core_.size());
    if (code >= Nat(m) * m) return std::nullopt;
    const auto cu = static_cast<std::size_t>(code / m);
    const auto cv = static_cast<std::size_t>(code % m);
    return checked(w, {core_[cu], core_[cv]});
  }
  if (b == 0) return std::nullopt;
  const auto [kc, r] = cantor_unpair((k - 1) / 2);
  const Nat chosen = block_elem(b - 1, kc);
  const Nat other = r / 2;
  return checked(w, r % 2 == 0 ? NatPair{chosen, other} : NatPair{other, chosen});
}

std::string Construction::describe() const {
  std::string out = std::string(to_string(kind_)) + " S={" + join_nats(S_) + "}";
  if (tree_) out += " t=" + tree_->to_string();
  if (seq_) out += " s=" + seq_->to_string();
  return out;
}

PairingFunction as_pairing_function(std::shared_ptr<const Construction> c) {
  const std::string d = c->describe();
  return PairingFunction([c](const Nat& x, const Nat& y) { return c->star(x, y); },
                         [c](const Nat& w) { return c->unstar(w); }, d);
}

PairingFunction build_star_basic(std::vector<Nat> S) { return as_pairing_function(Construction::basic(std::move(S))); }
PairingFunction build_star_tree(std::vector<Nat> S, const BT& t) {
  return as_pairing_function(Construction::tree(std::move(S), t));
}
PairingFunction build_star_proj(std::vector<Nat> S, Proj which) {
  return as_pairing_function(Construction::proj(std::move(S), which));
}
PairingFunction build_star_seq(std::vector<Nat> S, const Seq& s) {
  return as_pairing_function(Construction::seq(std::move(S), s));
}

std::string layout_report(const Construction& c, std::uint64_t n) {
  std::ostringstream out;
  out << "construction: " << c.describe() << "\n";
  out << "families:\n";
  for (const auto& f : c.families()) out << "  " << f.label << ": {" << join_nats(f.members) << "}\n";
  out << "candidate region: {" << join_nats(c.candidate_region()) << "}\n";
  out << "f target block: " << (c.target_block() == 0 ? "A" : "B_0") << "\n";
  out << "block heads:\n";
  for (unsigned b = 0; b < 4; ++b) {
    out << "  " << (b == 0 ? std::string("A") : "B_" + std::to_string(b - 1)) << ":";
    for (unsigned k = 0; k < 6; ++k) out << ' ' << c.block_elem(b, k);
    out << " ...\n";
  }
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  std::size_t width = 1;
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = 0; v < n; ++v) {
      cells[u][v] = c.star(u, v).str();
      width = std::max(width, cells[u][v].size());
    }
  }
  out << "star on [0," << n << ")^2 (row u, column v):\n";
  out << std::setw(4) << "u\\v";
  for (std::uint64_t v = 0; v < n; ++v) out << ' ' << std::setw(static_cast<int>(width)) << v;
  out << "\n";
  for (std::uint64_t u = 0; u < n; ++u) {
    out << std::setw(4) << u;
    for (std::uint64_t v = 0; v < n; ++v) out << ' ' << std::setw(static_cast<int>(width)) << cells[u][v];
    out << "\n";
  }
  return out.str();
}

}  // namespace relfork
