#pragma once

// Pairing functions star_S on N with prescribed fixpoints, built on an
// explicit layout:
//
//   core      S, the control families (one per proper subtree of t, or
//             S_1..S_{L-1} for a sequence of length L) and P, allocated as
//             consecutive segments of |S| numbers directly above max(S);
//   residual  everything else, enumerated increasingly as c_0 < c_1 < ...;
//             c_j lies in block b at position k where (b, k) = unpair(j).
//             Block 0 is A, block m+1 is B_m.
//
// basic: u*u = u on S, u*u = g(u) (next block, same position) off S, and
//        u*v = f(u,v) for u != v, f an off-diagonal bijection onto A.
// tree/proj/seq: the core cells follow the control tables; a pair with at
//        least one residual argument is sent one block above its highest
//        argument (odd positions), and the remaining core pairs are
//        encoded into the even positions of the target block.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relfork/btree.hpp"
#include "relfork/forkmodel.hpp"
#include "relfork/nat.hpp"
#include "relfork/seq.hpp"

namespace relfork {

enum class StarKind { Basic, Tree, Pi, Rho, Seq };

const char* to_string(StarKind k);
StarKind parse_star_kind(const std::string& text);

struct Family {
  std::string label;         // "S", a subtree, "S_i" or "P"
  std::vector<Nat> members;  // members[i] is the image of the i-th element of S
};

class Construction {
 public:
  static std::shared_ptr<const Construction> basic(std::vector<Nat> S);
  static std::shared_ptr<const Construction> tree(std::vector<Nat> S, const BT& t);
  static std::shared_ptr<const Construction> proj(std::vector<Nat> S, Proj which);
  static std::shared_ptr<const Construction> seq(std::vector<Nat> S, const Seq& s);

  StarKind kind() const noexcept { return kind_; }
  const std::vector<Nat>& S() const noexcept { return S_; }
  const std::optional<BT>& control_tree() const noexcept { return tree_; }
  const std::optional<Seq>& control_seq() const noexcept { return seq_; }
  std::string control_text() const;

  // S first, then the control families, then P (when present).
  const std::vector<Family>& families() const noexcept { return families_; }
  const std::vector<Nat>& core() const noexcept { return core_; }
  // S together with the control families (P excluded for tree/seq).
  std::vector<Nat> candidate_region() const;
  std::size_t target_block() const noexcept { return f_block_; }

  bool in_core(const Nat& w) const;
  // (block, position) of a residual element; empty for core elements.
  std::optional<NatPair> block_of(const Nat& w) const;
  Nat block_elem(const Nat& block, const Nat& pos) const;

  Nat star(const Nat& u, const Nat& v) const;
  std::optional<NatPair> unstar(const Nat& w) const;

  std::string describe() const;

 private:
  struct CoreInfo {
    int family;       // index into families_
    std::size_t pos;  // index into S
  };

  Construction(StarKind kind, std::vector<Nat> S);
  void add_family(std::string label);
  void finish();

  const CoreInfo* info(const Nat& w) const;
  Nat core_pair_code(const Nat& u, const Nat& v) const;
  Nat residual_star(const Nat& u, const Nat& v) const;
  std::optional<Nat> core_cell(const CoreInfo& iu, const CoreInfo& iv) const;
  std::optional<NatPair> core_preimage(const CoreInfo& iw) const;
  std::optional<NatPair> checked(const Nat& w, const NatPair& candidate) const;
  int family_of_subtree(const BT& t) const;  // -1 when t is not a family
  int seq_family(std::size_t i) const;       // family index of S_i

  StarKind kind_;
  std::vector<Nat> S_;
  std::optional<BT> tree_;
  std::vector<BT> subtrees_;  // family k (k >= 1) is subtrees_[k]; subtrees_[0] = nil
  std::optional<Seq> seq_;
  std::vector<Family> families_;
  int p_family_ = -1;
  std::vector<Nat> core_;  // sorted
  std::vector<std::pair<Nat, CoreInfo>> core_info_;  // sorted by element
  std::size_t f_block_ = 0;
};

PairingFunction build_star_basic(std::vector<Nat> S);
PairingFunction build_star_tree(std::vector<Nat> S, const BT& t);
PairingFunction build_star_proj(std::vector<Nat> S, Proj which);
PairingFunction build_star_seq(std::vector<Nat> S, const Seq& s);
PairingFunction as_pairing_function(std::shared_ptr<const Construction> c);

// Families, block heads and a table of star on [0, n)^2.
std::string layout_report(const Construction& c, std::uint64_t n = 12);

}  // namespace relfork
