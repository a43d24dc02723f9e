#pragma once

// Binary control trees (nil | bin L R) and tree contexts with holes.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace relfork {

class BT {
 public:
  static BT nil();
  static BT bin(const BT& left, const BT& right);
  static BT parse(const std::string& text);  // "nil" | "(bin L R)"

  bool is_nil() const noexcept { return node_ == nullptr; }
  const BT& left() const;
  const BT& right() const;

  std::size_t internal_nodes() const noexcept;
  std::size_t node_count() const noexcept { return 2 * internal_nodes() + 1; }
  std::size_t depth() const noexcept;  // nil has depth 0

  std::string to_string() const;

  friend bool operator==(const BT& a, const BT& b);
  // Total order: by size, then left subtree, then right subtree.
  friend std::strong_ordering operator<=>(const BT& a, const BT& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct BT::Node {
  BT left;
  BT right;
  std::size_t internal;
  std::size_t depth;
};

// a < b: a is a proper subtree of b.
bool bt_lt(const BT& a, const BT& b);

// {t' : t' < t}, sorted.
std::vector<BT> strict_subtrees(const BT& t);

// All trees with exactly n internal nodes, sorted.
std::vector<BT> trees_with_internal_nodes(std::size_t n);

class BTC {
 public:
  static BTC nil();
  static BTC hole();
  static BTC bin(const BTC& left, const BTC& right);
  static BTC from_tree(const BT& t);
  static BTC parse(const std::string& text);  // holes written "_"

  bool is_nil() const noexcept;
  bool is_hole() const noexcept;
  const BTC& left() const;
  const BTC& right() const;

  std::size_t node_count() const noexcept;
  std::size_t hole_count() const noexcept;
  std::string to_string() const;

  friend bool operator==(const BTC& a, const BTC& b);
  friend std::strong_ordering operator<=>(const BTC& a, const BTC& b);

 private:
  enum class Kind { Nil, Hole, Bin };
  struct Node;
  Kind kind_ = Kind::Nil;
  std::shared_ptr<const Node> node_;
};

struct BTC::Node {
  BTC left;
  BTC right;
  std::size_t nodes;
  std::size_t holes;
};

// ctx[t]: every hole replaced by t.
BT substitute(const BTC& ctx, const BT& t);

inline constexpr std::size_t kMaxVariantNodes = 15;

// V_t = {c in BTC : c[nil] = t}, sorted. Throws for trees above
// kMaxVariantNodes nodes.
std::vector<BTC> variants(const BT& t);

template <typename T>
T tree_map(const BT& t, const std::function<T(const T&, const T&)>& f, const T& u) {
  if (t.is_nil()) return u;
  return f(tree_map(t.left(), f, u), tree_map(t.right(), f, u));
}

}  // namespace relfork
