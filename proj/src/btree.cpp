#include "relfork/btree.hpp"

#include <algorithm>
#include <cctype>

#include "relfork/error.hpp"

namespace relfork {

namespace {

// Minimal tokenizer shared by BT and BTC: "(", ")", words.
class TreeLexer {
 public:
  explicit TreeLexer(const std::string& text) : text_(text) {}

  std::string next() {
    skip();
    if (pos_ >= text_.size()) return {};
    char c = text_[pos_];
    if (c == '(' || c == ')' || c == '_') {
      ++pos_;
      return std::string(1, c);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      throw Error("syntax-error", "unexpected character '" + std::string(1, c) +
                                      "' at position " + std::to_string(pos_) + " in tree '" +
                                      text_ + "'");
    }
    return text_.substr(start, pos_ - start);
  }

  void expect(const std::string& tok) {
    auto got = next();
    if (got != tok) fail("expected '" + tok + "'");
  }

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("syntax-error", what + " at position " + std::to_string(pos_) +
                                    " in tree '" + text_ + "'");
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

BT parse_bt(TreeLexer& lex) {
  auto tok = lex.next();
  if (tok == "nil") return BT::nil();
  if (tok != "(") lex.fail("expected 'nil' or '('");
  lex.expect("bin");
  BT l = parse_bt(lex);
  BT r = parse_bt(lex);
  lex.expect(")");
  return BT::bin(l, r);
}

BTC parse_btc(TreeLexer& lex) {
  auto tok = lex.next();
  if (tok == "nil") return BTC::nil();
  if (tok == "_") return BTC::hole();
  if (tok != "(") lex.fail("expected 'nil', '_' or '('");
  lex.expect("bin");
  BTC l = parse_btc(lex);
  BTC r = parse_btc(lex);
  lex.expect(")");
  return BTC::bin(l, r);
}

}  // namespace

BT BT::nil() { return BT{}; }

BT BT::bin(const BT& left, const BT& right) {
  BT t;
  t.node_ = std::make_shared<const Node>(
      Node{left, right, left.internal_nodes() + right.internal_nodes() + 1,
           std::max(left.depth(), right.depth()) + 1});
  return t;
}

BT BT::parse(const std::string& text) {
  TreeLexer lex(text);
  BT t = parse_bt(lex);
  if (!lex.at_end()) lex.fail("trailing input");
  return t;
}

const BT& BT::left() const {
  if (!node_) throw Error("out-of-range", "nil has no children");
  return node_->left;
}

const BT& BT::right() const {
  if (!node_) throw Error("out-of-range", "nil has no children");
  return node_->right;
}

std::size_t BT::internal_nodes() const noexcept { return node_ ? node_->internal : 0; }
std::size_t BT::depth() const noexcept { return node_ ? node_->depth : 0; }

std::string BT::to_string() const {
  if (is_nil()) return "nil";
  return "(bin " + left().to_string() + " " + right().to_string() + ")";
}

bool operator==(const BT& a, const BT& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_nil() || b.is_nil()) return false;
  return a.internal_nodes() == b.internal_nodes() && a.left() == b.left() &&
         a.right() == b.right();
}

std::strong_ordering operator<=>(const BT& a, const BT& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.internal_nodes() <=> b.internal_nodes(); c != 0) return c;
  if (a.is_nil()) return std::strong_ordering::equal;  // both nil
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

bool bt_lt(const BT& a, const BT& b) {
  if (b.is_nil()) return false;
  if (a.internal_nodes() >= b.internal_nodes()) return false;
  return a == b.left() || bt_lt(a, b.left()) || a == b.right() || bt_lt(a, b.right());
}

std::vector<BT> strict_subtrees(const BT& t) {
  std::vector<BT> out;
  std::function<void(const BT&)> walk = [&](const BT& x) {
    if (x.is_nil()) return;
    out.push_back(x.left());
    out.push_back(x.right());
    walk(x.left());
    walk(x.right());
  };
  walk(t);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BT> trees_with_internal_nodes(std::size_t n) {
  if (n == 0) return {BT::nil()};
  std::vector<BT> out;
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& l : trees_with_internal_nodes(k)) {
      for (const auto& r : trees_with_internal_nodes(n - 1 - k)) out.push_back(BT::bin(l, r));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

BTC BTC::nil() { return BTC{}; }

BTC BTC::hole() {
  BTC c;
  c.kind_ = Kind::Hole;
  return c;
}

BTC BTC::bin(const BTC& left, const BTC& right) {
  BTC c;
  c.kind_ = Kind::Bin;
  c.node_ = std::make_shared<const Node>(Node{left, right, left.node_count() + right.node_count() + 1,
                                              left.hole_count() + right.hole_count()});
  return c;
}

BTC BTC::from_tree(const BT& t) {
  if (t.is_nil()) return nil();
  return bin(from_tree(t.left()), from_tree(t.right()));
}

BTC BTC::parse(const std::string& text) {
  TreeLexer lex(text);
  BTC c = parse_btc(lex);
  if (!lex.at_end()) lex.fail("trailing input");
  return c;
}

bool BTC::is_nil() const noexcept { return kind_ == Kind::Nil; }
bool BTC::is_hole() const noexcept { return kind_ == Kind::Hole; }

const BTC& BTC::left() const {
  if (kind_ != Kind::Bin) throw Error("out-of-range", "leaf context has no children");
  return node_->left;
}

const BTC& BTC::right() const {
  if (kind_ != Kind::Bin) throw Error("out-of-range", "leaf context has no children");
  return node_->right;
}

std::size_t BTC::node_count() const noexcept { return kind_ == Kind::Bin ? node_->nodes : 1; }

std::size_t BTC::hole_count() const noexcept {
  switch (kind_) {
    case Kind::Nil: return 0;
    case Kind::Hole: return 1;
    case Kind::Bin: return node_->holes;
  }
  return 0;
}

std::string BTC::to_string() const {
  switch (kind_) {
    case Kind::Nil: return "nil";
    case Kind::Hole: return "_";
    case Kind::Bin: return "(bin " + left().to_string() + " " + right().to_string() + ")";
  }
  return "?";
}

bool operator==(const BTC& a, const BTC& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != BTC::Kind::Bin || a.node_ == b.node_) return true;
  return a.node_count() == b.node_count() && a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering operator<=>(const BTC& a, const BTC& b) {
  if (auto c = a.node_count() <=> b.node_count(); c != 0) return c;
  if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
  if (a.kind_ != BTC::Kind::Bin) return std::strong_ordering::equal;
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

BT substitute(const BTC& ctx, const BT& t) {
  if (ctx.is_nil()) return BT::nil();
  if (ctx.is_hole()) return t;
  return BT::bin(substitute(ctx.left(), t), substitute(ctx.right(), t));
}

namespace {

std::vector<BTC> variants_rec(const BT& t) {
  // Only a nil position can be a hole, since _[nil] = nil.
  if (t.is_nil()) return {BTC::nil(), BTC::hole()};
  std::vector<BTC> out;
  for (const auto& l : variants_rec(t.left())) {
    for (const auto& r : variants_rec(t.right())) out.push_back(BTC::bin(l, r));
  }
  return out;
}

}  // namespace

std::vector<BTC> variants(const BT& t) {
  if (t.node_count() > kMaxVariantNodes) {
    throw Error("cap-exceeded", "variants limited to trees of at most " +
                                    std::to_string(kMaxVariantNodes) + " nodes");
  }
  auto out = variants_rec(t);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace relfork
