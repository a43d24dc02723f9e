#include "relfork/seq.hpp"

#include <sstream>

#include "relfork/error.hpp"

namespace relfork {

const char* to_string(Proj p) { return p == Proj::Pi ? "pi" : "rho"; }

Proj parse_proj(const std::string& text) {
  if (text == "pi") return Proj::Pi;
  if (text == "rho") return Proj::Rho;
  throw Error("syntax-error", "expected 'pi' or 'rho', got '" + text + "'");
}

Seq Seq::elem(Proj p) {
  Seq s;
  s.symbols_.push_back(p);
  return s;
}

Seq Seq::cons(Proj p, const Seq& rest) {
  Seq s;
  s.symbols_.reserve(rest.symbols_.size() + 1);
  s.symbols_.push_back(p);
  s.symbols_.insert(s.symbols_.end(), rest.symbols_.begin(), rest.symbols_.end());
  return s;
}

Seq Seq::from_symbols(std::vector<Proj> symbols) {
  if (symbols.empty()) throw Error("empty-sequence", "sequences are non-empty");
  Seq s;
  s.symbols_ = std::move(symbols);
  return s;
}

Seq Seq::parse(const std::string& text) {
  std::vector<Proj> symbols;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, '.')) symbols.push_back(parse_proj(item));
  if (!text.empty() && text.back() == '.') throw Error("syntax-error", "trailing '.' in '" + text + "'");
  return from_symbols(std::move(symbols));
}

Seq Seq::tail() const {
  if (is_elem()) throw Error("out-of-range", "elem has no tail");
  return from_symbols(std::vector<Proj>(symbols_.begin() + 1, symbols_.end()));
}

std::string Seq::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out += '.';
    out += relfork::to_string(symbols_[i]);
  }
  return out;
}

std::size_t seq_long(const Seq& s) { return s.symbols().size(); }

Proj seq_index(const Seq& s, std::size_t i) {
  if (i < 1 || i > seq_long(s)) {
    throw Error("out-of-range", "index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(seq_long(s)));
  }
  return s.symbols()[i - 1];
}

Seq seq_suffix(const Seq& s, std::size_t i) {
  const std::size_t n = seq_long(s);
  if (i < 1 || i > n) {
    throw Error("out-of-range", "suffix length " + std::to_string(i) + " outside 1.." +
                                    std::to_string(n));
  }
  return Seq::from_symbols(std::vector<Proj>(s.symbols().end() - static_cast<long>(i),
                                             s.symbols().end()));
}

Seq seq_concat(const Seq& a, const Seq& b) {
  std::vector<Proj> out = a.symbols();
  out.insert(out.end(), b.symbols().begin(), b.symbols().end());
  return Seq::from_symbols(std::move(out));
}

bool ll_rel(const Seq& s, const BT& t) {
  if (t.is_nil()) return false;
  if (s.is_elem()) {
    return s.head() == Proj::Pi ? t.left().is_nil() : t.right().is_nil();
  }
  return ll_rel(s.tail(), s.head() == Proj::Pi ? t.left() : t.right());
}

std::vector<Seq> all_seqs(std::size_t max_len) {
  std::vector<Seq> out;
  std::vector<Seq> layer{Seq::elem(Proj::Pi), Seq::elem(Proj::Rho)};
  for (std::size_t len = 1; len <= max_len; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Seq> next;
    for (const auto& s : layer) {
      next.push_back(Seq::cons(Proj::Pi, s));
      next.push_back(Seq::cons(Proj::Rho, s));
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace relfork
