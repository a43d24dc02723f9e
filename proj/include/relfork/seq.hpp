#pragma once

// Non-empty words over {pi, rho}, written head first: "pi.rho.pi".

#include <cstddef>
#include <string>
#include <vector>

#include "relfork/btree.hpp"

namespace relfork {

enum class Proj { Pi, Rho };

const char* to_string(Proj p);
Proj parse_proj(const std::string& text);

class Seq {
 public:
  static Seq elem(Proj p);
  static Seq cons(Proj p, const Seq& rest);
  static Seq from_symbols(std::vector<Proj> symbols);  // throws on empty
  static Seq parse(const std::string& text);

  const std::vector<Proj>& symbols() const noexcept { return symbols_; }
  Proj head() const { return symbols_.front(); }
  bool is_elem() const noexcept { return symbols_.size() == 1; }
  Seq tail() const;  // only for cons

  std::string to_string() const;

  friend bool operator==(const Seq&, const Seq&) = default;
  friend auto operator<=>(const Seq&, const Seq&) = default;

 private:
  Seq() = default;
  std::vector<Proj> symbols_;
};

std::size_t seq_long(const Seq& s);
// 1-based, from the head.
Proj seq_index(const Seq& s, std::size_t i);
// The length-i tail of s, 1 <= i <= long(s).
Seq seq_suffix(const Seq& s, std::size_t i);
Seq seq_concat(const Seq& a, const Seq& b);
// s << t
bool ll_rel(const Seq& s, const BT& t);

// Every sequence of length 1..max_len, shortest first.
std::vector<Seq> all_seqs(std::size_t max_len);

}  // namespace relfork
