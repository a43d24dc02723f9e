// Recursive-descent parser for terms and formulas.
//
//   formula  := disj ('->' formula)?
//   disj     := conj ('\/' conj)*
//   conj     := neg ('/\' neg)*
//   neg      := '!' neg | atom
//   atom     := term ('=' | '<=') term | '(' formula ')'
//   term     := meet ('+' meet)*
//   meet     := seq ('&' seq)*
//   seq      := unary ((';' | '#') unary)*
//   unary    := '~' unary | postfix
//   postfix  := primary '^'*
//   primary  := var | const | 'rsum' '(' term ',' term ')' | '(' term ')'

#include <cctype>
#include <vector>

#include "relfork/error.hpp"
#include "relfork/term.hpp"

namespace relfork {

namespace {

enum class Tok {
  Ident, Zero, One, Id, Diversity, IdU, Pi, Rho, Rsum,
  Plus, Amp, Tilde, Semi, Caret, Hash, LParen, RParen, Comma,
  Eq, Leq, Bang, And, Or, Arrow, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](const char* lit) { return s.compare(i, std::char_traits<char>::length(lit), lit) == 0; };
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t at = i;
    if (std::islower(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && (std::islower(static_cast<unsigned char>(s[j])) ||
                              std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
        ++j;
      }
      std::string word = s.substr(i, j - i);
      Tok kind = Tok::Ident;
      if (word == "pi") kind = Tok::Pi;
      else if (word == "rho") kind = Tok::Rho;
      else if (word == "rsum") kind = Tok::Rsum;
      out.push_back({kind, word, at});
      i = j;
      continue;
    }
    struct Fixed { const char* lit; Tok kind; };
    // Longest literals first.
    static const Fixed fixed[] = {
        {"1'", Tok::Id}, {"0'", Tok::Diversity}, {"1u", Tok::IdU}, {"<=", Tok::Leq},
        {"/\\", Tok::And}, {"\\/", Tok::Or}, {"->", Tok::Arrow}, {"0", Tok::Zero},
        {"1", Tok::One}, {"+", Tok::Plus}, {"&", Tok::Amp}, {"~", Tok::Tilde},
        {";", Tok::Semi}, {"^", Tok::Caret}, {"#", Tok::Hash}, {"(", Tok::LParen},
        {")", Tok::RParen}, {",", Tok::Comma}, {"=", Tok::Eq}, {"!", Tok::Bang},
    };
    bool matched = false;
    for (const auto& f : fixed) {
      if (starts(f.lit)) {
        std::size_t len = std::char_traits<char>::length(f.lit);
        out.push_back({f.kind, s.substr(i, len), at});
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw Error("syntax-error", "unknown token '" + std::string(1, s[i]) + "' at position " +
                                      std::to_string(i));
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

struct ParseFailure {
  std::size_t pos;
  std::string what;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr formula() {
    FormulaPtr lhs = disjunction();
    if (accept(Tok::Arrow)) return implies(lhs, formula());
    return lhs;
  }

  TermPtr term() {
    TermPtr t = meet_level();
    while (accept(Tok::Plus)) t = join(t, meet_level());
    return t;
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
  }

  [[noreturn]] void rethrow_best() const {
    throw Error("syntax-error", best_.what + " at " + position_text(best_.pos));
  }

 private:
  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (accept(Tok::Or)) f = disj(f, conjunction());
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = negation();
    while (accept(Tok::And)) f = conj(f, negation());
    return f;
  }

  FormulaPtr negation() {
    if (accept(Tok::Bang)) return negate(negation());
    return atom();
  }

  FormulaPtr atom() {
    const std::size_t save = i_;
    try {
      TermPtr lhs = term();
      if (accept(Tok::Eq)) return eq(lhs, term());
      if (accept(Tok::Leq)) return leq(lhs, term());
      fail("expected '=' or '<='");
    } catch (const ParseFailure&) {
      if (peek_at(save).kind != Tok::LParen) throw;
    }
    i_ = save + 1;  // the '(' just checked
    FormulaPtr f = formula();
    expect(Tok::RParen, "')'");
    return f;
  }

  TermPtr meet_level() {
    TermPtr t = seq_level();
    while (accept(Tok::Amp)) t = meet(t, seq_level());
    return t;
  }

  TermPtr seq_level() {
    TermPtr t = unary();
    for (;;) {
      if (accept(Tok::Semi)) t = compose(t, unary());
      else if (accept(Tok::Hash)) t = fork(t, unary());
      else return t;
    }
  }

  TermPtr unary() {
    if (accept(Tok::Tilde)) return complement(unary());
    TermPtr t = primary();
    while (accept(Tok::Caret)) t = converse(t);
    return t;
  }

  TermPtr primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Ident: ++i_; return var(tok.text);
      case Tok::Zero: ++i_; return constant(ConstKind::Zero);
      case Tok::One: ++i_; return constant(ConstKind::One);
      case Tok::Id: ++i_; return constant(ConstKind::Id);
      case Tok::Diversity: ++i_; return complement(constant(ConstKind::Id));
      case Tok::IdU: ++i_; return constant(ConstKind::IdU);
      case Tok::Pi: ++i_; return constant(ConstKind::Pi);
      case Tok::Rho: ++i_; return constant(ConstKind::Rho);
      case Tok::Rsum: {
        ++i_;
        expect(Tok::LParen, "'('");
        TermPtr a = term();
        expect(Tok::Comma, "','");
        TermPtr b = term();
        expect(Tok::RParen, "')'");
        return complement(compose(complement(a), complement(b)));
      }
      case Tok::LParen: {
        ++i_;
        TermPtr t = term();
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::End: fail("unexpected end of input");
      default: fail("unexpected '" + tok.text + "'");
    }
  }

  const Token& peek() const { return toks_[i_]; }
  const Token& peek_at(std::size_t i) const { return toks_[i]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++i_;
    return true;
  }

  void expect(Tok kind, const char* what) {
    if (!accept(kind)) {
      fail(std::string("expected ") + what +
           (peek().kind == Tok::End ? "" : ", got '" + peek().text + "'"));
    }
  }

  [[noreturn]] void fail(const std::string& what) {
    const std::size_t pos = peek().pos;
    // Keep the failure that got furthest; it is the most useful message
    // after backtracking.
    if (!have_best_ || pos >= best_.pos) {
      best_ = {pos, what};
      have_best_ = true;
    }
    throw ParseFailure{pos, what};
  }

  std::string position_text(std::size_t pos) const {
    if (pos >= toks_.back().pos) return "end of input";
    return "position " + std::to_string(pos);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  ParseFailure best_{0, ""};
  bool have_best_ = false;
};

}  // namespace

TermPtr parse_term(const std::string& text) {
  Parser p(tokenize(text));
  try {
    TermPtr t = p.term();
    p.expect_end();
    return t;
  } catch (const ParseFailure&) {
    p.rethrow_best();
  }
}

FormulaPtr parse_formula(const std::string& text) {
  Parser p(tokenize(text));
  try {
    FormulaPtr f = p.formula();
    p.expect_end();
    return f;
  } catch (const ParseFailure&) {
    p.rethrow_best();
  }
}

std::variant<FormulaPtr, TermPtr> parse(const std::string& text) {
  try {
    return parse_formula(text);
  } catch (const Error&) {
    try {
      return parse_term(text);
    } catch (const Error&) {
    }
    throw;
  }
}

}  // namespace relfork
