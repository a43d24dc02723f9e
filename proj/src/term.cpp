#include "relfork/term.hpp"

namespace relfork {

namespace {

TermPtr make_term(TermKind kind, TermPtr a = nullptr, TermPtr b = nullptr) {
  return std::make_shared<const Term>(Term{kind, {}, ConstKind::Zero, std::move(a), std::move(b)});
}

FormulaPtr make_formula(FormulaKind kind, FormulaPtr a, FormulaPtr b) {
  return std::make_shared<const Formula>(Formula{kind, nullptr, nullptr, std::move(a), std::move(b)});
}

void collect(const Term& t, std::set<std::string>& out) {
  if (t.kind == TermKind::Var) out.insert(t.name);
  if (t.lhs) collect(*t.lhs, out);
  if (t.rhs) collect(*t.rhs, out);
}

void collect(const Formula& f, std::set<std::string>& out) {
  if (f.lhs_term) collect(*f.lhs_term, out);
  if (f.rhs_term) collect(*f.rhs_term, out);
  if (f.lhs) collect(*f.lhs, out);
  if (f.rhs) collect(*f.rhs, out);
}

// Binding strength; higher binds tighter.
int level(const Term& t) {
  switch (t.kind) {
    case TermKind::Union: return 0;
    case TermKind::Meet: return 1;
    case TermKind::Compose:
    case TermKind::Fork: return 2;
    case TermKind::Complement: return 3;
    case TermKind::Converse: return 4;
    case TermKind::Var:
    case TermKind::Const: return 5;
  }
  return 5;
}

std::string print_at(const Term& t, int min_level);

std::string print_bare(const Term& t) {
  switch (t.kind) {
    case TermKind::Var: return t.name;
    case TermKind::Const:
      switch (t.constant) {
        case ConstKind::Zero: return "0";
        case ConstKind::One: return "1";
        case ConstKind::Id: return "1'";
        case ConstKind::Pi: return "pi";
        case ConstKind::Rho: return "rho";
        case ConstKind::IdU: return "1u";
      }
      return "?";
    case TermKind::Union: return print_at(*t.lhs, 0) + " + " + print_at(*t.rhs, 1);
    case TermKind::Meet: return print_at(*t.lhs, 1) + " & " + print_at(*t.rhs, 2);
    case TermKind::Compose: return print_at(*t.lhs, 2) + ";" + print_at(*t.rhs, 3);
    case TermKind::Fork: return print_at(*t.lhs, 2) + " # " + print_at(*t.rhs, 3);
    case TermKind::Complement: return "~" + print_at(*t.lhs, 3);
    case TermKind::Converse: return print_at(*t.lhs, 4) + "^";
  }
  return "?";
}

std::string print_at(const Term& t, int min_level) {
  if (level(t) < min_level) return "(" + print_bare(t) + ")";
  return print_bare(t);
}

int level(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::Implies: return 0;
    case FormulaKind::Or: return 1;
    case FormulaKind::And: return 2;
    case FormulaKind::Not: return 3;
    case FormulaKind::Eq:
    case FormulaKind::Leq: return 4;
  }
  return 4;
}

std::string print_at(const Formula& f, int min_level);

std::string print_bare(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::Eq: return print(*f.lhs_term) + " = " + print(*f.rhs_term);
    case FormulaKind::Leq: return print(*f.lhs_term) + " <= " + print(*f.rhs_term);
    case FormulaKind::Not: return "!" + print_at(*f.lhs, 3);
    case FormulaKind::And: return print_at(*f.lhs, 2) + " /\\ " + print_at(*f.rhs, 3);
    case FormulaKind::Or: return print_at(*f.lhs, 1) + " \\/ " + print_at(*f.rhs, 2);
    // right-associative
    case FormulaKind::Implies: return print_at(*f.lhs, 1) + " -> " + print_at(*f.rhs, 0);
  }
  return "?";
}

std::string print_at(const Formula& f, int min_level) {
  if (level(f) < min_level) return "(" + print_bare(f) + ")";
  return print_bare(f);
}

}  // namespace

TermPtr var(std::string name) {
  return std::make_shared<const Term>(Term{TermKind::Var, std::move(name), ConstKind::Zero, nullptr, nullptr});
}

TermPtr constant(ConstKind c) {
  return std::make_shared<const Term>(Term{TermKind::Const, {}, c, nullptr, nullptr});
}

TermPtr join(TermPtr a, TermPtr b) { return make_term(TermKind::Union, std::move(a), std::move(b)); }
TermPtr meet(TermPtr a, TermPtr b) { return make_term(TermKind::Meet, std::move(a), std::move(b)); }
TermPtr complement(TermPtr a) { return make_term(TermKind::Complement, std::move(a)); }
TermPtr compose(TermPtr a, TermPtr b) { return make_term(TermKind::Compose, std::move(a), std::move(b)); }
TermPtr converse(TermPtr a) { return make_term(TermKind::Converse, std::move(a)); }
TermPtr fork(TermPtr a, TermPtr b) { return make_term(TermKind::Fork, std::move(a), std::move(b)); }

bool equal(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == TermKind::Var) return a.name == b.name;
  if (a.kind == TermKind::Const) return a.constant == b.constant;
  return equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs);
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (!a || !b) return !a && !b;
  return equal(*a, *b);
}

bool uses_fork(const Term& t) {
  if (t.kind == TermKind::Fork) return true;
  if (t.kind == TermKind::Const) {
    return t.constant == ConstKind::Pi || t.constant == ConstKind::Rho ||
           t.constant == ConstKind::IdU;
  }
  return (t.lhs && uses_fork(*t.lhs)) || (t.rhs && uses_fork(*t.rhs));
}

FormulaPtr eq(TermPtr a, TermPtr b) {
  return std::make_shared<const Formula>(Formula{FormulaKind::Eq, std::move(a), std::move(b), nullptr, nullptr});
}

FormulaPtr leq(TermPtr a, TermPtr b) {
  return std::make_shared<const Formula>(Formula{FormulaKind::Leq, std::move(a), std::move(b), nullptr, nullptr});
}

FormulaPtr negate(FormulaPtr f) { return make_formula(FormulaKind::Not, std::move(f), nullptr); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return make_formula(FormulaKind::And, std::move(a), std::move(b)); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return make_formula(FormulaKind::Or, std::move(a), std::move(b)); }
FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
  return make_formula(FormulaKind::Implies, std::move(a), std::move(b));
}

bool equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  return equal(a.lhs_term, b.lhs_term) && equal(a.rhs_term, b.rhs_term) && equal(a.lhs, b.lhs) &&
         equal(a.rhs, b.rhs);
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (!a || !b) return !a && !b;
  return equal(*a, *b);
}

bool uses_fork(const Formula& f) {
  return (f.lhs_term && uses_fork(*f.lhs_term)) || (f.rhs_term && uses_fork(*f.rhs_term)) ||
         (f.lhs && uses_fork(*f.lhs)) || (f.rhs && uses_fork(*f.rhs));
}

std::set<std::string> variables(const Term& t) {
  std::set<std::string> out;
  collect(t, out);
  return out;
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect(f, out);
  return out;
}

std::string print(const Term& t) { return print_at(t, 0); }
std::string print(const Formula& f) { return print_at(f, 0); }

}  // namespace relfork
