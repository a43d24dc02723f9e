#pragma once

// Relation designations (terms) and formulas over them.

#include <memory>
#include <set>
#include <string>
#include <variant>

namespace relfork {

enum class TermKind { Var, Const, Union, Meet, Complement, Compose, Converse, Fork };
enum class ConstKind { Zero, One, Id, Pi, Rho, IdU };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  std::string name;               // Var
  ConstKind constant = ConstKind::Zero;  // Const
  TermPtr lhs;                    // unary operand or left operand
  TermPtr rhs;
};

TermPtr var(std::string name);
TermPtr constant(ConstKind c);
TermPtr join(TermPtr a, TermPtr b);
TermPtr meet(TermPtr a, TermPtr b);
TermPtr complement(TermPtr a);
TermPtr compose(TermPtr a, TermPtr b);
TermPtr converse(TermPtr a);
TermPtr fork(TermPtr a, TermPtr b);

bool equal(const Term& a, const Term& b);
bool equal(const TermPtr& a, const TermPtr& b);
bool uses_fork(const Term& t);  // fork or pi/rho/1u

enum class FormulaKind { Eq, Leq, Not, And, Or, Implies };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind;
  TermPtr lhs_term;  // Eq, Leq
  TermPtr rhs_term;
  FormulaPtr lhs;    // Not (single operand), And, Or, Implies
  FormulaPtr rhs;
};

FormulaPtr eq(TermPtr a, TermPtr b);
FormulaPtr leq(TermPtr a, TermPtr b);
FormulaPtr negate(FormulaPtr f);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);

bool equal(const Formula& a, const Formula& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);
bool uses_fork(const Formula& f);

// Variable names in sorted order.
std::set<std::string> variables(const Term& t);
std::set<std::string> variables(const Formula& f);

// Canonical text; parse_term(print(t)) reproduces t exactly.
std::string print(const Term& t);
std::string print(const Formula& f);
inline std::string print(const TermPtr& t) { return print(*t); }
inline std::string print(const FormulaPtr& f) { return print(*f); }

TermPtr parse_term(const std::string& text);
FormulaPtr parse_formula(const std::string& text);
// Formula if the text is one, otherwise a term.
std::variant<FormulaPtr, TermPtr> parse(const std::string& text);

}  // namespace relfork
