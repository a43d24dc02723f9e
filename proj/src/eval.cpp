#include "relfork/eval.hpp"

#include "relfork/error.hpp"

namespace relfork {

FiniteRelation eval(const Term& t, const FiniteEnv& env, const AlgebraModel& model) {
  switch (t.kind) {
    case TermKind::Var: {
      auto it = env.find(t.name);
      if (it == env.end()) throw Error("unbound-variable", "unbound variable '" + t.name + "'");
      return it->second;
    }
    case TermKind::Const:
      switch (t.constant) {
        case ConstKind::Zero: return model.empty();
        case ConstKind::One: return model.unit();
        case ConstKind::Id: return model.identity();
        default:
          throw Error("no-fork-structure", "'" + print(t) + "' needs a pairing function");
      }
    case TermKind::Union: return join(eval(*t.lhs, env, model), eval(*t.rhs, env, model));
    case TermKind::Meet: return meet(eval(*t.lhs, env, model), eval(*t.rhs, env, model));
    case TermKind::Complement: return model.complement(eval(*t.lhs, env, model));
    case TermKind::Compose: return compose(eval(*t.lhs, env, model), eval(*t.rhs, env, model));
    case TermKind::Converse: return converse(eval(*t.lhs, env, model));
    case TermKind::Fork:
      throw Error("no-fork-structure", "finite relation algebras carry no pairing function");
  }
  throw Error("internal", "unknown term kind");
}

bool holds(const Formula& f, const FiniteEnv& env, const AlgebraModel& model) {
  switch (f.kind) {
    case FormulaKind::Eq:
      return eval(*f.lhs_term, env, model) == eval(*f.rhs_term, env, model);
    case FormulaKind::Leq: {
      // a <= b abbreviates a + b = b
      FiniteRelation b = eval(*f.rhs_term, env, model);
      return join(eval(*f.lhs_term, env, model), b) == b;
    }
    case FormulaKind::Not: return !holds(*f.lhs, env, model);
    case FormulaKind::And: return holds(*f.lhs, env, model) && holds(*f.rhs, env, model);
    case FormulaKind::Or: return holds(*f.lhs, env, model) || holds(*f.rhs, env, model);
    case FormulaKind::Implies: return !holds(*f.lhs, env, model) || holds(*f.rhs, env, model);
  }
  throw Error("internal", "unknown formula kind");
}

}  // namespace relfork
