#pragma once

// Evaluation of terms and formulas over finite proper relation algebras.

#include <map>
#include <string>

#include "relfork/relcore.hpp"
#include "relfork/term.hpp"

namespace relfork {

using FiniteEnv = std::map<std::string, FiniteRelation>;

// Throws "unbound-variable", and "no-fork-structure" for fork, pi, rho, 1u.
FiniteRelation eval(const Term& t, const FiniteEnv& env, const AlgebraModel& model);
bool holds(const Formula& f, const FiniteEnv& env, const AlgebraModel& model);

}  // namespace relfork
