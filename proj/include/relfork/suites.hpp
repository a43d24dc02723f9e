#pragma once

#include <string>
#include <vector>

#include "relfork/term.hpp"

namespace relfork {

// cr_equational: the seven relational axioms of the equational calculus.
// cr_tarski: Tarski's thirteen axioms, including the simplicity disjunction.
// cfa: cr_equational plus the three fork axioms.
// cfau: cfa plus the urelement axiom.
std::vector<std::string> axiom_suite_text(const std::string& name);
std::vector<FormulaPtr> axiom_suite(const std::string& name);
std::vector<std::string> suite_names();

// Number of leading formulas of cfa/cfau that come from cr_equational.
inline constexpr std::size_t kEquationalAxiomCount = 7;

}  // namespace relfork
