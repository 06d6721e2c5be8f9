#pragma once

#include <initializer_list>

#include "qevo/formula.hpp"

namespace qevo::test {

// clause / formula builders taking DIMACS-style signed literals
inline Clause make_clause(std::initializer_list<int> lits) {
    Clause c;
    for (int l : lits)
        c.push_back(Literal::from_dimacs(l));
    return c;
}

inline CnfFormula make_formula(int num_vars, std::initializer_list<std::initializer_list<int>> clauses) {
    std::vector<Clause> cs;
    for (const auto& cl : clauses)
        cs.push_back(make_clause(cl));
    return CnfFormula(num_vars, std::move(cs));
}

} // namespace qevo::test
