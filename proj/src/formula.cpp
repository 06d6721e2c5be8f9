#include "qevo/formula.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qevo {

Literal Literal::from_dimacs(int code) {
    if (code == 0)
        throw std::invalid_argument("literal code must be non-zero");
    return Literal{std::abs(code) - 1, code < 0};
}

CnfFormula::CnfFormula(int num_variables, std::vector<Clause> clauses)
    : num_variables_(num_variables), clauses_(std::move(clauses)) {
    if (num_variables_ < 1)
        throw std::invalid_argument("formula needs at least one variable");
    for (auto& clause : clauses_) {
        if (clause.empty())
            throw std::invalid_argument("empty clause");
        for (const Literal& lit : clause) {
            if (lit.var < 0 || lit.var >= num_variables_)
                throw std::invalid_argument("literal variable " + std::to_string(lit.var + 1) +
                                            " out of range [1, " + std::to_string(num_variables_) + "]");
        }
        // drop duplicate literals, keeping first occurrence order
        Clause deduped;
        deduped.reserve(clause.size());
        for (const Literal& lit : clause) {
            if (std::find(deduped.begin(), deduped.end(), lit) == deduped.end())
                deduped.push_back(lit);
        }
        clause = std::move(deduped);
    }
}

namespace {

bool clause_satisfied(const Clause& clause, const BinaryAssignment& assignment) {
    for (const Literal& lit : clause) {
        if (assignment[static_cast<std::size_t>(lit.var)] != lit.negated)
            return true;
    }
    return false;
}

void check_length(const CnfFormula& formula, const BinaryAssignment& assignment) {
    if (assignment.size() != static_cast<std::size_t>(formula.num_variables()))
        throw std::invalid_argument("assignment length " + std::to_string(assignment.size()) +
                                    " does not match variable count " +
                                    std::to_string(formula.num_variables()));
}

} // namespace

bool eval_boolean(const CnfFormula& formula, const BinaryAssignment& assignment) {
    check_length(formula, assignment);
    for (const Clause& clause : formula.clauses()) {
        if (!clause_satisfied(clause, assignment))
            return false;
    }
    return true;
}

std::size_t count_satisfied(const CnfFormula& formula, const BinaryAssignment& assignment) {
    check_length(formula, assignment);
    std::size_t count = 0;
    for (const Clause& clause : formula.clauses()) {
        if (clause_satisfied(clause, assignment))
            ++count;
    }
    return count;
}

} // namespace qevo
