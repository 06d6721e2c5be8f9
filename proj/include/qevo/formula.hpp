#pragma once

#include <cstddef>
#include <vector>

namespace qevo {

/// A boolean variable or its negation. Variables are 0-indexed throughout
/// the library API; the 1-indexed DIMACS convention applies only at the
/// parse/serialize boundary (see dimacs.hpp).
struct Literal {
    int var = 0;
    bool negated = false;

    int to_dimacs() const { return negated ? -(var + 1) : var + 1; }
    static Literal from_dimacs(int code);

    friend bool operator==(const Literal&, const Literal&) = default;
};

/// Disjunction of literals. Never empty inside a valid CnfFormula.
using Clause = std::vector<Literal>;

/// One boolean value per variable, index-aligned with the formula.
using BinaryAssignment = std::vector<bool>;

/// Immutable clause database over num_variables() boolean variables.
/// Construction normalizes each clause by dropping duplicate literals
/// (same variable, same polarity) and validates that every variable index
/// is in range. Tautological clauses (x or not-x) are kept as written.
class CnfFormula {
public:
    CnfFormula(int num_variables, std::vector<Clause> clauses);

    int num_variables() const { return num_variables_; }
    std::size_t num_clauses() const { return clauses_.size(); }
    const std::vector<Clause>& clauses() const { return clauses_; }

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

private:
    int num_variables_;
    std::vector<Clause> clauses_;
};

/// True iff every clause has at least one literal satisfied by the
/// assignment. A formula with no clauses is vacuously true.
/// Throws std::invalid_argument on length mismatch.
bool eval_boolean(const CnfFormula& formula, const BinaryAssignment& assignment);

/// Number of satisfied clauses, in [0, num_clauses()]. Equals num_clauses()
/// exactly when eval_boolean is true.
std::size_t count_satisfied(const CnfFormula& formula, const BinaryAssignment& assignment);

} // namespace qevo
