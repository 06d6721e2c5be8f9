#pragma once

#include <cstdint>
#include <optional>

#include "qevo/formula.hpp"

namespace qevo {

/// Parameters for random k-SAT generation. With require_satisfiable a
/// hidden assignment is planted: every clause is resampled until the hidden
/// assignment satisfies it, which guarantees satisfiability at the cost of
/// a distribution bias relative to uniform random k-SAT.
struct InstanceSpec {
    int num_variables = 0;
    int num_clauses = 0;
    int clause_width = 3;
    std::uint64_t seed = 1;
    bool require_satisfiable = true;
};

struct GeneratedInstance {
    CnfFormula formula;
    /// The hidden assignment when require_satisfiable was set.
    std::optional<BinaryAssignment> planted;
};

/// Exhaustive solve by enumeration of all 2^n corners in lexicographic
/// order (variable 0 most significant), so the returned satisfying
/// assignment is always the lexicographically smallest one. nullopt means
/// unsatisfiable, and that is exact. Guarded to num_variables <= 30;
/// throws std::invalid_argument beyond.
std::optional<BinaryAssignment> brute_force_solve(const CnfFormula& formula);

/// Each clause draws clause_width distinct variables uniformly without
/// replacement, each negated with probability 1/2. Deterministic given the
/// seed.
GeneratedInstance generate_random_ksat(const InstanceSpec& spec);

} // namespace qevo
