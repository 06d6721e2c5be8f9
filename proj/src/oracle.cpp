#include "qevo/oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qevo/rng.hpp"

namespace qevo {

std::optional<BinaryAssignment> brute_force_solve(const CnfFormula& formula) {
    const int n = formula.num_variables();
    if (n > 30)
        throw std::invalid_argument("brute force is limited to 30 variables");

    // Bit masks per clause: counting order over masks with variable 0 in the
    // top bit is exactly lexicographic order over assignments.
    struct ClauseMask {
        std::uint64_t pos = 0;
        std::uint64_t neg = 0;
    };
    std::vector<ClauseMask> masks;
    masks.reserve(formula.num_clauses());
    for (const Clause& clause : formula.clauses()) {
        ClauseMask m;
        for (const Literal& lit : clause) {
            const std::uint64_t bit = 1ull << (n - 1 - lit.var);
            (lit.negated ? m.neg : m.pos) |= bit;
        }
        masks.push_back(m);
    }

    const std::uint64_t total = 1ull << n;
    for (std::uint64_t a = 0; a < total; ++a) {
        bool ok = true;
        for (const ClauseMask& m : masks) {
            if ((a & m.pos) == 0 && (~a & m.neg) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            BinaryAssignment b(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                b[static_cast<std::size_t>(i)] = (a >> (n - 1 - i)) & 1;
            return b;
        }
    }
    return std::nullopt;
}

namespace {

bool clause_hits_assignment(const Clause& clause, const BinaryAssignment& assignment) {
    for (const Literal& lit : clause) {
        if (assignment[static_cast<std::size_t>(lit.var)] != lit.negated)
            return true;
    }
    return false;
}

} // namespace

GeneratedInstance generate_random_ksat(const InstanceSpec& spec) {
    const int n = spec.num_variables;
    const int k = spec.clause_width;
    if (n < 1)
        throw std::invalid_argument("need at least one variable");
    if (k < 1 || k > n)
        throw std::invalid_argument("clause width must be in [1, num_variables]");
    if (spec.num_clauses < 0)
        throw std::invalid_argument("clause count must be non-negative");

    Rng rng(spec.seed);

    std::optional<BinaryAssignment> planted;
    if (spec.require_satisfiable) {
        BinaryAssignment hidden(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            hidden[static_cast<std::size_t>(i)] = rng.next_bool();
        planted = std::move(hidden);
    }

    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);

    std::vector<Clause> clauses;
    clauses.reserve(static_cast<std::size_t>(spec.num_clauses));
    for (int c = 0; c < spec.num_clauses; ++c) {
        Clause clause;
        do {
            clause.clear();
            // partial Fisher-Yates: first k pool entries become the clause vars
            for (int j = 0; j < k; ++j) {
                const std::size_t pick =
                    static_cast<std::size_t>(j) + rng.next_below(static_cast<std::uint64_t>(n - j));
                std::swap(pool[static_cast<std::size_t>(j)], pool[pick]);
                clause.push_back(Literal{pool[static_cast<std::size_t>(j)], rng.next_bool()});
            }
        } while (planted && !clause_hits_assignment(clause, *planted));
        clauses.push_back(std::move(clause));
    }

    return GeneratedInstance{CnfFormula(n, std::move(clauses)), std::move(planted)};
}

} // namespace qevo
