#pragma once

#include <cstddef>
#include <vector>

#include "qevo/formula.hpp"
#include "qevo/rng.hpp"

namespace qevo {

/// Solution vector x in [0,1]^n: each component is the probability that the
/// corresponding variable is true. All mutators clamp into [0,1].
class ContinuousAssignment {
public:
    ContinuousAssignment() = default;
    explicit ContinuousAssignment(std::vector<double> values);
    static ContinuousAssignment constant(std::size_t n, double value);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    void set(std::size_t i, double value);
    const std::vector<double>& values() const { return values_; }

    friend bool operator==(const ContinuousAssignment&, const ContinuousAssignment&) = default;

private:
    std::vector<double> values_;
};

/// Precision grid with step g in (0,1]. Grid points are the multiples of g
/// clamped into [0,1]; g = 1 is the binary grid {0,1}. The solver always
/// uses g = delta * mu, which with the default mu = 2 keeps every step an
/// exact binary fraction.
struct QuantizationGrid {
    double resolution = 1.0;

    explicit QuantizationGrid(double g);
    static QuantizationGrid binary() { return QuantizationGrid(1.0); }
};

/// Random perturbation parameters: each component stays with probability
/// stay_probability or moves by +-delta (equal split of the remainder).
struct FluxParams {
    double delta = 0.5;
    double stay_probability = 1.0 / 3.0;

    void validate() const;
};

/// Smooth quality measure eta in [0,1]. Components are read as
/// probability-of-true: a positive literal contributes p = x_i, a negated
/// one p = 1 - x_i. Each clause scores 1 - prod(1 - p) over its literals
/// and eta is the product of the clause scores, treating clauses as
/// independent even when they share variables. At binary corner points this
/// yields exactly 1.0 on satisfying assignments and exactly 0.0 otherwise.
/// Throws std::invalid_argument on length mismatch.
double eval_fitness(const CnfFormula& formula, const ContinuousAssignment& x);

/// Rounds every component to the nearest grid point, ties rounding up.
/// Output is exactly on the grid and the operation is idempotent.
ContinuousAssignment quantize(const ContinuousAssignment& x, const QuantizationGrid& grid);

/// One random flux: per component, stay / +delta / -delta, clamped to
/// [0,1]. Consumes exactly one rng draw per component, so the result is a
/// pure function of (x, params, rng state).
ContinuousAssignment flux(const ContinuousAssignment& x, const FluxParams& params, Rng& rng);

/// Binary rounding at threshold 0.5, ties up. Equals quantize(x, binary
/// grid) mapped to booleans.
BinaryAssignment to_binary(const ContinuousAssignment& x);

/// Embeds a binary assignment at the corresponding corner of [0,1]^n.
ContinuousAssignment from_binary(const BinaryAssignment& b);

} // namespace qevo
