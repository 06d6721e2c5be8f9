#include "qevo/relaxation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qevo {

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

} // namespace

ContinuousAssignment::ContinuousAssignment(std::vector<double> values) : values_(std::move(values)) {
    for (double& v : values_)
        v = clamp01(v);
}

ContinuousAssignment ContinuousAssignment::constant(std::size_t n, double value) {
    return ContinuousAssignment(std::vector<double>(n, value));
}

void ContinuousAssignment::set(std::size_t i, double value) { values_[i] = clamp01(value); }

QuantizationGrid::QuantizationGrid(double g) : resolution(g) {
    if (!(g > 0.0) || g > 1.0)
        throw std::invalid_argument("grid resolution must be in (0,1], got " + std::to_string(g));
}

void FluxParams::validate() const {
    if (!(delta > 0.0))
        throw std::invalid_argument("flux delta must be positive");
    if (stay_probability < 0.0 || stay_probability > 1.0)
        throw std::invalid_argument("stay probability must be in [0,1]");
}

double eval_fitness(const CnfFormula& formula, const ContinuousAssignment& x) {
    if (x.size() != static_cast<std::size_t>(formula.num_variables()))
        throw std::invalid_argument("assignment length " + std::to_string(x.size()) +
                                    " does not match variable count " +
                                    std::to_string(formula.num_variables()));
    double eta = 1.0;
    for (const Clause& clause : formula.clauses()) {
        double miss = 1.0; // probability the clause is falsified
        for (const Literal& lit : clause) {
            const double xv = x[static_cast<std::size_t>(lit.var)];
            miss *= lit.negated ? xv : 1.0 - xv;
        }
        eta *= 1.0 - miss;
        if (eta == 0.0)
            break;
    }
    return eta;
}

ContinuousAssignment quantize(const ContinuousAssignment& x, const QuantizationGrid& grid) {
    const double g = grid.resolution;
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        // nearest multiple of g, ties up; exact for binary-fraction grids
        out[i] = clamp01(std::floor(x[i] / g + 0.5) * g);
    }
    return ContinuousAssignment(std::move(out));
}

ContinuousAssignment flux(const ContinuousAssignment& x, const FluxParams& params, Rng& rng) {
    params.validate();
    const double up_cut = params.stay_probability + (1.0 - params.stay_probability) * 0.5;
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double u = rng.next_double();
        double v = x[i];
        if (u >= params.stay_probability)
            v = u < up_cut ? v + params.delta : v - params.delta;
        out[i] = clamp01(v);
    }
    return ContinuousAssignment(std::move(out));
}

BinaryAssignment to_binary(const ContinuousAssignment& x) {
    BinaryAssignment b(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        b[i] = x[i] >= 0.5;
    return b;
}

ContinuousAssignment from_binary(const BinaryAssignment& b) {
    std::vector<double> values(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        values[i] = b[i] ? 1.0 : 0.0;
    return ContinuousAssignment(std::move(values));
}

} // namespace qevo
