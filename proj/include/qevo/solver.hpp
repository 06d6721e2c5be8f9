#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "qevo/formula.hpp"
#include "qevo/relaxation.hpp"
#include "qevo/rng.hpp"
#include "qevo/trace.hpp"

namespace qevo {

enum class InitMode { binary, uniform };

struct SolverConfig {
    double mu = 2.0;                      // step shrink/grow factor, > 1
    double delta_init = 0.5;              // in (0, delta_max()]
    double delta_min = 0.0;               // 0 = derive mu^-20
    double stay_probability = 1.0 / 3.0;  // flux stay weight, in [0,1]
    std::uint64_t max_cycles = 100000;    // admissibility checks (rounds)
    std::optional<std::chrono::milliseconds> time_limit;
    int population_size = 1;
    std::uint64_t seed = 1;               // fixed default, bare runs reproduce
    InitMode init = InitMode::binary;
    bool force_quantize = false;          // adopt quantized point even when worse
    int flux_patience = 32;               // non-improving fluxes per cycle before moving on
    bool collect_trace = false;

    /// The coarsest step; delta_max() * mu == 1, so quantizing with step
    /// delta_max * mu is exactly the binary grid.
    double delta_max() const { return 1.0 / mu; }
    double resolved_delta_min() const;

    /// Copy with delta_min filled in. Throws std::invalid_argument on any
    /// out-of-range field.
    SolverConfig resolved() const;
    void validate() const;
};

/// Evolving search state of a single solver (one population member).
struct SolverState {
    ContinuousAssignment current;
    double delta = 0.0;
    double eta = 0.0; // always eval_fitness(formula, current)
    std::uint64_t cycle = 0;
    BinaryAssignment best_binary; // best rounding seen so far
    std::size_t best_satisfied = 0;
};

enum class SolveStatus { SATISFIABLE, UNKNOWN };

std::string_view to_string(SolveStatus status);

/// The method is incomplete: it can certify SATISFIABLE (assignment present
/// and re-verified) but never unsatisfiability, so budget exhaustion yields
/// UNKNOWN.
struct SolveOutcome {
    SolveStatus status = SolveStatus::UNKNOWN;
    std::optional<BinaryAssignment> assignment;
    std::uint64_t cycles_used = 0;
    std::chrono::milliseconds wall_time{0};
    Trace trace; // populated when config.collect_trace is set
    BinaryAssignment best_binary;
    std::size_t best_satisfied = 0;
};

/// Observer for solver events; receives each record together with the state
/// it was produced from (after the event applied). Used by tests to check
/// invariants that the record alone cannot express, e.g. that quantization
/// outputs lie exactly on their grid.
class TraceSink {
public:
    virtual ~TraceSink() = default;
    virtual void on_record(const TraceRecord& record, const SolverState& state) = 0;
};

/// Collects records, ignores states.
class TraceCollector : public TraceSink {
public:
    void on_record(const TraceRecord& record, const SolverState&) override { records.push_back(record); }
    Trace records;
};

// --- single-member operations (config must be resolved(), see above) ---

/// Random start: binary corner by default (each component 0.0 or 1.0 with
/// probability 1/2) or uniform in [0,1]^n; delta = delta_init.
SolverState init_state(const CnfFormula& formula, const SolverConfig& config, Rng& rng);

/// One flux attempt. A strictly better candidate is adopted with delta
/// kept (returns true). An equal-eta candidate replaces the solution as
/// sideways drift but still counts as "not better": delta shrinks by mu
/// down to delta_min and the gradual phase goes on. A worse candidate is
/// discarded and shrinks delta the same way.
bool gradual_step(SolverState& state, const CnfFormula& formula, const SolverConfig& config, Rng& rng,
                  TraceSink* sink = nullptr);

/// Quantize with step delta * mu; while the rounded point strictly improves
/// eta and delta has not reached delta_max, adopt it, grow delta by mu and
/// repeat on the coarser grid. A final improving round is adopted without
/// growth. With force_quantize the rounded point is adopted even when it is
/// not an improvement (single round, no growth).
void quantization_phase(SolverState& state, const CnfFormula& formula, const SolverConfig& config,
                        TraceSink* sink = nullptr);

/// Rounds the current solution to binary and checks it against the formula;
/// returns the assignment iff it satisfies. Updates best_binary whenever the
/// satisfied-clause count improves.
std::optional<BinaryAssignment> admissibility_check(SolverState& state, const CnfFormula& formula,
                                                    TraceSink* sink = nullptr);

// --- full searches ---

/// Runs cycles of {flux until acceptance (bounded by flux_patience),
/// quantization phase, admissibility check} from a random start, after an
/// initial admissibility check of the start itself. Every cycle restarts
/// the step schedule at delta_init: the flux cascade shrinks delta while
/// candidates keep failing, the quantization ladder grows it while coarser
/// roundings keep improving, and the next cycle begins coarse again.
/// Without that per-cycle reset the step size ratchets down to delta_min
/// after the first hard cycle and the coarse jumps that let the search
/// leave a local optimum never fire again. Within a cycle delta changes
/// only by factors of mu, clamped to [delta_min, delta_max]. max_cycles
/// counts admissibility rounds; with population_size > 1 this dispatches
/// to the population search.
SolveOutcome solve(const CnfFormula& formula, const SolverConfig& config, TraceSink* sink = nullptr);

/// Population search: population_size members with independent streams
/// derived from the master seed each run one cycle; afterwards the member
/// with maximal eta (ties to the lowest index) has its (current, delta)
/// copied to every member. Any member finding a satisfying assignment ends
/// the search at that round, lowest finder index winning, so the outcome is
/// independent of member evaluation order. population_size = 1 is exactly
/// solve().
SolveOutcome solve_population(const CnfFormula& formula, const SolverConfig& config,
                              TraceSink* sink = nullptr);

} // namespace qevo
