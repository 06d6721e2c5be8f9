#include "qevo/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qevo {

double SolverConfig::resolved_delta_min() const {
    if (delta_min > 0.0)
        return delta_min;
    double g = 1.0; // mu^-20 by repeated division, exact for mu = 2
    for (int i = 0; i < 20; ++i)
        g /= mu;
    return g;
}

void SolverConfig::validate() const {
    if (!(mu > 1.0))
        throw std::invalid_argument("mu must be > 1");
    const double dmin = resolved_delta_min();
    if (!(delta_init > 0.0) || delta_init > delta_max())
        throw std::invalid_argument("delta_init must be in (0, 1/mu]");
    if (dmin > delta_init)
        throw std::invalid_argument("delta_min must not exceed delta_init");
    if (stay_probability < 0.0 || stay_probability > 1.0)
        throw std::invalid_argument("stay_probability must be in [0,1]");
    if (population_size < 1)
        throw std::invalid_argument("population_size must be >= 1");
    if (flux_patience < 1)
        throw std::invalid_argument("flux_patience must be >= 1");
    if (time_limit && time_limit->count() < 0)
        throw std::invalid_argument("time_limit must be non-negative");
}

SolverConfig SolverConfig::resolved() const {
    validate();
    SolverConfig copy = *this;
    copy.delta_min = resolved_delta_min();
    return copy;
}

std::string_view to_string(SolveStatus status) {
    return status == SolveStatus::SATISFIABLE ? "SATISFIABLE" : "UNKNOWN";
}

namespace {

void emit(TraceSink* sink, const TraceRecord& record, const SolverState& state) {
    if (sink)
        sink->on_record(record, state);
}

double linf_distance(const ContinuousAssignment& a, const ContinuousAssignment& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

} // namespace

SolverState init_state(const CnfFormula& formula, const SolverConfig& config, Rng& rng) {
    const std::size_t n = static_cast<std::size_t>(formula.num_variables());
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i)
        values[i] = config.init == InitMode::binary ? (rng.next_bool() ? 1.0 : 0.0) : rng.next_double();

    SolverState state;
    state.current = ContinuousAssignment(std::move(values));
    state.delta = config.delta_init;
    state.eta = eval_fitness(formula, state.current);
    state.cycle = 0;
    state.best_binary = to_binary(state.current);
    state.best_satisfied = count_satisfied(formula, state.best_binary);
    return state;
}

bool gradual_step(SolverState& state, const CnfFormula& formula, const SolverConfig& config, Rng& rng,
                  TraceSink* sink) {
    ContinuousAssignment candidate = flux(state.current, FluxParams{state.delta, config.stay_probability}, rng);
    const double candidate_eta = eval_fitness(formula, candidate);

    const double delta_before = state.delta;
    const double eta_before = state.eta;
    const bool accepted = candidate_eta > state.eta;
    if (candidate_eta >= state.eta) {
        // equal eta still moves: sideways drift is what lets the walk cross
        // the zero-fitness plateaus around binary corners
        state.current = std::move(candidate);
        state.eta = candidate_eta;
    }
    if (!accepted) {
        // "not better" (ties included) shrinks the step
        state.delta = std::max(state.delta / config.mu, config.resolved_delta_min());
    }
    emit(sink,
         TraceRecord{state.cycle, accepted ? TracePhase::FLUX_ACCEPT : TracePhase::FLUX_REJECT, delta_before,
                     eta_before, state.eta, 0.0},
         state);
    return accepted;
}

void quantization_phase(SolverState& state, const CnfFormula& formula, const SolverConfig& config,
                        TraceSink* sink) {
    for (;;) {
        const double grid_delta = state.delta;
        ContinuousAssignment rounded = quantize(state.current, QuantizationGrid(grid_delta * config.mu));
        const double rounded_eta = eval_fitness(formula, rounded);
        const bool improved = rounded_eta > state.eta;
        if (!improved && !config.force_quantize)
            return;

        const double jump = linf_distance(state.current, rounded);
        const double eta_before = state.eta;
        state.current = std::move(rounded);
        state.eta = rounded_eta;
        emit(sink, TraceRecord{state.cycle, TracePhase::QUANTIZE, grid_delta, eta_before, state.eta, jump},
             state);

        if (improved && state.delta < config.delta_max()) {
            state.delta = std::min(state.delta * config.mu, config.delta_max());
            continue; // retry on the coarser grid
        }
        return;
    }
}

std::optional<BinaryAssignment> admissibility_check(SolverState& state, const CnfFormula& formula,
                                                    TraceSink* sink) {
    BinaryAssignment rounded = to_binary(state.current);
    const std::size_t satisfied = count_satisfied(formula, rounded);
    if (satisfied > state.best_satisfied || state.best_binary.empty()) {
        state.best_binary = rounded;
        state.best_satisfied = satisfied;
    }
    emit(sink, TraceRecord{state.cycle, TracePhase::ADMISSIBILITY_CHECK, state.delta, state.eta, state.eta, 0.0},
         state);
    if (satisfied == formula.num_clauses())
        return rounded;
    return std::nullopt;
}

namespace {

struct Member {
    SolverState state;
    Rng rng;
};

class FanoutSink final : public TraceSink {
public:
    FanoutSink(TraceSink* first, TraceSink* second) : first_(first), second_(second) {}
    void on_record(const TraceRecord& record, const SolverState& state) override {
        if (first_)
            first_->on_record(record, state);
        if (second_)
            second_->on_record(record, state);
    }

private:
    TraceSink* first_;
    TraceSink* second_;
};

void sync_population(std::vector<Member>& members, std::uint64_t cycle, TraceSink* sink) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < members.size(); ++i) {
        if (members[i].state.eta > members[best].state.eta) // strict: ties keep the lowest index
            best = i;
    }
    const ContinuousAssignment leader = members[best].state.current;
    const double leader_delta = members[best].state.delta;
    const double leader_eta = members[best].state.eta;
    for (Member& m : members) {
        m.state.current = leader;
        m.state.delta = leader_delta;
        m.state.eta = leader_eta;
    }
    emit(sink, TraceRecord{cycle, TracePhase::POPULATION_SYNC, leader_delta, leader_eta, leader_eta, 0.0},
         members[best].state);
}

SolveOutcome run_engine(const CnfFormula& formula, const SolverConfig& raw_config, TraceSink* user_sink) {
    const SolverConfig config = raw_config.resolved();
    const auto start = std::chrono::steady_clock::now();
    const auto deadline = config.time_limit
                              ? std::optional(start + *config.time_limit)
                              : std::optional<std::chrono::steady_clock::time_point>();
    auto out_of_time = [&] { return deadline && std::chrono::steady_clock::now() >= *deadline; };

    TraceCollector collector;
    FanoutSink fanout(config.collect_trace ? &collector : nullptr, user_sink);
    TraceSink* sink = (config.collect_trace || user_sink) ? &fanout : nullptr;

    std::vector<Member> members;
    members.reserve(static_cast<std::size_t>(config.population_size));
    for (int i = 0; i < config.population_size; ++i) {
        Rng rng(Rng::derive_stream(config.seed, static_cast<std::uint64_t>(i)));
        SolverState state = init_state(formula, config, rng);
        members.push_back(Member{std::move(state), rng});
    }

    BinaryAssignment best_binary = members.front().state.best_binary;
    std::size_t best_satisfied = members.front().state.best_satisfied;
    auto track_best = [&](const SolverState& s) {
        if (s.best_satisfied > best_satisfied) {
            best_satisfied = s.best_satisfied;
            best_binary = s.best_binary;
        }
    };
    for (const Member& m : members)
        track_best(m.state);

    std::optional<BinaryAssignment> found;
    std::uint64_t cycles = 0;

    // cycle 0 checks the fresh start: the binary init is already a classical
    // assignment worth testing before any flux.
    if (config.max_cycles > 0 && !out_of_time()) {
        for (Member& m : members) {
            m.state.cycle = 0;
            if (auto sat = admissibility_check(m.state, formula, sink); sat && !found)
                found = std::move(sat);
            track_best(m.state);
        }
        cycles = 1;
    }

    while (!found && cycles < config.max_cycles && !out_of_time()) {
        bool timed_out = false;
        for (Member& m : members) {
            if (out_of_time()) {
                timed_out = true;
                break;
            }
            m.state.cycle = cycles;
            m.state.delta = config.delta_init; // fresh step schedule every cycle
            int rejects = 0;
            while (!gradual_step(m.state, formula, config, m.rng, sink)) {
                if (++rejects >= config.flux_patience)
                    break; // no improving flux found at this precision; move on
            }
            quantization_phase(m.state, formula, config, sink);
            if (auto sat = admissibility_check(m.state, formula, sink); sat && !found)
                found = std::move(sat);
            track_best(m.state);
        }
        if (timed_out && !found)
            break; // partial round does not count
        ++cycles;
        if (!found && members.size() > 1)
            sync_population(members, cycles - 1, sink);
    }

    SolveOutcome outcome;
    outcome.cycles_used = cycles;
    outcome.wall_time =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    outcome.best_binary = std::move(best_binary);
    outcome.best_satisfied = best_satisfied;
    if (found) {
        if (!eval_boolean(formula, *found))
            throw std::logic_error("internal error: candidate assignment failed re-verification");
        outcome.status = SolveStatus::SATISFIABLE;
        outcome.assignment = std::move(found);
    }
    if (config.collect_trace)
        outcome.trace = std::move(collector.records);
    return outcome;
}

} // namespace

SolveOutcome solve(const CnfFormula& formula, const SolverConfig& config, TraceSink* sink) {
    return run_engine(formula, config, sink);
}

SolveOutcome solve_population(const CnfFormula& formula, const SolverConfig& config, TraceSink* sink) {
    return run_engine(formula, config, sink);
}

} // namespace qevo
