#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qevo {

enum class TracePhase {
    FLUX_ACCEPT,
    FLUX_REJECT,
    QUANTIZE,
    ADMISSIBILITY_CHECK,
    POPULATION_SYNC,
};

std::string_view to_string(TracePhase phase);

/// One solver event. `delta` is the step size at the start of the event;
/// for QUANTIZE that is the delta whose grid (step delta * mu) the output
/// lies on. `eta_before`/`eta_after` refer to the retained solution, so a
/// rejected flux keeps them equal. QUANTIZE records are only emitted when
/// the quantized point is adopted; `jump_distance` is the L-infinity size
/// of that move and 0 for every other phase.
struct TraceRecord {
    std::uint64_t cycle = 0;
    TracePhase phase = TracePhase::FLUX_ACCEPT;
    double delta = 0.0;
    double eta_before = 0.0;
    double eta_after = 0.0;
    double jump_distance = 0.0;
};

using Trace = std::vector<TraceRecord>;

/// Shortest round-trip decimal form (std::to_chars), '.' separator.
/// Identical bytes for identical doubles on any IEEE-754 platform.
std::string format_double(double value);

/// CSV with header `cycle,phase,delta,eta_before,eta_after,jump_distance`.
void write_trace_csv(std::ostream& out, const Trace& trace);

} // namespace qevo
