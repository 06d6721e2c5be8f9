#include "qevo/trace.hpp"

#include <charconv>
#include <ostream>

namespace qevo {

std::string_view to_string(TracePhase phase) {
    switch (phase) {
    case TracePhase::FLUX_ACCEPT: return "FLUX_ACCEPT";
    case TracePhase::FLUX_REJECT: return "FLUX_REJECT";
    case TracePhase::QUANTIZE: return "QUANTIZE";
    case TracePhase::ADMISSIBILITY_CHECK: return "ADMISSIBILITY_CHECK";
    case TracePhase::POPULATION_SYNC: return "POPULATION_SYNC";
    }
    return "UNKNOWN";
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

void write_trace_csv(std::ostream& out, const Trace& trace) {
    out << "cycle,phase,delta,eta_before,eta_after,jump_distance\n";
    for (const TraceRecord& r : trace) {
        out << r.cycle << ',' << to_string(r.phase) << ',' << format_double(r.delta) << ','
            << format_double(r.eta_before) << ',' << format_double(r.eta_after) << ','
            << format_double(r.jump_distance) << '\n';
    }
}

} // namespace qevo
