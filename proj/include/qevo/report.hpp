#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qevo/formula.hpp"
#include "qevo/solver.hpp"

namespace qevo {

/// One row of a benchmark table.
struct RunReport {
    std::string instance_name;
    SolveStatus status = SolveStatus::UNKNOWN;
    std::uint64_t cycles_used = 0;
    std::uint64_t wall_time_ms = 0;
    std::uint64_t seed = 0;
};

struct BenchSummary {
    double success_rate = 0.0;   // satisfiable fraction, in [0,1]
    double median_cycles = 0.0;  // over all runs; unsolved runs count at their budget
    double median_wall_ms = 0.0;
    std::size_t runs = 0;
};

BenchSummary summarize(const std::vector<RunReport>& reports);

/// CSV row `instance,status,cycles,wall_time_ms,seed`.
std::string run_report_csv_row(const RunReport& report);
inline const char* run_report_csv_header() { return "instance,status,cycles,wall_time_ms,seed"; }

/// Summary row in the same five-column layout:
/// `summary,<success_rate>,<median_cycles>,<median_wall_ms>,<runs>`.
std::string summary_csv_row(const BenchSummary& summary);

/// SAT-competition style `v` lines: positive integers for true variables,
/// negative for false, zero-terminated, chunked for readability.
std::vector<std::string> format_value_lines(const BinaryAssignment& assignment);

} // namespace qevo
