#include "qevo/report.hpp"

#include <algorithm>

#include "qevo/trace.hpp"

namespace qevo {

namespace {

double median(std::vector<double> values) {
    if (values.empty())
        return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1)
        return values[mid];
    return (values[mid - 1] + values[mid]) / 2.0;
}

} // namespace

BenchSummary summarize(const std::vector<RunReport>& reports) {
    BenchSummary s;
    s.runs = reports.size();
    if (reports.empty())
        return s;
    std::size_t solved = 0;
    std::vector<double> cycles, wall;
    cycles.reserve(reports.size());
    wall.reserve(reports.size());
    for (const RunReport& r : reports) {
        if (r.status == SolveStatus::SATISFIABLE)
            ++solved;
        cycles.push_back(static_cast<double>(r.cycles_used));
        wall.push_back(static_cast<double>(r.wall_time_ms));
    }
    s.success_rate = static_cast<double>(solved) / static_cast<double>(reports.size());
    s.median_cycles = median(std::move(cycles));
    s.median_wall_ms = median(std::move(wall));
    return s;
}

std::string run_report_csv_row(const RunReport& r) {
    std::string row = r.instance_name;
    row += ',';
    row += to_string(r.status);
    row += ',';
    row += std::to_string(r.cycles_used);
    row += ',';
    row += std::to_string(r.wall_time_ms);
    row += ',';
    row += std::to_string(r.seed);
    return row;
}

std::string summary_csv_row(const BenchSummary& s) {
    std::string row = "summary,";
    row += format_double(s.success_rate);
    row += ',';
    row += format_double(s.median_cycles);
    row += ',';
    row += format_double(s.median_wall_ms);
    row += ',';
    row += std::to_string(s.runs);
    return row;
}

std::vector<std::string> format_value_lines(const BinaryAssignment& assignment) {
    constexpr std::size_t per_line = 25;
    std::vector<std::string> lines;
    std::string line = "v";
    std::size_t on_line = 0;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        line += ' ';
        if (!assignment[i])
            line += '-';
        line += std::to_string(i + 1);
        if (++on_line == per_line && i + 1 < assignment.size()) {
            lines.push_back(std::move(line));
            line = "v";
            on_line = 0;
        }
    }
    line += " 0";
    lines.push_back(std::move(line));
    return lines;
}

} // namespace qevo
