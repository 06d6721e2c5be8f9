#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qevo/dimacs.hpp"
#include "qevo/oracle.hpp"
#include "qevo/report.hpp"
#include "qevo/solver.hpp"
#include "qevo/trace.hpp"

namespace fs = std::filesystem;
using namespace qevo;

namespace {

constexpr int kExitSatisfiable = 10;
constexpr int kExitUnknown = 0;
constexpr int kExitError = 1;

struct SolverOptions {
    std::uint64_t seed = 1;
    double mu = 2.0;
    double delta_init = 0.5;
    double delta_min = 0.0;
    std::uint64_t max_cycles = 100000;
    std::int64_t time_limit_ms = -1;
    int population = 1;
    std::string trace_path;
    bool force_quantize = false;
    std::string init = "binary";

    SolverConfig to_config() const {
        SolverConfig cfg;
        cfg.seed = seed;
        cfg.mu = mu;
        cfg.delta_init = delta_init;
        cfg.delta_min = delta_min;
        cfg.max_cycles = max_cycles;
        if (time_limit_ms >= 0)
            cfg.time_limit = std::chrono::milliseconds(time_limit_ms);
        cfg.population_size = population;
        cfg.force_quantize = force_quantize;
        cfg.init = init == "uniform" ? InitMode::uniform : InitMode::binary;
        cfg.collect_trace = !trace_path.empty();
        return cfg;
    }
};

void add_solver_flags(CLI::App* cmd, SolverOptions& opts) {
    cmd->add_option("--seed", opts.seed, "random seed (fixed default keeps bare runs reproducible)");
    cmd->add_option("--mu", opts.mu, "step shrink/grow factor")->check(CLI::PositiveNumber);
    cmd->add_option("--delta-init", opts.delta_init, "initial flux step");
    cmd->add_option("--delta-min", opts.delta_min, "step floor (0 = mu^-20)");
    cmd->add_option("--max-cycles", opts.max_cycles, "admissibility-check budget");
    cmd->add_option("--time-limit-ms", opts.time_limit_ms, "wall-clock budget in ms (-1 = none)");
    cmd->add_option("--population", opts.population, "population size")->check(CLI::PositiveNumber);
    cmd->add_option("--trace", opts.trace_path, "write a CSV event trace to this file");
    cmd->add_flag("--force-quantize", opts.force_quantize,
                  "adopt the quantized solution even when it is not an improvement");
    cmd->add_option("--init", opts.init, "initial solution distribution")
        ->check(CLI::IsMember({"binary", "uniform"}));
}

void write_trace_file(const std::string& path, const Trace& trace) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write trace file '" + path + "'");
    write_trace_csv(out, trace);
}

int cmd_solve(const std::string& path, const SolverOptions& opts) {
    ParseResult parsed = parse_dimacs_file(path);
    for (const std::string& w : parsed.warnings)
        std::cerr << "warning: " << path << ": " << w << '\n';

    const SolveOutcome outcome = solve(parsed.formula, opts.to_config());
    if (!opts.trace_path.empty())
        write_trace_file(opts.trace_path, outcome.trace);

    std::cerr << "stats: cycles=" << outcome.cycles_used << " wall_ms=" << outcome.wall_time.count()
              << " best_satisfied=" << outcome.best_satisfied << "/" << parsed.formula.num_clauses()
              << '\n';

    if (outcome.status == SolveStatus::SATISFIABLE) {
        if (!eval_boolean(parsed.formula, *outcome.assignment)) {
            std::cerr << "error: assignment failed verification\n";
            return kExitError;
        }
        std::cout << "s SATISFIABLE\n";
        for (const std::string& line : format_value_lines(*outcome.assignment))
            std::cout << line << '\n';
        return kExitSatisfiable;
    }
    std::cout << "s UNKNOWN\n";
    return kExitUnknown;
}

int cmd_gen(int num_vars, int num_clauses, int width, int count, std::uint64_t seed, bool planted,
            const std::string& out_dir) {
    if (width > num_vars) {
        std::cerr << "error: clause width " << width << " exceeds variable count " << num_vars << '\n';
        return kExitError;
    }
    fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        std::cerr << "error: cannot create output directory '" << out_dir << "'\n";
        return kExitError;
    }
    for (int i = 0; i < count; ++i) {
        InstanceSpec spec;
        spec.num_variables = num_vars;
        spec.num_clauses = num_clauses;
        spec.clause_width = width;
        spec.seed = Rng::derive_stream(seed, static_cast<std::uint64_t>(i));
        spec.require_satisfiable = planted;
        const GeneratedInstance inst = generate_random_ksat(spec);

        const fs::path file = dir / ("inst_" + std::to_string(i) + ".cnf");
        std::ofstream out(file, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << file.string() << "'\n";
            return kExitError;
        }
        write_dimacs(out, inst.formula);
    }
    return 0;
}

int cmd_bench(const std::string& dir, const std::vector<std::uint64_t>& seed_list,
              const SolverOptions& opts) {
    std::vector<fs::path> files;
    if (!fs::is_directory(dir)) {
        std::cerr << "error: '" << dir << "' is not a directory\n";
        return kExitError;
    }
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".cnf")
            files.push_back(entry.path());
    }
    if (files.empty()) {
        std::cerr << "error: no .cnf instances in '" << dir << "'\n";
        return kExitError;
    }
    std::sort(files.begin(), files.end());

    std::vector<std::uint64_t> seeds = seed_list.empty() ? std::vector<std::uint64_t>{opts.seed} : seed_list;

    std::vector<RunReport> reports;
    for (const fs::path& file : files) {
        ParseResult parsed = parse_dimacs_file(file);
        for (const std::string& w : parsed.warnings)
            std::cerr << "warning: " << file.string() << ": " << w << '\n';
        for (std::uint64_t seed : seeds) {
            SolverConfig cfg = opts.to_config();
            cfg.seed = seed;
            cfg.collect_trace = false;
            const SolveOutcome outcome = solve(parsed.formula, cfg);
            RunReport report;
            report.instance_name = file.filename().string();
            report.status = outcome.status;
            report.cycles_used = outcome.cycles_used;
            report.wall_time_ms = static_cast<std::uint64_t>(outcome.wall_time.count());
            report.seed = seed;
            reports.push_back(std::move(report));
        }
    }
    std::sort(reports.begin(), reports.end(), [](const RunReport& a, const RunReport& b) {
        return std::tie(a.instance_name, a.seed) < std::tie(b.instance_name, b.seed);
    });

    std::cout << run_report_csv_header() << '\n';
    for (const RunReport& r : reports)
        std::cout << run_report_csv_row(r) << '\n';
    std::cout << summary_csv_row(summarize(reports)) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SAT solver: continuous relaxation with adaptive flux and quantization jumps"};
    app.require_subcommand(1);

    SolverOptions solve_opts;
    std::string solve_path;
    CLI::App* solve_cmd = app.add_subcommand("solve", "solve a DIMACS CNF file");
    solve_cmd->add_option("path", solve_path, "DIMACS CNF file")->required();
    add_solver_flags(solve_cmd, solve_opts);

    int gen_vars = 20, gen_clauses = 60, gen_width = 3, gen_count = 1;
    std::uint64_t gen_seed = 1;
    bool gen_planted = true;
    std::string gen_dir = ".";
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate random k-SAT instances");
    gen_cmd->add_option("-n,--vars", gen_vars, "variables per instance")->check(CLI::PositiveNumber);
    gen_cmd->add_option("-m,--clauses", gen_clauses, "clauses per instance")->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("-k,--width", gen_width, "literals per clause")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--count", gen_count, "number of instances")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen_seed, "master seed");
    gen_cmd->add_flag("--planted,!--no-planted", gen_planted, "plant a hidden satisfying assignment");
    gen_cmd->add_option("-o,--out", gen_dir, "output directory");

    SolverOptions bench_opts;
    std::string bench_dir;
    std::vector<std::uint64_t> bench_seeds;
    CLI::App* bench_cmd = app.add_subcommand("bench", "solve every .cnf in a directory, emit a CSV table");
    bench_cmd->add_option("dir", bench_dir, "directory of DIMACS instances")->required();
    bench_cmd->add_option("--seeds", bench_seeds, "comma-separated seed list")->delimiter(',');
    add_solver_flags(bench_cmd, bench_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (solve_cmd->parsed())
            return cmd_solve(solve_path, solve_opts);
        if (gen_cmd->parsed())
            return cmd_gen(gen_vars, gen_clauses, gen_width, gen_count, gen_seed, gen_planted, gen_dir);
        if (bench_cmd->parsed())
            return cmd_bench(bench_dir, bench_seeds, bench_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
