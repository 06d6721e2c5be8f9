#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qevo/dimacs.hpp"
#include "qevo/formula.hpp"

using namespace qevo;
namespace fs = std::filesystem;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string out;
};

CommandResult run_cli(const std::string& args) {
    const std::string cmd = std::string(QEVO_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0)
        result.out.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("qevo_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

// parse `v` lines back into an assignment
BinaryAssignment parse_value_lines(const std::vector<std::string>& lines, int num_vars) {
    BinaryAssignment a(static_cast<std::size_t>(num_vars));
    bool terminated = false;
    for (const std::string& line : lines) {
        if (line.rfind("v ", 0) != 0)
            continue;
        std::istringstream in(line.substr(2));
        long lit;
        while (in >> lit) {
            if (lit == 0) {
                terminated = true;
                break;
            }
            REQUIRE(std::labs(lit) <= num_vars);
            a[static_cast<std::size_t>(std::labs(lit) - 1)] = lit > 0;
        }
    }
    REQUIRE(terminated);
    return a;
}

} // namespace

TEST_CASE("solve: satisfiable file gives s-line, verified v-lines, exit 10") {
    fs::path dir = fresh_dir("solve_sat");
    fs::path file = dir / "inst.cnf";
    std::ofstream(file) << "p cnf 2 2\n1 2 0\n-1 2 0\n";

    auto result = run_cli("solve " + file.string());
    CHECK(result.exit_code == 10);
    auto lines = lines_of(result.out);
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "s SATISFIABLE");

    auto formula = parse_dimacs_file(file).formula;
    CHECK(eval_boolean(formula, parse_value_lines(lines, 2)));
}

TEST_CASE("solve: zero budget reports UNKNOWN with exit 0") {
    fs::path dir = fresh_dir("solve_zero");
    fs::path file = dir / "inst.cnf";
    std::ofstream(file) << "p cnf 1 1\n1 0\n";

    auto result = run_cli("solve --max-cycles 0 " + file.string());
    CHECK(result.exit_code == 0);
    auto lines = lines_of(result.out);
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "s UNKNOWN");
}

TEST_CASE("solve: malformed file exits 1 without an s-line") {
    fs::path dir = fresh_dir("solve_bad");
    fs::path file = dir / "bad.cnf";
    std::ofstream(file) << "p cnf 1 1\n2 0\n"; // literal out of range

    auto result = run_cli("solve " + file.string());
    CHECK(result.exit_code == 1);
    for (const std::string& line : lines_of(result.out))
        CHECK(line.rfind("s ", 0) != 0);
}

TEST_CASE("solve: missing file exits 1") {
    CHECK(run_cli("solve /nonexistent/foo.cnf").exit_code == 1);
}

TEST_CASE("solve: identical flags and seed give byte-identical stdout and trace") {
    fs::path dir = fresh_dir("solve_det");
    fs::path file = dir / "inst.cnf";
    std::ofstream(file) << "p cnf 4 6\n1 2 0\n-1 3 0\n-2 -3 0\n3 4 0\n-3 4 0\n1 -4 0\n";

    fs::path t1 = dir / "t1.csv", t2 = dir / "t2.csv";
    auto a = run_cli("solve --seed 5 --trace " + t1.string() + " " + file.string());
    auto b = run_cli("solve --seed 5 --trace " + t2.string() + " " + file.string());
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK(read_file(t1) == read_file(t2));
    CHECK(read_file(t1).rfind("cycle,phase,delta,eta_before,eta_after,jump_distance\n", 0) == 0);
}

TEST_CASE("gen: writes the requested number of instances, deterministically") {
    fs::path dir1 = fresh_dir("gen_a");
    fs::path dir2 = fresh_dir("gen_b");
    auto r1 = run_cli("gen -n 10 -m 30 -k 3 --count 3 --seed 9 -o " + dir1.string());
    auto r2 = run_cli("gen -n 10 -m 30 -k 3 --count 3 --seed 9 -o " + dir2.string());
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    for (int i = 0; i < 3; ++i) {
        fs::path f1 = dir1 / ("inst_" + std::to_string(i) + ".cnf");
        fs::path f2 = dir2 / ("inst_" + std::to_string(i) + ".cnf");
        REQUIRE(fs::exists(f1));
        CHECK(read_file(f1) == read_file(f2));
    }
    CHECK_FALSE(fs::exists(dir1 / "inst_3.cnf"));
}

TEST_CASE("gen: width beyond variable count is a usage error") {
    fs::path dir = fresh_dir("gen_bad");
    CHECK(run_cli("gen -n 3 -m 5 -k 4 -o " + dir.string()).exit_code == 1);
}

TEST_CASE("bench: row per (instance, seed) plus summary") {
    fs::path dir = fresh_dir("bench");
    REQUIRE(run_cli("gen -n 10 -m 30 -k 3 --count 5 --seed 33 -o " + dir.string()).exit_code == 0);

    auto result = run_cli("bench --seeds 1,2,3 --max-cycles 2000 " + dir.string());
    CHECK(result.exit_code == 0);
    auto lines = lines_of(result.out);
    REQUIRE(lines.size() == 1 + 15 + 1); // header, 5 instances x 3 seeds, summary
    CHECK(lines[0] == "instance,status,cycles,wall_time_ms,seed");
    CHECK(lines.back().rfind("summary,", 0) == 0);

    // success rate sits in the second summary column, within [0,1]
    std::istringstream summary(lines.back().substr(8));
    double rate;
    summary >> rate;
    CHECK(rate >= 0.0);
    CHECK(rate <= 1.0);

    // data rows are sorted by (instance, seed)
    std::vector<std::string> keys;
    for (std::size_t i = 1; i + 1 < lines.size(); ++i)
        keys.push_back(lines[i].substr(0, lines[i].find(',')));
    CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("bench: empty directory exits 1") {
    fs::path dir = fresh_dir("bench_empty");
    CHECK(run_cli("bench " + dir.string()).exit_code == 1);
}

TEST_CASE("usage errors exit nonzero") {
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("solve").exit_code == 1); // missing path
}
