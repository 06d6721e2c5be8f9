#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qevo/formula.hpp"

namespace qevo {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Parsed formula plus non-fatal diagnostics. A header clause count that
/// disagrees with the actual number of clauses is tolerated (real benchmark
/// files are frequently sloppy) and reported here as a warning.
struct ParseResult {
    CnfFormula formula;
    std::vector<std::string> warnings;
};

/// Parses a DIMACS CNF document: optional `c` comment lines, one
/// `p cnf <nvars> <nclauses>` problem line, then whitespace-separated signed
/// integers with each clause terminated by 0. Duplicate literals within a
/// clause are dropped; tautological clauses are kept. Fatal errors
/// (ParseError): missing or malformed problem line, literal magnitude
/// beyond the declared variable count, an empty clause, or a final clause
/// missing its 0 terminator.
ParseResult parse_dimacs(std::istream& in);
ParseResult parse_dimacs(std::string_view text);
ParseResult parse_dimacs_file(const std::filesystem::path& path);

/// Canonical serialization; parse_dimacs(to_dimacs(f)) reconstructs f.
std::string to_dimacs(const CnfFormula& formula);
void write_dimacs(std::ostream& out, const CnfFormula& formula);

} // namespace qevo
