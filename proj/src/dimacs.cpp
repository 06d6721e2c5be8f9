#include "qevo/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace qevo {

namespace {

bool parse_int(std::string_view token, long& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

} // namespace

ParseResult parse_dimacs(std::istream& in) {
    long declared_vars = -1;
    long declared_clauses = -1;
    std::vector<Clause> clauses;
    Clause current;
    bool in_clause = false;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string token;
        if (!(tokens >> token))
            continue; // blank line
        if (token[0] == 'c')
            continue;
        if (token == "p") {
            if (declared_vars >= 0)
                throw ParseError("duplicate problem line", line_no);
            std::string format;
            std::string nvars_tok, nclauses_tok, extra;
            if (!(tokens >> format >> nvars_tok >> nclauses_tok) || format != "cnf")
                throw ParseError("malformed problem line, expected 'p cnf <nvars> <nclauses>'", line_no);
            if (!parse_int(nvars_tok, declared_vars) || !parse_int(nclauses_tok, declared_clauses) ||
                declared_vars < 1 || declared_clauses < 0)
                throw ParseError("malformed problem line, expected 'p cnf <nvars> <nclauses>'", line_no);
            if (tokens >> extra)
                throw ParseError("trailing tokens on problem line", line_no);
            continue;
        }
        if (declared_vars < 0)
            throw ParseError("clause data before problem line", line_no);
        do {
            long value;
            if (!parse_int(token, value))
                throw ParseError("expected integer literal, got '" + token + "'", line_no);
            if (value == 0) {
                if (current.empty())
                    throw ParseError("empty clause", line_no);
                clauses.push_back(std::move(current));
                current.clear();
                in_clause = false;
            } else {
                if (std::labs(value) > declared_vars)
                    throw ParseError("literal " + std::to_string(value) + " out of range, formula has " +
                                         std::to_string(declared_vars) + " variables",
                                     line_no);
                current.push_back(Literal::from_dimacs(static_cast<int>(value)));
                in_clause = true;
            }
        } while (tokens >> token);
    }

    if (in_clause)
        throw ParseError("unterminated final clause (missing 0)", line_no);
    if (declared_vars < 0)
        throw ParseError("missing problem line", line_no);

    ParseResult result{CnfFormula(static_cast<int>(declared_vars), std::move(clauses)), {}};
    if (static_cast<long>(result.formula.num_clauses()) != declared_clauses) {
        result.warnings.push_back("header declares " + std::to_string(declared_clauses) +
                                  " clauses but " + std::to_string(result.formula.num_clauses()) +
                                  " were read");
    }
    return result;
}

ParseResult parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

ParseResult parse_dimacs_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path.string() + "'");
    return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const CnfFormula& formula) {
    out << "p cnf " << formula.num_variables() << ' ' << formula.num_clauses() << '\n';
    for (const Clause& clause : formula.clauses()) {
        for (const Literal& lit : clause)
            out << lit.to_dimacs() << ' ';
        out << "0\n";
    }
}

std::string to_dimacs(const CnfFormula& formula) {
    std::ostringstream out;
    write_dimacs(out, formula);
    return out.str();
}

} // namespace qevo
