#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qevo/dimacs.hpp"
#include "qevo/formula.hpp"
#include "qevo/oracle.hpp"
#include "qevo/rng.hpp"

#include "helpers.hpp"

using namespace qevo;
using qevo::test::make_clause;
using qevo::test::make_formula;

TEST_CASE("parse: two clauses over two variables") {
    auto result = parse_dimacs("p cnf 2 2\n1 2 0\n-1 2 0\n");
    CHECK(result.warnings.empty());
    CHECK(result.formula.num_variables() == 2);
    REQUIRE(result.formula.num_clauses() == 2);
    CHECK(result.formula.clauses()[0] == make_clause({1, 2}));
    CHECK(result.formula.clauses()[1] == make_clause({-1, 2}));
}

TEST_CASE("parse: comments and single clause") {
    auto result = parse_dimacs("c comment\np cnf 1 1\n1 0\n");
    CHECK(result.formula.num_variables() == 1);
    REQUIRE(result.formula.num_clauses() == 1);
    CHECK(result.formula.clauses()[0] == make_clause({1}));
}

TEST_CASE("parse: literal out of range is fatal") {
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
}

TEST_CASE("parse: clause spanning lines, varied whitespace") {
    auto result = parse_dimacs("p cnf 3 1\n1\n  -2\t3 0\n");
    REQUIRE(result.formula.num_clauses() == 1);
    CHECK(result.formula.clauses()[0] == make_clause({1, -2, 3}));
}

TEST_CASE("parse: duplicate literals dropped, tautology kept") {
    auto result = parse_dimacs("p cnf 2 2\n1 1 2 0\n1 -1 0\n");
    REQUIRE(result.formula.num_clauses() == 2);
    CHECK(result.formula.clauses()[0] == make_clause({1, 2}));
    CHECK(result.formula.clauses()[1] == make_clause({1, -1})); // x or not-x survives
}

TEST_CASE("parse: clause count mismatch is a warning, not an error") {
    auto result = parse_dimacs("p cnf 2 5\n1 0\n2 0\n");
    CHECK(result.formula.num_clauses() == 2);
    REQUIRE(result.warnings.size() == 1);
    CHECK(result.warnings[0].find("5") != std::string::npos);
}

TEST_CASE("parse: fatal malformations") {
    CHECK_THROWS_AS(parse_dimacs(""), ParseError);                            // no problem line
    CHECK_THROWS_AS(parse_dimacs("p cnf x 1\n1 0\n"), ParseError);            // bad header field
    CHECK_THROWS_AS(parse_dimacs("p dnf 1 1\n1 0\n"), ParseError);            // wrong format tag
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);            // unterminated clause
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n0\n"), ParseError);              // empty clause
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 a 0\n"), ParseError);          // junk token
    CHECK_THROWS_AS(parse_dimacs("1 0\np cnf 1 1\n"), ParseError);            // clause before header
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\np cnf 1 1\n1 0\n"), ParseError); // duplicate header
    CHECK_THROWS_AS(parse_dimacs("p cnf 0 0\n"), ParseError);                 // zero variables
}

TEST_CASE("formula construction validates") {
    CHECK_THROWS_AS(CnfFormula(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(CnfFormula(2, {Clause{}}), std::invalid_argument);
    CHECK_THROWS_AS(CnfFormula(1, {make_clause({2})}), std::invalid_argument);
}

TEST_CASE("eval_boolean basics") {
    auto f = make_formula(2, {{1, 2}, {-1, 2}});
    CHECK(eval_boolean(f, {true, true}));
    CHECK(eval_boolean(f, {false, true}));
    CHECK_FALSE(eval_boolean(f, {true, false}));

    auto contradiction = make_formula(1, {{1}, {-1}});
    CHECK_FALSE(eval_boolean(contradiction, {true}));
    CHECK_FALSE(eval_boolean(contradiction, {false}));

    CHECK_FALSE(eval_boolean(make_formula(2, {{1, 2}}), {false, false}));

    CHECK_THROWS_AS(eval_boolean(f, {true}), std::invalid_argument);
}

TEST_CASE("count_satisfied basics") {
    CHECK(count_satisfied(make_formula(1, {{1}, {-1}}), {true}) == 1);
    CHECK(count_satisfied(make_formula(2, {{1, 2}, {-1, 2}}), {true, true}) == 2);

    CnfFormula empty(2, {});
    CHECK(count_satisfied(empty, {false, false}) == 0);
    CHECK(eval_boolean(empty, {false, false})); // vacuous truth
}

TEST_CASE("property: eval_boolean iff all clauses satisfied") {
    Rng rng(123);
    for (int iter = 0; iter < 200; ++iter) {
        InstanceSpec spec;
        spec.num_variables = 1 + static_cast<int>(rng.next_below(8));
        spec.num_clauses = static_cast<int>(rng.next_below(12));
        spec.clause_width = 1 + static_cast<int>(rng.next_below(
                                static_cast<std::uint64_t>(spec.num_variables)));
        spec.seed = rng.next_u64();
        spec.require_satisfiable = false;
        auto inst = generate_random_ksat(spec);

        BinaryAssignment a(static_cast<std::size_t>(spec.num_variables));
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] = rng.next_bool();

        CHECK(eval_boolean(inst.formula, a) ==
              (count_satisfied(inst.formula, a) == inst.formula.num_clauses()));
    }
}

TEST_CASE("property: serialize/parse round-trip") {
    Rng rng(77);
    for (int iter = 0; iter < 100; ++iter) {
        InstanceSpec spec;
        spec.num_variables = 1 + static_cast<int>(rng.next_below(15));
        spec.num_clauses = static_cast<int>(rng.next_below(20));
        spec.clause_width = 1 + static_cast<int>(rng.next_below(
                                static_cast<std::uint64_t>(std::min(spec.num_variables, 4))));
        spec.seed = rng.next_u64();
        spec.require_satisfiable = false;
        auto inst = generate_random_ksat(spec);

        auto reparsed = parse_dimacs(to_dimacs(inst.formula));
        CHECK(reparsed.warnings.empty());
        CHECK(reparsed.formula == inst.formula);
    }
}
