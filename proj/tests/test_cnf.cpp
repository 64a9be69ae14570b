#include "doctest.h"
#include "hpt/cnf.hpp"
#include "hpt/errors.hpp"
#include "hpt/generators.hpp"
#include "hpt/rng.hpp"

using namespace hpt;

namespace {

CnfFormula all_sign_patterns() {
    std::vector<std::vector<int>> clauses;
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> cl;
        for (int v = 1; v <= 3; ++v) cl.push_back((mask >> (v - 1)) & 1 ? -v : v);
        clauses.push_back(std::move(cl));
    }
    return CnfFormula(3, std::move(clauses));
}

}  // namespace

TEST_CASE("clause canonicalization and validation") {
    CnfFormula f(3, {{3, -1, 2}});
    CHECK(f.clauses()[0] == std::vector<int>{-1, 2, 3});
    CHECK_THROWS_AS(CnfFormula(2, {{1, 3}}), DomainError);
    CHECK_THROWS_AS(CnfFormula(2, {{1, 1}}), DomainError);
    CHECK_NOTHROW(CnfFormula(2, {{1, -1}}));  // tautology clause is a valid set
}

TEST_CASE("validate_kc counts each polarity separately") {
    CnfFormula f1(3, {{1, 2, 3}, {-1, -2, -3}});
    CHECK(validate_kc(f1, 3, 1));
    CHECK(!validate_kc(f1, 3, 2));
    CnfFormula f2(1, {{1}});
    CHECK(!validate_kc(f2, 3, 1));  // negative literal appears 0 times
    CHECK(validate_kc(all_sign_patterns(), 3, 4));
}

TEST_CASE("brute_force_sat returns the lexicographically smallest model") {
    CnfFormula contradiction(1, {{1}, {-1}});
    CHECK(!brute_force_sat(contradiction));
    CnfFormula f(3, {{1, 2, 3}});
    auto model = brute_force_sat(f);
    REQUIRE(model);
    CHECK(*model == std::vector<bool>{false, false, true});
    CHECK(!brute_force_sat(all_sign_patterns()));
    CnfFormula wide(25, {{1, 2, 3}});
    CHECK_THROWS_AS(brute_force_sat(wide), CapacityError);
}

TEST_CASE("max_sat_fraction and sat_distance") {
    CnfFormula contradiction(1, {{1}, {-1}});
    CHECK(max_sat_fraction(contradiction) == Rational(1, 2));
    CnfFormula sat(3, {{1, 2, 3}, {-1, -2, -3}});
    CHECK(max_sat_fraction(sat) == Rational(1));
    CHECK(max_sat_fraction(all_sign_patterns()) == Rational(7, 8));
    CHECK(sat_distance(all_sign_patterns()) == Rational(1, 8));
    CnfFormula empty(2, {});
    CHECK(max_sat_fraction(empty) == Rational(1));
}

TEST_CASE("satisfiability and max-sat agree; distance monotone under deletion") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        CnfFormula f = generators::random_kc_cnf(6, 1 + static_cast<int>(seed % 2),
                                                 sub_seed(99, "cnf-prop", seed));
        bool sat = brute_force_sat(f).has_value();
        CHECK(sat == (max_sat_fraction(f) == Rational(1)));
        // dpll agrees with exhaustive search
        CHECK(sat == dpll_sat(f).has_value());
        // deleting any clause never increases the distance
        Rational base = sat_distance(f);
        for (int drop = 0; drop < f.clause_count(); ++drop) {
            std::vector<std::vector<int>> remaining;
            for (int j = 0; j < f.clause_count(); ++j)
                if (j != drop) remaining.push_back(f.clauses()[static_cast<std::size_t>(j)]);
            CnfFormula smaller(f.var_count(), remaining);
            CHECK(sat_distance(smaller) <= base);
        }
    }
}

TEST_CASE("regularize produces an exact (3,d)-regular equisatisfiable formula") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        // irregular exactly-3 source: encode a small random CSP
        auto exp = generators::random_regular_expander(4, 3, sub_seed(5, "reg-exp", seed));
        CnfFormula cnf = generators::csp_to_3cnf(generators::build_fn(exp));
        auto reg = regularize(cnf);
        CHECK(validate_kc(reg.formula, 3, reg.d));
        for (const auto& clause : reg.formula.clauses())
            CHECK(clause.size() <= 3);
        CHECK(dpll_sat(cnf).has_value() == dpll_sat(reg.formula).has_value());
    }
    // already-regular input comes back as-is
    CnfFormula f(3, {{1, 2, 3}, {-1, -2, -3}});
    auto reg = regularize(f);
    CHECK(reg.formula == f);
    CHECK(reg.d == 1);
}

TEST_CASE("cnf incidence oracle annotates occurrences and counts queries") {
    CnfFormula f(3, {{1, 2, 3}, {-1, 2, -3}, {1, -2, 3}});
    CnfIncidenceOracle oracle(f);
    CHECK(oracle.count() == 0);
    auto c1 = oracle.clause(1);
    CHECK(c1.index == 1);
    CHECK(c1.literals == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}});
    auto c3 = oracle.clause(3);
    // literal 1's second occurrence, literal -2's first, literal 3's second
    CHECK(c3.literals == std::vector<std::pair<int, int>>{{1, 2}, {-2, 1}, {3, 2}});
    auto via_occ = oracle.occurrence(1, 2);
    CHECK(via_occ.index == 3);
    CHECK(oracle.count() == 3);
    CHECK_THROWS_AS(oracle.occurrence(1, 3), DomainError);
    CHECK_THROWS_AS(oracle.clause(4), DomainError);
    CHECK(oracle.count() == 3);  // failed queries are not counted
}
