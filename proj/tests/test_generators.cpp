#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "hpt/errors.hpp"
#include "hpt/generators.hpp"
#include "hpt/io.hpp"
#include "hpt/rng.hpp"
#include "hpt/solvers.hpp"
#include "hpt/verify.hpp"

using namespace hpt;
using namespace hpt::generators;

TEST_CASE("expansion check accepts K4 and rejects C6") {
    Graph k4(4, 3, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(!expansion_counterexample(k4).has_value());
    Graph c6(6, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    auto witness = expansion_counterexample(c6);
    REQUIRE(witness);
    CHECK(witness->size() <= 3);  // three consecutive vertices have two neighbors
}

TEST_CASE("random regular expander is seeded and verified") {
    // d+1 > n/2 is required for the expansion-1 property to be satisfiable
    // at all, so K4 verifies exhaustively while (12,3) falls back to the
    // spectral heuristic.
    auto k4 = random_regular_expander(4, 3, 7);
    CHECK(k4.certificate == ExpanderCertificate::Exhaustive);
    CHECK(!expansion_counterexample(k4.graph).has_value());

    auto a = random_regular_expander(12, 3, 7);
    auto b = random_regular_expander(12, 3, 7);
    CHECK(a.graph == b.graph);
    CHECK(a.certificate == ExpanderCertificate::SpectralHeuristic);
    for (int v = 1; v <= 12; ++v) CHECK(a.graph.degree(v) == 3);

    auto big = random_regular_expander(48, 4, 9);
    CHECK(big.certificate == ExpanderCertificate::SpectralHeuristic);
    CHECK(big.lambda_bound <= 2.1 * std::sqrt(3.0));
    CHECK_THROWS_AS(random_regular_expander(5, 3, 1), DomainError);  // odd nd
}

TEST_CASE("appendix-b sampler") {
    SUBCASE("n=3 d=1 has only one partition") {
        Hypergraph h = sample_appendix_b(3, 1, 123);
        CHECK(h.edges() == std::vector<std::vector<int>>{{1, 2, 3}});
    }
    SUBCASE("degrees are exactly d with multiplicity") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Hypergraph h = sample_appendix_b(9, 3, seed);
            CHECK(h.allows_multi());
            for (int v = 1; v <= 9; ++v) CHECK(h.degree(v) == 3);
        }
    }
    SUBCASE("n not divisible by 3 rejected") {
        CHECK_THROWS_AS(sample_appendix_b(10, 2, 1), DomainError);
    }
}

TEST_CASE("h predicate") {
    CHECK(h_eval({1, 0}, {0, 0}));
    CHECK(!h_eval({1, 0}, {1, 0}));
    CHECK(!h_eval({0, 0}, {1, 1}));
    CHECK_THROWS_AS(h_eval({1}, {0, 0}), DomainError);
}

TEST_CASE("build_fn wires the doubled expander") {
    auto k4 = random_regular_expander(4, 3, 5);
    CspInstance csp = build_fn(k4);
    CHECK(csp.var_count == 12);
    CHECK(csp.constraints.size() == 4);
    // each variable appears in exactly two constraints: once as x, once as y
    std::vector<int> as_x(13, 0), as_y(13, 0);
    for (const auto& c : csp.constraints) {
        for (int v : c.x_vars) ++as_x[static_cast<std::size_t>(v)];
        for (int v : c.y_vars) ++as_y[static_cast<std::size_t>(v)];
    }
    for (int v = 1; v <= 12; ++v) {
        CHECK(as_x[static_cast<std::size_t>(v)] == 1);
        CHECK(as_y[static_cast<std::size_t>(v)] == 1);
    }
    CHECK(!csp_brute_force(csp).has_value());  // parity argument
}

TEST_CASE("csp encoding preserves single-constraint truth tables (d=2)") {
    CspInstance toy;
    toy.d = 2;
    toy.var_count = 4;
    toy.constraints.push_back({1, {1, 2}, {3, 4}});
    CnfFormula cnf = csp_to_3cnf(toy);
    for (const auto& clause : cnf.clauses()) {
        CHECK(clause.size() >= 1);
        CHECK(clause.size() <= 3);
    }
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<bool> inputs = {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0,
                                    (mask & 8) != 0};
        std::vector<std::vector<int>> pinned = cnf.clauses();
        for (int v = 1; v <= 4; ++v)
            pinned.push_back({inputs[static_cast<std::size_t>(v - 1)] ? v : -v});
        bool extendable = dpll_sat(CnfFormula(cnf.var_count(), pinned)).has_value();
        CHECK(extendable == constraint_satisfied(toy.constraints[0], inputs));
    }
}

TEST_CASE("random regular cnf generator") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        CnfFormula f = random_kc_cnf(6, 2, seed);
        CHECK(validate_kc(f, 3, 2));
        for (const auto& clause : f.clauses()) CHECK(clause.size() == 3);
    }
}

TEST_CASE("far family: distance 1/6, per-block independence 2") {
    Hypergraph far = far_bounded_tw_family(8);
    CHECK(far.delta_bound() == 3);
    CHECK(solvers::distance_to_property(far, solvers::PropertySpec::k_partite()) ==
          Rational(1, 6));
    // one block alone
    Hypergraph block = far_bounded_tw_family(4);
    CHECK(solvers::distance_to_property(block, solvers::PropertySpec::k_partite()) ==
          Rational(2, 12));
    CHECK(solvers::independence_number(block).size == 2);
    CHECK_THROWS_AS(far_bounded_tw_family(10), DomainError);
}

TEST_CASE("yes family is 3-partite by construction with bounded degree") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        YesInstance yes = yes_bounded_tw_family(24, seed);
        CHECK(solvers::count_violations(yes.h, yes.witness,
                                        solvers::PropertyKind::KPartite) == 0);
        for (int v = 1; v <= yes.h.n(); ++v) CHECK(yes.h.degree(v) <= yes.h.delta_bound());
    }
}

TEST_CASE("manifest round trip and digest") {
    Manifest m;
    m.add("kind", "far-tw");
    m.add("n", 8);
    CHECK(Manifest::parse(m.str()).get("kind") == "far-tw");
    CHECK(payload_digest("abc") == payload_digest("abc"));
    CHECK(payload_digest("abc") != payload_digest("abd"));
}

TEST_CASE("hard instance pipeline is deterministic and replayable") {
    auto a = hard_instance_pipeline(4, PipelineTarget::ThreeColHypergraph, 7);
    auto b = hard_instance_pipeline(4, PipelineTarget::ThreeColHypergraph, 7);
    CHECK(a.instance == b.instance);
    std::ostringstream pa;
    write_hypergraph(pa, a.instance);
    CHECK(verify::replay_pipeline(a.manifest) == pa.str());
    // declared degree bound is respected and recorded
    CHECK(a.manifest.get("hypergraph-delta") == std::to_string(a.instance.delta_bound()));
    std::vector<int> deg(static_cast<std::size_t>(a.instance.n()) + 1, 0);
    for (const auto& e : a.instance.edges())
        for (int v : e) ++deg[static_cast<std::size_t>(v)];
    CHECK(*std::max_element(deg.begin(), deg.end()) <= a.instance.delta_bound());
}

TEST_CASE("pipeline later targets refuse desk-infeasible materializations") {
    // rho_3par multiplies the vertex count by the primal degree bound; at the
    // smallest valid base this already exceeds any materialization budget.
    CHECK_THROWS_AS(hard_instance_pipeline(4, PipelineTarget::ThreePartiteHypergraph, 7),
                    CapacityError);
    CHECK_THROWS_AS(hard_instance_pipeline(4, PipelineTarget::IndependenceNumber, 7),
                    CapacityError);
}
