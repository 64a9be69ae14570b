#include "doctest.h"
#include "hpt/errors.hpp"
#include "hpt/generators.hpp"
#include "hpt/oracle.hpp"
#include "hpt/reductions.hpp"
#include "hpt/testers.hpp"

using namespace hpt;
using namespace hpt::testers;

TEST_CASE("tester config defaults") {
    TesterConfig cfg;
    cfg.epsilon = Rational(1, 20);
    CHECK(cfg.resolved_samples() == 160);  // ceil(8 / (1/20))
    cfg.epsilon = Rational(3, 10);
    CHECK(cfg.resolved_samples() == 27);   // ceil(80/3)
    cfg.sample_count = 5;
    CHECK(cfg.resolved_samples() == 5);
    cfg.epsilon = Rational(2);
    CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("one-sided: k-partite instances are always accepted") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto yes = generators::yes_bounded_tw_family(30, seed);
        HypergraphOracle oracle(yes.h);
        TesterConfig cfg;
        cfg.epsilon = Rational(1, 10);
        auto report = ball_tester_kpartite(oracle, cfg, seed * 31 + 1);
        CHECK(report.accept);
        for (const auto& b : report.balls) CHECK(b.verdict != BallReport::Verdict::Fail);
    }
}

TEST_CASE("far instances are rejected with a certificate ball") {
    Hypergraph far = generators::far_bounded_tw_family(40);
    HypergraphOracle oracle(far);
    TesterConfig cfg;
    cfg.epsilon = Rational(1, 20);
    auto report = ball_tester_kpartite(oracle, cfg, 5);
    CHECK(!report.accept);
    bool has_fail = false;
    for (const auto& b : report.balls)
        if (b.verdict == BallReport::Verdict::Fail) {
            has_fail = true;
            CHECK(b.size == 4);  // the captured block
        }
    CHECK(has_fail);
}

TEST_CASE("ball truncation preserves one-sidedness") {
    Hypergraph far = generators::far_bounded_tw_family(40);
    HypergraphOracle oracle(far);
    TesterConfig cfg;
    cfg.epsilon = Rational(1, 20);
    cfg.ball_budget = 2;  // every ball truncates before capturing a block
    auto report = ball_tester_kpartite(oracle, cfg, 5);
    CHECK(report.accept);
    for (const auto& b : report.balls) CHECK(b.verdict == BallReport::Verdict::Truncated);
}

TEST_CASE("query counts do not depend on the instance size") {
    Hypergraph small = generators::far_bounded_tw_family(120);
    Hypergraph large = generators::far_bounded_tw_family(240);
    TesterConfig cfg;
    cfg.epsilon = Rational(1, 20);
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        HypergraphOracle os(small), ol(large);
        auto rs = ball_tester_kpartite(os, cfg, seed);
        auto rl = ball_tester_kpartite(ol, cfg, seed);
        CHECK(rs.queries_used == rl.queries_used);
    }
}

TEST_CASE("report serialization is line oriented with stable field order") {
    Hypergraph h(3, 3, 1, {{1, 2, 3}});
    HypergraphOracle oracle(h);
    TesterConfig cfg;
    cfg.epsilon = Rational(1, 2);
    cfg.sample_count = 2;
    auto report = ball_tester_kpartite(oracle, cfg, 9);
    std::string s = report.str();
    CHECK(s.find("verdict=accept\n") == 0);
    CHECK(s.find("queries=") != std::string::npos);
    CHECK(s.find("seed=9") != std::string::npos);
    CHECK(s.find("ball start=") != std::string::npos);
}

TEST_CASE("estimate_acceptance") {
    TesterConfig cfg;
    cfg.epsilon = Rational(1, 10);
    auto family = [](std::uint64_t seed) {
        return generators::yes_bounded_tw_family(20, seed).h;
    };
    auto est = estimate_acceptance(family, cfg, 50, 77);
    CHECK(est.frequency == Rational(1));
    CHECK(est.std_error == 0.0);
    CHECK_THROWS_AS(estimate_acceptance(family, cfg, 0, 1), DomainError);
}

TEST_CASE("measure_overhead reports the max base queries per adapter query") {
    Graph g = generators::random_bounded_graph(30, 3, 35, 4);
    GraphOracle base(g);
    reductions::Rho3ParAdapter adapter(base);
    std::uint64_t overhead =
        measure_overhead(adapter, [&] { return base.count(); }, 500, 12);
    CHECK(overhead >= 1);
    CHECK(overhead <= 1 + static_cast<std::uint64_t>(g.delta_bound()));
}

TEST_CASE("measure_locality builds a per-size overhead table") {
    auto table = measure_locality(AdapterKind::RhoInd, {24, 48}, 99, 400);
    REQUIRE(table.rows.size() == 2);
    CHECK(table.uniform());
    CHECK(table.rows[0].max_overhead <= 2);  // one level query plus a boundary probe
    CHECK(table.str().find("n=24") != std::string::npos);
    CHECK_THROWS_AS(measure_locality(AdapterKind::RhoInd, {24}, 99), DomainError);
}
