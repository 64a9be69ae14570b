#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hpt/oracle.hpp"
#include "hpt/rational.hpp"
#include "hpt/solvers.hpp"

namespace hpt::testers {

struct TesterConfig {
    Rational epsilon = Rational(1, 20);
    int sample_count = 0;  // 0 = ceil(8/epsilon)
    int radius = 2;
    int ball_budget = 64;
    solvers::SearchLimits solver_limits = {1ULL << 22, 20'000'000};

    int resolved_samples() const;
    void validate() const;
};

struct BallReport {
    int start;
    int size;
    enum class Verdict { Ok, Fail, Truncated } verdict;
};

struct TesterReport {
    bool accept;
    std::uint64_t queries_used;
    std::uint64_t seed;
    std::vector<BallReport> balls;

    // Line-oriented: verdict=, queries=, seed=, then one line per ball.
    std::string str() const;
};

// One-sided k-partiteness tester: samples start vertices, explores radius-r
// balls through the lazy Gaifman adapter, and rejects only when a ball's
// induced subhypergraph is certified non-k-partite. A truncated ball always
// accepts, so a k-partite input is never rejected. queries_used counts base
// oracle queries.
TesterReport ball_tester_kpartite(IncidenceOracle& oracle, const TesterConfig& cfg,
                                  std::uint64_t seed);

struct AcceptanceEstimate {
    std::int64_t accepted;
    std::int64_t trials;
    Rational frequency;
    double std_error;  // binomial
};

// Runs the tester on fresh instances family(sub_seed(i)); deterministic.
AcceptanceEstimate estimate_acceptance(const std::function<Hypergraph(std::uint64_t)>& family,
                                       const TesterConfig& cfg, int trials, std::uint64_t seed);

// Max base-queries-per-adapter-query over a seeded uniform workload.
std::uint64_t measure_overhead(IncidenceOracle& adapter,
                               const std::function<std::uint64_t()>& base_count, int queries,
                               std::uint64_t seed);

enum class AdapterKind { Rho3Par, RhoParTw, RhoInd, Rho3Col };

struct LocalityRow {
    int n;
    std::uint64_t max_overhead;
};

struct LocalityTable {
    AdapterKind kind;
    std::vector<LocalityRow> rows;
    bool uniform() const;  // the locality signature: equal max across sizes
    std::string str() const;
};

// Builds seeded random base instances at each size, layers the adapter, and
// measures the max base-queries-per-adapter-query over a random workload.
LocalityTable measure_locality(AdapterKind kind, const std::vector<int>& sizes,
                               std::uint64_t seed, int queries = 2000);

}  // namespace hpt::testers
