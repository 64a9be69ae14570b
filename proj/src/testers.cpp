#include "hpt/testers.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "hpt/errors.hpp"
#include "hpt/generators.hpp"
#include "hpt/reductions.hpp"
#include "hpt/rho3col.hpp"
#include "hpt/rng.hpp"

namespace hpt::testers {

int TesterConfig::resolved_samples() const {
    if (sample_count > 0) return sample_count;
    // ceil(8 / epsilon)
    Rational r = Rational(8) / epsilon;
    return static_cast<int>((r.num() + r.den() - 1) / r.den());
}

void TesterConfig::validate() const {
    if (!(epsilon > Rational(0) && epsilon < Rational(1)))
        throw DomainError("tester: epsilon must be in (0,1)");
    if (sample_count < 0 || radius < 1 || ball_budget < 1)
        throw DomainError("tester: bad configuration");
}

std::string TesterReport::str() const {
    std::ostringstream out;
    out << "verdict=" << (accept ? "accept" : "reject") << '\n';
    out << "queries=" << queries_used << '\n';
    out << "seed=" << seed << '\n';
    for (const auto& b : balls) {
        out << "ball start=" << b.start << " size=" << b.size << " verdict=";
        switch (b.verdict) {
            case BallReport::Verdict::Ok: out << "ok"; break;
            case BallReport::Verdict::Fail: out << "fail"; break;
            case BallReport::Verdict::Truncated: out << "truncated"; break;
        }
        out << '\n';
    }
    return out.str();
}

TesterReport ball_tester_kpartite(IncidenceOracle& oracle, const TesterConfig& cfg,
                                  std::uint64_t seed) {
    cfg.validate();
    reductions::GaifmanAdapter gaifman(oracle);
    Rng rng(seed);
    const std::uint64_t base_start = oracle.count();
    TesterReport report;
    report.seed = seed;
    report.accept = true;

    const int samples = cfg.resolved_samples();
    for (int trial = 0; trial < samples; ++trial) {
        int start = static_cast<int>(rng.next_int(1, oracle.n()));
        // BFS in the primal graph up to cfg.radius, capped at ball_budget.
        std::set<int> ball = {start};
        std::vector<int> frontier = {start};
        bool truncated = false;
        for (int depth = 0; depth < cfg.radius && !frontier.empty() && !truncated; ++depth) {
            std::vector<int> next;
            for (int v : frontier) {
                if (truncated) break;
                for (int j = 1; j <= gaifman.delta(); ++j) {
                    QueryAnswer e = gaifman.query(v, j);
                    if (is_dummy(e)) break;
                    int u = e[0] == v ? e[1] : e[0];
                    if (ball.count(u)) continue;
                    if (static_cast<int>(ball.size()) >= cfg.ball_budget) {
                        truncated = true;
                        break;
                    }
                    ball.insert(u);
                    next.push_back(u);
                }
            }
            frontier = std::move(next);
        }

        BallReport ball_report;
        ball_report.start = start;
        ball_report.size = static_cast<int>(ball.size());
        if (truncated) {
            // Never reject on partial information.
            ball_report.verdict = BallReport::Verdict::Truncated;
            report.balls.push_back(ball_report);
            continue;
        }

        // Hyperedges fully inside the ball, read off the base oracle.
        std::vector<int> ids(ball.begin(), ball.end());
        std::set<std::vector<int>> edge_set;
        for (int v : ids) {
            for (int j = 1; j <= oracle.delta(); ++j) {
                QueryAnswer e = oracle.query(v, j);
                if (is_dummy(e)) break;
                bool inside = true;
                for (int u : e)
                    if (!ball.count(u)) {
                        inside = false;
                        break;
                    }
                if (inside) edge_set.insert(e);
            }
        }
        std::vector<std::vector<int>> edges;
        for (const auto& e : edge_set) {
            std::vector<int> mapped;
            mapped.reserve(e.size());
            for (int u : e)
                mapped.push_back(static_cast<int>(
                    std::lower_bound(ids.begin(), ids.end(), u) - ids.begin() + 1));
            edges.push_back(std::move(mapped));
        }
        Hypergraph induced(oracle.arity(), static_cast<int>(ids.size()), oracle.delta(),
                           std::move(edges));
        auto witness = solvers::rainbow_partition(induced, solvers::SearchMode::Backtracking,
                                                  cfg.solver_limits);
        ball_report.verdict = witness ? BallReport::Verdict::Ok : BallReport::Verdict::Fail;
        if (!witness) report.accept = false;
        report.balls.push_back(ball_report);
    }
    report.queries_used = oracle.count() - base_start;
    return report;
}

AcceptanceEstimate estimate_acceptance(const std::function<Hypergraph(std::uint64_t)>& family,
                                       const TesterConfig& cfg, int trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("estimate_acceptance: trials must be >= 1");
    std::int64_t accepted = 0;
    for (int t = 0; t < trials; ++t) {
        Hypergraph h = family(sub_seed(seed, "instance", static_cast<std::uint64_t>(t)));
        HypergraphOracle oracle(h);
        TesterReport r = ball_tester_kpartite(
            oracle, cfg, sub_seed(seed, "tester", static_cast<std::uint64_t>(t)));
        if (r.accept) ++accepted;
    }
    Rational freq(accepted, trials);
    double p = freq.to_double();
    double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    return {accepted, trials, freq, se};
}

std::uint64_t measure_overhead(IncidenceOracle& adapter,
                               const std::function<std::uint64_t()>& base_count, int queries,
                               std::uint64_t seed) {
    Rng rng(seed);
    std::uint64_t max_overhead = 0;
    for (int q = 0; q < queries; ++q) {
        int v = static_cast<int>(rng.next_int(1, adapter.n()));
        int j = static_cast<int>(rng.next_int(1, adapter.delta()));
        std::uint64_t before = base_count();
        adapter.query(v, j);
        max_overhead = std::max(max_overhead, base_count() - before);
    }
    return max_overhead;
}

bool LocalityTable::uniform() const {
    for (const auto& row : rows)
        if (row.max_overhead != rows[0].max_overhead) return false;
    return true;
}

std::string LocalityTable::str() const {
    std::ostringstream ss;
    for (std::size_t i = 0; i < rows.size(); ++i)
        ss << (i ? ", " : "") << "n=" << rows[i].n << ":" << rows[i].max_overhead;
    return ss.str();
}

LocalityTable measure_locality(AdapterKind kind, const std::vector<int>& sizes,
                               std::uint64_t seed, int queries) {
    if (sizes.size() < 2) throw DomainError("measure_locality: need at least two sizes");
    LocalityTable table;
    table.kind = kind;
    for (int n : sizes) {
        std::uint64_t inst_seed = sub_seed(seed, "instance", static_cast<std::uint64_t>(n));
        std::uint64_t load_seed = sub_seed(seed, "workload", static_cast<std::uint64_t>(n));
        std::uint64_t overhead = 0;
        switch (kind) {
            case AdapterKind::Rho3Par: {
                Graph g = generators::random_bounded_graph(n, 3, (5 * n) / 4, inst_seed);
                GraphOracle base(g);
                reductions::Rho3ParAdapter adapter(base);
                overhead = measure_overhead(
                    adapter, [&] { return base.count(); }, queries, load_seed);
                break;
            }
            case AdapterKind::RhoParTw: {
                Hypergraph h = generators::random_bounded_hypergraph(n, 3, 3, n, inst_seed);
                HypergraphOracle base(h);
                reductions::GaifmanAdapter adapter(base);
                overhead = measure_overhead(
                    adapter, [&] { return base.count(); }, queries, load_seed);
                break;
            }
            case AdapterKind::RhoInd: {
                Hypergraph h = generators::random_bounded_hypergraph(n, 3, 3, n, inst_seed);
                HypergraphOracle base(h);
                reductions::RhoIndAdapter adapter(base);
                overhead = measure_overhead(
                    adapter, [&] { return base.count(); }, queries, load_seed);
                break;
            }
            case AdapterKind::Rho3Col: {
                CnfFormula f = generators::random_kc_cnf(n, 2, inst_seed);
                auto pool = generators::random_regular_expander(
                    16 * n, 4, sub_seed(seed, "pool", static_cast<std::uint64_t>(n)));
                CnfIncidenceOracle base(f);
                reductions::Rho3ColAdapter adapter(base, 3, pool.graph);
                overhead = measure_overhead(
                    adapter, [&] { return base.count(); }, std::min(queries, 600), load_seed);
                break;
            }
        }
        table.rows.push_back({n, overhead});
    }
    return table;
}

}  // namespace hpt::testers
