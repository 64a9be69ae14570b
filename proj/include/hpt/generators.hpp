#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpt/cnf.hpp"
#include "hpt/hypergraph.hpp"

namespace hpt::generators {

enum class ExpanderCertificate { Exhaustive, SpectralHeuristic, Unverified };

std::string certificate_name(ExpanderCertificate c);

struct ExpanderGraph {
    Graph graph;
    int d;
    ExpanderCertificate certificate;
    double lambda_bound;  // spectral estimate of max(|l2|, |ln|); 0 when exhaustive
};

// Exhaustive vertex-expansion check (n <= 24): returns a violating set S with
// |S| <= n/2 and |N(S)| < |S|, or nothing if the graph expands.
std::optional<std::vector<int>> expansion_counterexample(const Graph& g);

// Seeded pairing-model d-regular graph, resampled on loops/multi-edges and on
// failed verification. Exhaustive verification up to 20 vertices, spectral
// heuristic above (power iteration, threshold 2.1*sqrt(d-1)).
ExpanderGraph random_regular_expander(int n, int d, std::uint64_t seed);

// d independent uniform perfect triple-partitions of [n]; multiset union.
Hypergraph sample_appendix_b(int n, int d, std::uint64_t seed);

// True iff sum(x) == sum(y) + 1.
bool h_eval(const std::vector<bool>& x, const std::vector<bool>& y);

struct CspConstraint {
    int vertex;
    std::vector<int> x_vars;  // out-arc variables, slot order = edge order at v
    std::vector<int> y_vars;  // in-arc variables
};

struct CspInstance {
    int d;
    int var_count;  // one variable per arc of the doubled expander
    std::vector<CspConstraint> constraints;
};

CspInstance build_fn(const ExpanderGraph& expander);

bool csp_satisfied(const CspInstance& csp, const std::vector<bool>& assignment);
bool constraint_satisfied(const CspConstraint& c, const std::vector<bool>& assignment);
std::optional<std::vector<bool>> csp_brute_force(const CspInstance& csp, int var_limit = 20);

// Unary running-sum encoding of every h constraint into exactly-3 clauses;
// equisatisfiable, solutions project onto the CSP solutions.
CnfFormula csp_to_3cnf(const CspInstance& csp);

// Exactly-3-uniform (3,c)-regular random formula (configuration model over
// literal slots, resampled until every clause has three distinct variables).
CnfFormula random_kc_cnf(int n, int c, std::uint64_t seed);

// Random degree-bounded instances for randomized checks.
Graph random_bounded_graph(int n, int delta, int edge_target, std::uint64_t seed);
Hypergraph random_bounded_hypergraph(int n, int k, int delta, int edge_target,
                                     std::uint64_t seed);

// Disjoint complete 3-uniform blocks on 4 vertices; distance 1/6 from
// 3-partiteness, treewidth 3. Requires n % 4 == 0.
Hypergraph far_bounded_tw_family(int n);

struct YesInstance {
    Hypergraph h;
    Coloring witness;  // a rainbow 3-partition, by construction
};

// Chain-of-bags 3-partite instance (bag size <= 4, treewidth <= 3).
YesInstance yes_bounded_tw_family(int n, std::uint64_t seed, int delta_bound = 3);

// Ordered key=value manifest; replaying reproduces the payload byte for byte.
struct Manifest {
    std::vector<std::pair<std::string, std::string>> entries;

    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, std::int64_t value);
    std::string get(const std::string& key) const;  // throws if missing
    std::string str() const;
    static Manifest parse(const std::string& text);
};

std::uint64_t payload_digest(const std::string& payload);

enum class PipelineTarget { ThreeColHypergraph, ThreePartiteHypergraph, IndependenceNumber };

std::string target_name(PipelineTarget t);
std::optional<PipelineTarget> parse_target(const std::string& name);

struct PipelineResult {
    Hypergraph instance;
    Manifest manifest;
};

// Composes expander -> f_n -> 3-CNF -> regularize -> rho_3col, then
// -> gaifman -> rho_3par (3-partite target) -> rho_ind (independence target).
// Every stage records its parameters and sub-seed in the manifest.
PipelineResult hard_instance_pipeline(int n, PipelineTarget target, std::uint64_t seed);

}  // namespace hpt::generators
