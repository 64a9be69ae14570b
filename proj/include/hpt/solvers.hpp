#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hpt/hypergraph.hpp"
#include "hpt/rational.hpp"

namespace hpt::solvers {

// All four kinds are monotone under edge deletion: deleting never destroys
// the property, so distance equals min violations over assignments/subsets
// (docs/derivations.md, "deletion optimality").
enum class PropertyKind { WeakColorable, KPartite, IndependenceAtLeast, GraphColorable };

struct PropertySpec {
    PropertyKind kind;
    int lambda = 0;     // WeakColorable / GraphColorable
    int threshold = 0;  // IndependenceAtLeast

    static PropertySpec weak_colorable(int lambda) {
        return {PropertyKind::WeakColorable, lambda, 0};
    }
    static PropertySpec k_partite() { return {PropertyKind::KPartite, 0, 0}; }
    static PropertySpec independence_at_least(int t) {
        return {PropertyKind::IndependenceAtLeast, 0, t};
    }
    static PropertySpec graph_colorable(int lambda) {
        return {PropertyKind::GraphColorable, lambda, 0};
    }
};

struct SearchLimits {
    std::uint64_t max_states = 1ULL << 25;     // exhaustive enumeration cap
    std::uint64_t node_budget = 100'000'000;   // backtracking node cap
};

// Exhaustive iterates assignments lexicographically (canonical witnesses);
// Backtracking is complete search with propagation and palette symmetry
// breaking (any witness). A blown budget is a CapacityError, never a verdict.
enum class SearchMode { Exhaustive, Backtracking };

// Weak coloring: every hyperedge sees at least two colors.
std::optional<Coloring> weak_coloring(const Hypergraph& h, int lambda,
                                      SearchMode mode = SearchMode::Exhaustive,
                                      const SearchLimits& limits = {});

// Rainbow k-coloring: every hyperedge sees all k colors.
std::optional<Coloring> rainbow_partition(const Hypergraph& h,
                                          SearchMode mode = SearchMode::Exhaustive,
                                          const SearchLimits& limits = {});

// Proper graph coloring.
std::optional<Coloring> graph_coloring(const Graph& g, int lambda,
                                       SearchMode mode = SearchMode::Exhaustive,
                                       const SearchLimits& limits = {});

struct IndependenceResult {
    int size;
    std::vector<int> witness;
};

// Maximum independent set (no hyperedge fully inside). stop_at short-circuits
// once a set of that size is found (size is then a lower bound).
IndependenceResult independence_number(const Hypergraph& h, const SearchLimits& limits = {},
                                       int stop_at = -1);

// Completes a partial coloring (preset[v-1] != 0 fixes vertex v) to a valid
// total one under the not-all-equal (weak) or all-distinct rule; complete
// backtracking, so NONE certifies that no completion exists.
std::optional<Coloring> complete_coloring(int n, int lambda, bool not_all_equal,
                                          const std::vector<std::vector<int>>& edges,
                                          const std::vector<int>& preset,
                                          const SearchLimits& limits = {});

// Violations of a coloring: monochromatic edges (weak), non-rainbow edges
// (k-partite), improper edges (graph).
int count_violations(const Hypergraph& h, const Coloring& c, PropertyKind kind);
int count_violations(const Graph& g, const Coloring& c);

// min over assignments (or n-subsets, for independence) of violated edges,
// over delta_bound*n. Exact; decomposes over connected components and
// resolves single-edge vertices per edge.
Rational distance_to_property(const Hypergraph& h, const PropertySpec& spec,
                              const SearchLimits& limits = {});
Rational distance_to_property(const Graph& g, const PropertySpec& spec,
                              const SearchLimits& limits = {});

}  // namespace hpt::solvers
