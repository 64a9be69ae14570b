#pragma once

#include <utility>
#include <vector>

#include "hpt/rational.hpp"

namespace hpt {

// Slot value for the padded adjacency rows: "no edge here".
inline constexpr int kNoEdge = -1;

// k-uniform bounded-degree hypergraph over vertices 1..n. The stored edge
// sequence IS the global ordering; each hyperedge is kept sorted ascending.
// allows_multi permits repeated hyperedges (sampling distributions only).
class Hypergraph {
public:
    Hypergraph(int k, int n, int delta_bound, std::vector<std::vector<int>> edges,
               bool allows_multi = false);

    int k() const { return k_; }
    int n() const { return n_; }
    int delta_bound() const { return delta_bound_; }
    bool allows_multi() const { return allows_multi_; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Degree of vertex v (with multiplicity).
    int degree(int v) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.k_ == b.k_ && a.n_ == b.n_ && a.delta_bound_ == b.delta_bound_ &&
               a.allows_multi_ == b.allows_multi_ && a.edges_ == b.edges_;
    }

private:
    int k_;
    int n_;
    int delta_bound_;
    bool allows_multi_;
    std::vector<std::vector<int>> edges_;
};

// Bounded-degree graph over vertices 1..n, edges stored as ascending pairs in
// a fixed global order. No self-loops, no duplicates.
class Graph {
public:
    Graph(int n, int delta_bound, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int delta_bound() const { return delta_bound_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.delta_bound_ == b.delta_bound_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    int delta_bound_;
    std::vector<std::pair<int, int>> edges_;
};

// Total color assignment 1..n -> 1..palette_size.
class Coloring {
public:
    Coloring(int palette_size, std::vector<int> assignment);

    int palette_size() const { return palette_size_; }
    int n() const { return static_cast<int>(assignment_.size()); }
    int color(int v) const { return assignment_[static_cast<std::size_t>(v - 1)]; }
    const std::vector<int>& assignment() const { return assignment_; }

private:
    int palette_size_;
    std::vector<int> assignment_;  // index v-1
};

// Padded adjacency table: n rows of length delta_bound holding edge indices
// (0-based into H.edges()) in global order, kNoEdge beyond the degree.
std::vector<std::vector<int>> build_adjacency(const Hypergraph& h);
std::vector<std::vector<int>> build_adjacency(const Graph& g);

// |E1 \ E2| + |E2 \ E1| over delta*n, exact. Multiset difference when either
// side allows multiplicities. Throws DomainError on mismatched n/k or when a
// side exceeds the degree bound delta.
Rational hyper_distance(const Hypergraph& h1, const Hypergraph& h2, int delta);
Rational graph_distance(const Graph& g1, const Graph& g2, int delta);

// Primal graph: u ~ v iff they share a hyperedge. Edges sorted lexicographic;
// degree bound (k-1)*delta(H), which the lazy adapter can declare without
// scanning the instance.
Graph gaifman(const Hypergraph& h);

struct InducedSubhypergraph {
    Hypergraph hypergraph;
    std::vector<int> original_ids;  // original_ids[new-1] = old id
};

// Keeps exactly the hyperedges inside S, relabels 1..|S| by ascending old id.
InducedSubhypergraph induced_subhypergraph(const Hypergraph& h, const std::vector<int>& s);

// Collapses multiplicities to 1, preserving first-occurrence order.
Hypergraph simplify(const Hypergraph& h);

}  // namespace hpt
