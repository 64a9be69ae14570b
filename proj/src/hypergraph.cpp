#include "hpt/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "hpt/errors.hpp"

namespace hpt {

namespace {

std::vector<int> normalize_edge(std::vector<int> e, int k, int n) {
    if (static_cast<int>(e.size()) != k) throw DomainError("hyperedge arity != k");
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 1 || e[i] > n) throw DomainError("hyperedge vertex out of range");
        if (i > 0 && e[i] == e[i - 1]) throw DomainError("hyperedge has repeated vertex");
    }
    return e;
}

}  // namespace

Hypergraph::Hypergraph(int k, int n, int delta_bound, std::vector<std::vector<int>> edges,
                       bool allows_multi)
    : k_(k), n_(n), delta_bound_(delta_bound), allows_multi_(allows_multi),
      edges_(std::move(edges)) {
    if (k_ < 2) throw DomainError("hypergraph: k must be >= 2");
    if (n_ < 0) throw DomainError("hypergraph: negative vertex count");
    if (delta_bound_ < 1) throw DomainError("hypergraph: degree bound must be >= 1");
    std::vector<int> deg(static_cast<std::size_t>(n_) + 1, 0);
    for (auto& e : edges_) {
        e = normalize_edge(std::move(e), k_, n_);
        for (int v : e) {
            if (++deg[static_cast<std::size_t>(v)] > delta_bound_)
                throw DomainError("hypergraph: vertex " + std::to_string(v) +
                                  " exceeds degree bound");
        }
    }
    if (!allows_multi_) {
        std::set<std::vector<int>> seen;
        for (const auto& e : edges_) {
            if (!seen.insert(e).second) throw DomainError("hypergraph: duplicate hyperedge");
        }
    }
}

int Hypergraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges_)
        if (std::binary_search(e.begin(), e.end(), v)) ++d;
    return d;
}

Graph::Graph(int n, int delta_bound, std::vector<std::pair<int, int>> edges)
    : n_(n), delta_bound_(delta_bound), edges_(std::move(edges)) {
    if (n_ < 0) throw DomainError("graph: negative vertex count");
    if (delta_bound_ < 1) throw DomainError("graph: degree bound must be >= 1");
    std::set<std::pair<int, int>> seen;
    std::vector<int> deg(static_cast<std::size_t>(n_) + 1, 0);
    for (auto& e : edges_) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first == e.second) throw DomainError("graph: self-loop");
        if (e.first < 1 || e.second > n_) throw DomainError("graph: vertex out of range");
        if (!seen.insert(e).second) throw DomainError("graph: duplicate edge");
        if (++deg[static_cast<std::size_t>(e.first)] > delta_bound_ ||
            ++deg[static_cast<std::size_t>(e.second)] > delta_bound_)
            throw DomainError("graph: degree bound exceeded");
    }
}

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges_)
        if (e.first == v || e.second == v) ++d;
    return d;
}

Coloring::Coloring(int palette_size, std::vector<int> assignment)
    : palette_size_(palette_size), assignment_(std::move(assignment)) {
    if (palette_size_ < 1) throw DomainError("coloring: empty palette");
    for (int c : assignment_)
        if (c < 1 || c > palette_size_) throw DomainError("coloring: color out of range");
}

std::vector<std::vector<int>> build_adjacency(const Hypergraph& h) {
    std::vector<std::vector<int>> rows(
        static_cast<std::size_t>(h.n()),
        std::vector<int>(static_cast<std::size_t>(h.delta_bound()), kNoEdge));
    std::vector<int> fill(static_cast<std::size_t>(h.n()), 0);
    for (int ei = 0; ei < h.edge_count(); ++ei) {
        for (int v : h.edges()[static_cast<std::size_t>(ei)]) {
            rows[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(fill[v - 1]++)] = ei;
        }
    }
    return rows;
}

std::vector<std::vector<int>> build_adjacency(const Graph& g) {
    std::vector<std::vector<int>> rows(
        static_cast<std::size_t>(g.n()),
        std::vector<int>(static_cast<std::size_t>(g.delta_bound()), kNoEdge));
    std::vector<int> fill(static_cast<std::size_t>(g.n()), 0);
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const auto& [a, b] = g.edges()[static_cast<std::size_t>(ei)];
        rows[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(fill[a - 1]++)] = ei;
        rows[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(fill[b - 1]++)] = ei;
    }
    return rows;
}

Rational hyper_distance(const Hypergraph& h1, const Hypergraph& h2, int delta) {
    if (h1.n() != h2.n() || h1.k() != h2.k())
        throw DomainError("hyper_distance: mismatched dimensions");
    if (delta < 1) throw DomainError("hyper_distance: bad delta");
    for (const Hypergraph* h : {&h1, &h2}) {
        for (int v = 1; v <= h->n(); ++v)
            if (h->degree(v) > delta) throw DomainError("hyper_distance: delta not respected");
    }
    std::map<std::vector<int>, std::int64_t> mult;
    for (const auto& e : h1.edges()) mult[e] += 1;
    for (const auto& e : h2.edges()) mult[e] -= 1;
    std::int64_t diff = 0;
    for (const auto& [e, m] : mult) diff += m < 0 ? -m : m;
    return Rational(diff, static_cast<std::int64_t>(delta) * h1.n());
}

Rational graph_distance(const Graph& g1, const Graph& g2, int delta) {
    if (g1.n() != g2.n()) throw DomainError("graph_distance: mismatched dimensions");
    if (delta < 1) throw DomainError("graph_distance: bad delta");
    std::set<std::pair<int, int>> e1(g1.edges().begin(), g1.edges().end());
    std::set<std::pair<int, int>> e2(g2.edges().begin(), g2.edges().end());
    std::int64_t diff = 0;
    for (const auto& e : e1)
        if (!e2.count(e)) ++diff;
    for (const auto& e : e2)
        if (!e1.count(e)) ++diff;
    return Rational(diff, static_cast<std::int64_t>(delta) * g1.n());
}

Graph gaifman(const Hypergraph& h) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) pairs.insert({e[i], e[j]});
    }
    std::vector<std::pair<int, int>> edges(pairs.begin(), pairs.end());
    int delta = (h.k() - 1) * h.delta_bound();
    return Graph(h.n(), delta, std::move(edges));
}

InducedSubhypergraph induced_subhypergraph(const Hypergraph& h, const std::vector<int>& s) {
    std::set<int> members;
    for (int v : s) {
        if (v < 1 || v > h.n()) throw DomainError("induced_subhypergraph: vertex out of range");
        members.insert(v);
    }
    std::vector<int> original_ids(members.begin(), members.end());
    std::map<int, int> relabel;
    for (std::size_t i = 0; i < original_ids.size(); ++i)
        relabel[original_ids[i]] = static_cast<int>(i) + 1;
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges()) {
        bool inside = true;
        for (int v : e)
            if (!members.count(v)) {
                inside = false;
                break;
            }
        if (!inside) continue;
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(relabel[v]);
        edges.push_back(std::move(mapped));
    }
    Hypergraph sub(h.k(), static_cast<int>(original_ids.size()), h.delta_bound(),
                   std::move(edges), h.allows_multi());
    return {std::move(sub), std::move(original_ids)};
}

Hypergraph simplify(const Hypergraph& h) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges())
        if (seen.insert(e).second) edges.push_back(e);
    return Hypergraph(h.k(), h.n(), h.delta_bound(), std::move(edges), false);
}

}  // namespace hpt
