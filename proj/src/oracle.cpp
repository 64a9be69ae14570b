#include "hpt/oracle.hpp"

#include <string>

#include "hpt/errors.hpp"

namespace hpt {

QueryAnswer IncidenceOracle::query(int v, int j) {
    if (v < 1 || v > n())
        throw DomainError("oracle: vertex " + std::to_string(v) + " out of range");
    if (j < 1 || j > delta())
        throw DomainError("oracle: slot " + std::to_string(j) + " out of range");
    QueryAnswer a = answer(v, j);
    ++count_;
    if (trace_) {
        *trace_ << "Q " << layer_name() << ' ' << v << ' ' << j << " ->";
        if (is_dummy(a)) {
            *trace_ << " bot";
        } else {
            for (int u : a) *trace_ << ' ' << u;
        }
        *trace_ << '\n';
    }
    return a;
}

HypergraphOracle::HypergraphOracle(const Hypergraph& h) : h_(h), rows_(build_adjacency(h)) {}

QueryAnswer HypergraphOracle::answer(int v, int j) {
    int ei = rows_[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(j - 1)];
    if (ei == kNoEdge) return {};
    return h_.edges()[static_cast<std::size_t>(ei)];
}

GraphOracle::GraphOracle(const Graph& g) : g_(g), rows_(build_adjacency(g)) {}

QueryAnswer GraphOracle::answer(int v, int j) {
    int ei = rows_[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(j - 1)];
    if (ei == kNoEdge) return {};
    const auto& [a, b] = g_.edges()[static_cast<std::size_t>(ei)];
    return {a, b};
}

std::vector<std::vector<QueryAnswer>> dump_all_rows(IncidenceOracle& o) {
    std::vector<std::vector<QueryAnswer>> rows;
    rows.reserve(static_cast<std::size_t>(o.n()));
    for (int v = 1; v <= o.n(); ++v) {
        std::vector<QueryAnswer> row;
        row.reserve(static_cast<std::size_t>(o.delta()));
        for (int j = 1; j <= o.delta(); ++j) row.push_back(o.query(v, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hpt
