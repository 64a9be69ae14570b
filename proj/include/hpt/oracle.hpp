#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hpt/hypergraph.hpp"

namespace hpt {

// Answer to an incidence query: the hyperedge (or graph edge) at the queried
// slot, or empty for the dummy symbol (slot beyond the vertex's degree).
using QueryAnswer = std::vector<int>;

inline bool is_dummy(const QueryAnswer& a) { return a.empty(); }

// Slot-addressed incidence access with monotone query counting. The only way
// testers see instances; reductions layer adapters on top, each layer keeping
// its own counter so overheads are measurable as ratios.
class IncidenceOracle {
public:
    virtual ~IncidenceOracle() = default;

    // j-th incident edge of v in global order, or dummy. Out-of-range (v, j)
    // throws DomainError and does not count.
    QueryAnswer query(int v, int j);

    std::uint64_t count() const { return count_; }
    void reset_count() { count_ = 0; }

    virtual int n() const = 0;
    virtual int delta() const = 0;
    virtual int arity() const = 0;  // vertices per answer (k, or 2 for graphs)
    virtual std::string layer_name() const = 0;

    void set_trace(std::ostream* trace) { trace_ = trace; }

protected:
    virtual QueryAnswer answer(int v, int j) = 0;

private:
    std::uint64_t count_ = 0;
    std::ostream* trace_ = nullptr;
};

// Oracle over a materialized hypergraph (not owned).
class HypergraphOracle final : public IncidenceOracle {
public:
    explicit HypergraphOracle(const Hypergraph& h);

    int n() const override { return h_.n(); }
    int delta() const override { return h_.delta_bound(); }
    int arity() const override { return h_.k(); }
    std::string layer_name() const override { return "hgr"; }

protected:
    QueryAnswer answer(int v, int j) override;

private:
    const Hypergraph& h_;
    std::vector<std::vector<int>> rows_;
};

// Oracle over a materialized graph (not owned).
class GraphOracle final : public IncidenceOracle {
public:
    explicit GraphOracle(const Graph& g);

    int n() const override { return g_.n(); }
    int delta() const override { return g_.delta_bound(); }
    int arity() const override { return 2; }
    std::string layer_name() const override { return "gr"; }

protected:
    QueryAnswer answer(int v, int j) override;

private:
    const Graph& g_;
    std::vector<std::vector<int>> rows_;
};

// Reads every (v, j) slot and reassembles the instance; the consistency check
// that oracle answers reconstruct build_adjacency exactly.
std::vector<std::vector<QueryAnswer>> dump_all_rows(IncidenceOracle& o);

}  // namespace hpt
