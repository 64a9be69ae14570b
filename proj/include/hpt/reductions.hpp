#pragma once

#include <memory>

#include "hpt/hypergraph.hpp"
#include "hpt/oracle.hpp"
#include "hpt/rational.hpp"

namespace hpt::reductions {

// Graph 3-colorability -> 3-uniform hypergraph 3-partiteness. Vertex set
// [n + d*n]; the j-th edge (u,v) incident on u (u < v, global order) becomes
// {u, v, n + (u-1)d + j}. Apex vertices have degree <= 1; outputs are simple.
Hypergraph rho_3par(const Graph& g);

// k-uniform variant: edge e (1-based global index) gets apexes
// n + (k-2)(e-1) + t, t in 1..k-2. k=3 is isomorphic to rho_3par up to apex
// renumbering.
Hypergraph rho_kpar(const Graph& g, int k);

// Hypergraph k-partiteness -> graph colorability: the primal graph.
Graph rho_par_tw(const Hypergraph& h);

// 3-partiteness -> independence number: three level copies of each hyperedge
// plus one vertical triple per vertex; (u,i) maps to 3(u-1)+i.
Hypergraph rho_ind(const Hypergraph& h);

// Lazy adapters answering target incidence queries through a counted base
// oracle. Each layer counts its own queries; the base counter measures
// locality overhead.

// Apex queries resolve with exactly one base query (slot (u, j)); core
// queries with at most 1 + delta.
class Rho3ParAdapter final : public IncidenceOracle {
public:
    explicit Rho3ParAdapter(IncidenceOracle& base);

    int n() const override { return base_.n() * (1 + base_.delta()); }
    int delta() const override { return base_.delta(); }
    int arity() const override { return 3; }
    std::string layer_name() const override { return "rho3par"; }

protected:
    QueryAnswer answer(int v, int j) override;

private:
    int apex_of(int u, int j) const { return base_.n() + (u - 1) * base_.delta() + j; }
    IncidenceOracle& base_;
};

// Gaifman rows from one base-row scan: at most delta base queries.
class GaifmanAdapter final : public IncidenceOracle {
public:
    explicit GaifmanAdapter(IncidenceOracle& base);

    int n() const override { return base_.n(); }
    int delta() const override { return (base_.arity() - 1) * base_.delta(); }
    int arity() const override { return 2; }
    std::string layer_name() const override { return "gaifman"; }

protected:
    QueryAnswer answer(int v, int j) override;

private:
    IncidenceOracle& base_;
};

// Level-copy rows; at most 2 base queries per query.
class RhoIndAdapter final : public IncidenceOracle {
public:
    explicit RhoIndAdapter(IncidenceOracle& base);

    int n() const override { return 3 * base_.n(); }
    int delta() const override { return base_.delta() + 1; }
    int arity() const override { return 3; }
    std::string layer_name() const override { return "rhoind"; }

protected:
    QueryAnswer answer(int v, int j) override;

private:
    IncidenceOracle& base_;
};

enum class ReductionKind { Rho3Col, RhoKCol, Rho3Par, RhoKPar, RhoParTw, RhoInd };

// Adapter factory for the oracle-to-oracle kinds. Rho3Col adapters sit on a
// CNF oracle and are built by make_rho3col_adapter (rho3col.hpp); the
// remaining kinds have no lazy form and raise CapacityError.
std::unique_ptr<IncidenceOracle> make_local_adapter(ReductionKind kind, IncidenceOracle& base);

// Gap constant of rho_3par: d(G,3col) <= (d+1) * d(rho_3par(G),3partite).
// Derivation in docs/derivations.md.
Rational rho_3par_gap_constant(const Graph& g);

// Gap factor of rho_ind per the source degree bound: 9(d+1).
Rational rho_ind_gap_constant(const Hypergraph& h);

}  // namespace hpt::reductions
