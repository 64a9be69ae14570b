#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hpt/cnf.hpp"
#include "hpt/gadgets.hpp"
#include "hpt/hypergraph.hpp"
#include "hpt/oracle.hpp"
#include "hpt/rational.hpp"

namespace hpt::reductions {

// Deterministic layout of the formula-to-hypergraph reduction. Vertex ids:
//   1 .. 4dn                 literal copies (2d copies per literal; literal
//                            l in 1..2n, l <= n positive, l > n negated)
//   4dn+1 .. 4dn+kP          pools T, F, D_1..D_{k-2}, P = 8dn each
//   4dn+kP+1 ..              V_add, consumed gadget by gadget
// Gadget emission order (the global hyperedge order):
//   1. equality between every copy pair of each literal
//   2. equality within each pool family along the expander edges
//   3. inequality between every copy of a literal and every copy of its
//      negation
//   4. inequality between each family pair at every pool index
//   5. a not-dummy gadget per literal copy
//   6. a clause gadget per clause
// Everything except stage 6 is independent of the clause structure, which is
// what makes single-query lazy answering possible.
struct Rho3ColSchema {
    int k;
    int n;  // variables
    int d;  // per-literal occurrence count
    int s;  // expander degree
    int m;  // clause count
    Graph expander;
    std::vector<std::vector<int>> expander_incident;  // per pool index, edge ids

    Rho3ColSchema(int k, int n, int d, int m, Graph expander_graph);

    int pool() const { return 8 * d * n; }
    int copies_per_literal() const { return 2 * d; }
    int copy_count() const { return 4 * d * n; }
    int first_pool_id() const { return copy_count() + 1; }
    int vadd_base() const { return copy_count() + k * pool() + 1; }

    int copy_id(int literal, int c) const { return (literal - 1) * copies_per_literal() + c; }
    int pool_id(int family, int i) const { return copy_count() + family * pool() + i; }
    int signed_literal(int literal) const { return literal <= n ? literal : -(literal - n); }

    int eq_aux() const { return k * k - k - 1; }
    int ineq_aux() const { return 2 * (k - 2) * (1 + eq_aux()); }
    int clause_aux() const { return 3 + (k - 3) * (1 + eq_aux()); }

    // gadget counts per stage
    std::int64_t copy_pairs() const;
    std::int64_t stage_gadgets(int stage) const;
    std::int64_t vadd_per_gadget(int stage) const;
    std::int64_t stage_vadd_start(int stage) const;  // V_add consumed before stage
    int total_vertices() const;
    int delta() const;

    // Cursor state before the idx-th gadget (0-based) of a stage.
    struct AllocState {
        int t, f, vadd;
        std::vector<int> d;
    };
    AllocState state_before(int stage, std::int64_t idx) const;

    // Re-emits a single gadget; stage-6 gadgets pull the clause content from
    // the provider (the only clause-dependent stage).
    gadgets::GadgetInstance emit_gadget(int stage, std::int64_t idx,
                                        const std::function<AnnotatedClause(int)>& clause_of) const;

    // (stage, index) pairs of the gadgets containing v, in global order.
    // Copy vertices may need the occurrence lookup for their stage-6 gadget.
    std::vector<std::pair<int, std::int64_t>> gadgets_at(
        int v, const std::function<AnnotatedClause(int, int)>& occurrence_of) const;
};

struct Rho3ColResult {
    Hypergraph h;
    Rho3ColSchema schema;
    std::vector<gadgets::GadgetInstance> gadget_list;  // emission order
};

// Materialized reduction. The formula must be exactly-3-uniform and
// (3,d)-regular; the expander must be s-regular on 8dn vertices with
// lexicographically sorted edges.
Rho3ColResult rho_kcol(const CnfFormula& f, int k, const Graph& expander);
Rho3ColResult rho_3col(const CnfFormula& f, const Graph& expander);

// Coloring built by propagating a satisfying assignment through the gadget
// extension rules; validates to zero monochromatic hyperedges.
Coloring coloring_from_assignment(const Rho3ColResult& r, const std::vector<bool>& sigma);

// Same construction for an arbitrary assignment: violations land exactly on
// the final hyperedges of the gadgets of unsatisfied clauses.
Coloring coloring_from_assignment_allow_violations(const Rho3ColResult& r,
                                                   const std::vector<bool>& sigma);

// Propagation-first backtracking search for a weak k-coloring, working over
// gadget anchor classes: equality gadgets merge classes, the remaining
// gadgets become exact relations (their forcing is what the gadget suite
// verifies exhaustively), and the search colors the merged classes. NONE is
// a certificate of non-colorability. See docs/derivations.md.
std::optional<Coloring> certified_weak_coloring(const Rho3ColResult& r,
                                                std::uint64_t node_budget = 100'000'000);

// Gap constant c1 with sat_distance(F) <= c1 * d(H, 3col):
// c1 = 3 * d * (delta_H * n_H) / m (docs/derivations.md).
Rational rho_3col_gap_constant(const Rho3ColResult& r);

// Lazy oracle over the reduction output; at most 3 clause lookups per query.
class Rho3ColAdapter final : public IncidenceOracle {
public:
    Rho3ColAdapter(CnfIncidenceOracle& base, int k, const Graph& expander);

    int n() const override { return schema_.total_vertices(); }
    int delta() const override { return schema_.delta(); }
    int arity() const override { return schema_.k; }
    std::string layer_name() const override { return "rho3col"; }

    const Rho3ColSchema& schema() const { return schema_; }

protected:
    QueryAnswer answer(int v, int j) override;

private:
    CnfIncidenceOracle& base_;
    Rho3ColSchema schema_;
};

std::unique_ptr<IncidenceOracle> make_rho3col_adapter(CnfIncidenceOracle& base, int k,
                                                      const Graph& expander);

}  // namespace hpt::reductions
