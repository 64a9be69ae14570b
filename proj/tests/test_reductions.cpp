#include <map>
#include <set>

#include "doctest.h"
#include "hpt/errors.hpp"
#include "hpt/generators.hpp"
#include "hpt/reductions.hpp"
#include "hpt/rho3col.hpp"
#include "hpt/rng.hpp"
#include "hpt/solvers.hpp"

using namespace hpt;
using namespace hpt::reductions;

TEST_CASE("rho_3par applies the apex index formula") {
    SUBCASE("triangle") {
        Graph k3(3, 2, {{1, 2}, {1, 3}, {2, 3}});
        Hypergraph h = rho_3par(k3);
        CHECK(h.n() == 9);
        CHECK(h.edges() ==
              std::vector<std::vector<int>>{{1, 2, 4}, {1, 3, 5}, {2, 3, 7}});
    }
    SUBCASE("single edge") {
        Graph g(2, 1, {{1, 2}});
        Hypergraph h = rho_3par(g);
        CHECK(h.n() == 4);
        CHECK(h.edges() == std::vector<std::vector<int>>{{1, 2, 3}});
    }
    SUBCASE("empty graph") {
        Graph g(4, 2, {});
        Hypergraph h = rho_3par(g);
        CHECK(h.n() == 12);
        CHECK(h.edge_count() == 0);
    }
    SUBCASE("apex degree at most one") {
        Graph g = generators::random_bounded_graph(10, 3, 12, 5);
        Hypergraph h = rho_3par(g);
        for (int v = g.n() + 1; v <= h.n(); ++v) CHECK(h.degree(v) <= 1);
        for (int v = 1; v <= g.n(); ++v) CHECK(h.degree(v) == g.degree(v));
    }
}

TEST_CASE("rho_kpar") {
    SUBCASE("k=3 is rho_3par up to apex renumbering") {
        Graph g = generators::random_bounded_graph(8, 3, 9, 11);
        Hypergraph a = rho_3par(g);
        Hypergraph b = rho_kpar(g, 3);
        REQUIRE(a.edge_count() == b.edge_count());
        // edge e of b has apex n+e; the corresponding a-edge has the formula
        // apex; the first two vertices agree.
        for (int e = 0; e < a.edge_count(); ++e) {
            std::vector<int> ea = a.edges()[static_cast<std::size_t>(e)];
            std::vector<int> eb = b.edges()[static_cast<std::size_t>(e)];
            std::vector<int> core_a, core_b;
            for (int v : ea)
                if (v <= g.n()) core_a.push_back(v);
            for (int v : eb)
                if (v <= g.n()) core_b.push_back(v);
            CHECK(core_a == core_b);
            CHECK(core_a.size() == 2);
        }
    }
    SUBCASE("k=4 single edge") {
        Graph g(2, 1, {{1, 2}});
        Hypergraph h = rho_kpar(g, 4);
        CHECK(h.n() == 4);
        CHECK(h.edges() == std::vector<std::vector<int>>{{1, 2, 3, 4}});
    }
    SUBCASE("each apex appears in exactly one hyperedge") {
        Graph g = generators::random_bounded_graph(8, 3, 9, 13);
        Hypergraph h = rho_kpar(g, 4);
        for (int v = g.n() + 1; v <= h.n(); ++v) CHECK(h.degree(v) == 1);
    }
}

TEST_CASE("rho_par_tw is the primal graph") {
    Hypergraph h(3, 4, 2, {{1, 2, 3}, {2, 3, 4}});
    CHECK(rho_par_tw(h) == gaifman(h));
}

TEST_CASE("rho_ind structure") {
    SUBCASE("single hyperedge") {
        Hypergraph h(3, 3, 1, {{1, 2, 3}});
        Hypergraph lifted = rho_ind(h);
        CHECK(lifted.n() == 9);
        CHECK(lifted.edge_count() == 6);  // 3 level copies + 3 verticals
        CHECK(lifted.delta_bound() == 2);
    }
    SUBCASE("empty on n=2") {
        Hypergraph h(3, 2, 1, {});
        Hypergraph lifted = rho_ind(h);
        CHECK(lifted.edge_count() == 2);  // verticals only
    }
    SUBCASE("a 3-partition gives an independent level set of size n") {
        Graph k3(3, 2, {{1, 2}, {1, 3}, {2, 3}});
        Hypergraph h = rho_3par(k3);
        auto part = solvers::rainbow_partition(h);
        REQUIRE(part);
        Hypergraph lifted = rho_ind(h);
        std::set<int> s;
        for (int v = 1; v <= h.n(); ++v) s.insert(3 * (v - 1) + part->color(v));
        for (const auto& e : lifted.edges()) {
            bool inside = true;
            for (int v : e)
                if (!s.count(v)) inside = false;
            CHECK(!inside);
        }
        CHECK(static_cast<int>(s.size()) == h.n());
    }
    SUBCASE("non-3-uniform input rejected") {
        Hypergraph h(4, 5, 1, {{1, 2, 3, 4}});
        CHECK_THROWS_AS(rho_ind(h), DomainError);
    }
}

namespace {

// Full row-by-row agreement between an adapter and the materialized target.
void check_oracle_matches(IncidenceOracle& adapter, const Hypergraph& target) {
    REQUIRE(adapter.n() == target.n());
    HypergraphOracle expected(target);
    for (int v = 1; v <= target.n(); ++v) {
        for (int j = 1; j <= std::min(adapter.delta(), target.delta_bound()); ++j)
            CHECK(adapter.query(v, j) == expected.query(v, j));
        for (int j = target.delta_bound() + 1; j <= adapter.delta(); ++j)
            CHECK(is_dummy(adapter.query(v, j)));
    }
}

void check_oracle_matches_graph(IncidenceOracle& adapter, const Graph& target) {
    REQUIRE(adapter.n() == target.n());
    GraphOracle expected(target);
    for (int v = 1; v <= target.n(); ++v) {
        for (int j = 1; j <= std::min(adapter.delta(), target.delta_bound()); ++j)
            CHECK(adapter.query(v, j) == expected.query(v, j));
        for (int j = target.delta_bound() + 1; j <= adapter.delta(); ++j)
            CHECK(is_dummy(adapter.query(v, j)));
    }
}

}  // namespace

TEST_CASE("rho_3par adapter agrees with the materialization") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = generators::random_bounded_graph(12, 3, 14, sub_seed(3, "a3par", seed));
        GraphOracle base(g);
        Rho3ParAdapter adapter(base);
        check_oracle_matches(adapter, rho_3par(g));
    }
    SUBCASE("apex query costs exactly one base query") {
        Graph k3(3, 2, {{1, 2}, {1, 3}, {2, 3}});
        GraphOracle base(k3);
        Rho3ParAdapter adapter(base);
        CHECK(adapter.query(4, 1) == QueryAnswer{1, 2, 4});
        CHECK(base.count() == 1);
        CHECK(adapter.count() == 1);
        adapter.query(7, 1);  // apex of edge (2,3)
        CHECK(base.count() == 2);
    }
}

TEST_CASE("gaifman adapter agrees with the materialization on 50 random instances") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Hypergraph h = generators::random_bounded_hypergraph(
            12, 3, 3, 10, sub_seed(3, "agaif", seed));
        HypergraphOracle base(h);
        GaifmanAdapter adapter(base);
        check_oracle_matches_graph(adapter, gaifman(h));
    }
}

TEST_CASE("rho_ind adapter agrees with the materialization") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Hypergraph h = generators::random_bounded_hypergraph(
            10, 3, 3, 8, sub_seed(3, "aind", seed));
        HypergraphOracle base(h);
        RhoIndAdapter adapter(base);
        check_oracle_matches(adapter, rho_ind(h));
        CHECK(adapter.delta() == h.delta_bound() + 1);
    }
}

TEST_CASE("make_local_adapter dispatch") {
    Hypergraph h(3, 3, 1, {{1, 2, 3}});
    HypergraphOracle base(h);
    CHECK(make_local_adapter(ReductionKind::RhoParTw, base)->arity() == 2);
    CHECK(make_local_adapter(ReductionKind::RhoInd, base)->arity() == 3);
    CHECK_THROWS_AS(make_local_adapter(ReductionKind::RhoKPar, base), CapacityError);
    CHECK_THROWS_AS(make_local_adapter(ReductionKind::Rho3Col, base), CapacityError);
}

namespace {

CnfFormula two_clause_formula() { return CnfFormula(3, {{1, 2, 3}, {-1, -2, -3}}); }

}  // namespace

TEST_CASE("rho_3col layout matches the construction arithmetic") {
    CnfFormula f = two_clause_formula();  // (3,1)-regular, n=3, m=2
    auto pool = generators::random_regular_expander(24, 4, 99);
    auto red = rho_3col(f, pool.graph);
    CHECK(red.schema.d == 1);
    CHECK(red.schema.copy_count() == 12);   // 4*d*n literal vertices
    CHECK(red.schema.pool() == 24);          // 8*d*n per family
    CHECK(red.h.k() == 3);
    // declared degree bound is respected and near-tight
    int max_deg = 0;
    for (int v = 1; v <= red.h.n(); ++v) max_deg = std::max(max_deg, red.h.degree(v));
    CHECK(max_deg <= red.h.delta_bound());
    CHECK(red.h.delta_bound() - max_deg <= 2);
    // every literal copy sits in exactly one clause gadget copy-edge
    for (int lit = 1; lit <= 6; ++lit)
        for (int c = 1; c <= 2; ++c) {
            int copies_in_clause_edges = 0;
            int v = red.schema.copy_id(lit, c);
            for (const auto& g : red.gadget_list) {
                if (g.kind != gadgets::GadgetKind::Clause) continue;
                for (int a : g.anchors)
                    if (a == v) ++copies_in_clause_edges;
            }
            CHECK(copies_in_clause_edges == 1);
        }
}

TEST_CASE("rho_3col satisfiable side: constructed coloring validates") {
    CnfFormula f = two_clause_formula();
    auto pool = generators::random_regular_expander(24, 4, 99);
    auto red = rho_3col(f, pool.graph);
    auto sigma = brute_force_sat(f);
    REQUIRE(sigma);
    Coloring col = coloring_from_assignment(red, *sigma);
    CHECK(solvers::count_violations(red.h, col, solvers::PropertyKind::WeakColorable) == 0);
    // certified search also finds a coloring and validates it internally
    CHECK(certified_weak_coloring(red).has_value());
}

TEST_CASE("rho_3col adapter agrees with the materialization") {
    for (int c : {1, 2}) {
        CnfFormula f = c == 1 ? two_clause_formula()
                              : generators::random_kc_cnf(3, 2, 505);
        auto pool = generators::random_regular_expander(8 * c * 3, 4, 77);
        auto red = rho_kcol(f, 3, pool.graph);
        CnfIncidenceOracle base(f);
        Rho3ColAdapter adapter(base, 3, pool.graph);
        REQUIRE(adapter.n() == red.h.n());
        REQUIRE(adapter.delta() == red.h.delta_bound());
        HypergraphOracle expected(red.h);
        Rng rng(31337);
        for (int q = 0; q < 4000; ++q) {
            int v = static_cast<int>(rng.next_int(1, red.h.n()));
            int j = static_cast<int>(rng.next_int(1, red.h.delta_bound()));
            std::uint64_t before = base.count();
            CHECK(adapter.query(v, j) == expected.query(v, j));
            CHECK(base.count() - before <= 3);
        }
    }
}

TEST_CASE("rho_kcol k=4 output is weakly 4-colorable iff the formula is satisfiable") {
    CnfFormula f = two_clause_formula();
    auto pool = generators::random_regular_expander(24, 4, 99);
    auto red = rho_kcol(f, 4, pool.graph);
    CHECK(red.h.k() == 4);
    auto sigma = brute_force_sat(f);
    REQUIRE(sigma);
    Coloring col = coloring_from_assignment(red, *sigma);
    CHECK(solvers::count_violations(red.h, col, solvers::PropertyKind::WeakColorable) == 0);
    CHECK(certified_weak_coloring(red).has_value());
    CHECK_THROWS_AS(rho_kcol(f, 5, pool.graph), CapacityError);
}

TEST_CASE("gap constants") {
    Graph g(4, 3, {{1, 2}, {3, 4}});
    CHECK(rho_3par_gap_constant(g) == Rational(4));
    Hypergraph h(3, 4, 3, {{1, 2, 3}});
    CHECK(rho_ind_gap_constant(h) == Rational(36));
}
