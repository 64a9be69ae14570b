#include <sstream>

#include "doctest.h"
#include "hpt/errors.hpp"
#include "hpt/hypergraph.hpp"
#include "hpt/io.hpp"
#include "hpt/oracle.hpp"
#include "hpt/rational.hpp"
#include "hpt/rng.hpp"

using namespace hpt;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7, 8).str() == "7/8");
    CHECK(Rational(4, 2).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("hypergraph construction validates invariants") {
    CHECK_NOTHROW(Hypergraph(3, 4, 2, {{1, 2, 3}, {1, 2, 4}}));
    CHECK_THROWS_AS(Hypergraph(3, 4, 2, {{1, 2, 2}}), DomainError);   // repeat
    CHECK_THROWS_AS(Hypergraph(3, 4, 2, {{1, 2, 5}}), DomainError);   // range
    CHECK_THROWS_AS(Hypergraph(3, 4, 2, {{1, 2}}), DomainError);      // arity
    CHECK_THROWS_AS(Hypergraph(3, 4, 1, {{1, 2, 3}, {1, 2, 4}}), DomainError);  // degree
    CHECK_THROWS_AS(Hypergraph(3, 4, 2, {{1, 2, 3}, {1, 2, 3}}), DomainError);  // dup
    CHECK_NOTHROW(Hypergraph(3, 4, 2, {{1, 2, 3}, {1, 2, 3}}, true));
    // edges stored sorted ascending
    Hypergraph h(3, 4, 2, {{3, 1, 2}});
    CHECK(h.edges()[0] == std::vector<int>{1, 2, 3});
}

TEST_CASE("build_adjacency pads rows with the dummy slot") {
    SUBCASE("single edge touches all") {
        Hypergraph h(3, 3, 2, {{1, 2, 3}});
        auto rows = build_adjacency(h);
        for (int v = 0; v < 3; ++v) CHECK(rows[static_cast<std::size_t>(v)] == std::vector<int>{0, kNoEdge});
    }
    SUBCASE("empty hypergraph") {
        Hypergraph h(3, 4, 2, {});
        auto rows = build_adjacency(h);
        for (const auto& row : rows) CHECK(row == std::vector<int>{kNoEdge, kNoEdge});
    }
    SUBCASE("global order is the edge sequence") {
        Hypergraph h(3, 4, 2, {{1, 2, 3}, {1, 2, 4}});
        auto rows = build_adjacency(h);
        CHECK(rows[0] == std::vector<int>{0, 1});
        CHECK(rows[2] == std::vector<int>{0, kNoEdge});
        CHECK(rows[3] == std::vector<int>{1, kNoEdge});
    }
    SUBCASE("non-dummy entries precede dummies") {
        Hypergraph h(3, 6, 3, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}});
        for (const auto& row : build_adjacency(h)) {
            bool seen_dummy = false;
            for (int e : row) {
                if (e == kNoEdge) seen_dummy = true;
                else CHECK(!seen_dummy);
            }
        }
    }
}

TEST_CASE("hyper_distance matches the slot-normalized symmetric difference") {
    Hypergraph h1(3, 3, 1, {{1, 2, 3}});
    CHECK(hyper_distance(h1, h1, 1) == Rational(0));
    Hypergraph empty(3, 3, 1, {});
    CHECK(hyper_distance(h1, empty, 1) == Rational(1, 3));
    Hypergraph a(3, 4, 2, {{1, 2, 3}, {1, 2, 4}});
    Hypergraph b(3, 4, 2, {{1, 2, 3}, {2, 3, 4}});
    CHECK(hyper_distance(a, b, 2) == Rational(1, 4));
    Hypergraph other_n(3, 5, 2, {});
    CHECK_THROWS_AS(hyper_distance(a, other_n, 2), DomainError);
}

TEST_CASE("hyper_distance is a metric on all 3-uniform hypergraphs with n=4") {
    // Exhaustive: all 16 subsets of the 4 triples.
    std::vector<std::vector<int>> triples = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    std::vector<Hypergraph> all;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<std::vector<int>> edges;
        for (int i = 0; i < 4; ++i)
            if (mask & (1 << i)) edges.push_back(triples[static_cast<std::size_t>(i)]);
        all.emplace_back(3, 4, 3, edges);
    }
    for (const auto& x : all)
        for (const auto& y : all) {
            Rational dxy = hyper_distance(x, y, 3);
            CHECK(dxy == hyper_distance(y, x, 3));
            CHECK((dxy == Rational(0)) == (x.edges() == y.edges()));
            for (const auto& z : all)
                CHECK(hyper_distance(x, z, 3) <= dxy + hyper_distance(y, z, 3));
        }
}

TEST_CASE("gaifman graph joins co-occurring pairs") {
    SUBCASE("single hyperedge is a clique") {
        Graph g = gaifman(Hypergraph(3, 3, 1, {{1, 2, 3}}));
        CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
        CHECK(g.delta_bound() == 2);
    }
    SUBCASE("empty") {
        Graph g = gaifman(Hypergraph(3, 4, 1, {}));
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("shared pair deduplicated") {
        Graph g = gaifman(Hypergraph(3, 4, 2, {{1, 2, 3}, {2, 3, 4}}));
        CHECK(g.edges() ==
              std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
    }
    SUBCASE("edge count bound 3|E(H)| for k=3") {
        Hypergraph h(3, 6, 3, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}});
        CHECK(gaifman(h).edge_count() <= 3 * h.edge_count());
    }
}

TEST_CASE("induced subhypergraph keeps inside edges and relabels") {
    Hypergraph h(3, 4, 2, {{1, 2, 3}, {2, 3, 4}});
    SUBCASE("empty set") {
        auto sub = induced_subhypergraph(h, {});
        CHECK(sub.hypergraph.n() == 0);
        CHECK(sub.hypergraph.edge_count() == 0);
    }
    SUBCASE("full set is identity") {
        auto sub = induced_subhypergraph(h, {1, 2, 3, 4});
        CHECK(sub.hypergraph == h);
        CHECK(sub.original_ids == std::vector<int>{1, 2, 3, 4});
    }
    SUBCASE("proper subset") {
        auto sub = induced_subhypergraph(h, {2, 3, 4});
        CHECK(sub.hypergraph.edge_count() == 1);
        CHECK(sub.hypergraph.edges()[0] == std::vector<int>{1, 2, 3});
        CHECK(sub.original_ids == std::vector<int>{2, 3, 4});
    }
    SUBCASE("out of range is an error") {
        CHECK_THROWS_AS(induced_subhypergraph(h, {5}), DomainError);
    }
}

TEST_CASE("simplify collapses multiplicities preserving first occurrence") {
    Hypergraph a(3, 3, 2, {{1, 2, 3}, {1, 2, 3}}, true);
    CHECK(simplify(a).edges() == std::vector<std::vector<int>>{{1, 2, 3}});
    Hypergraph b(3, 4, 2, {}, true);
    CHECK(simplify(b).edge_count() == 0);
    Hypergraph c(3, 4, 3, {{1, 2, 3}, {1, 2, 3}, {2, 3, 4}}, true);
    CHECK(simplify(c).edges() == std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 4}});
    // idempotent
    CHECK(simplify(simplify(c)) == simplify(c));
}

TEST_CASE("hgr round trip is byte-identical for canonical files") {
    Hypergraph h(3, 4, 2, {{1, 2, 3}, {1, 2, 4}});
    std::ostringstream first;
    write_hypergraph(first, h);
    std::istringstream in(first.str());
    Hypergraph parsed = read_hypergraph(in);
    CHECK(parsed == h);
    std::ostringstream second;
    write_hypergraph(second, parsed);
    CHECK(first.str() == second.str());

    std::istringstream with_comments("c a comment\np hgr 3 4 2 1\nc another\n1 2 3\n");
    CHECK(read_hypergraph(with_comments).edge_count() == 1);

    std::istringstream bad("p xyz 1 2 3 4\n");
    CHECK_THROWS_AS(read_hypergraph(bad), ParseError);
    std::istringstream truncated("p hgr 3 4 2 2\n1 2 3\n");
    CHECK_THROWS_AS(read_hypergraph(truncated), ParseError);
}

TEST_CASE("gr and cnf round trips") {
    Graph g(4, 3, {{1, 2}, {2, 3}, {3, 4}});
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    CHECK(read_graph(in) == g);

    CnfFormula f(3, {{1, 2, 3}, {-1, -2, -3}});
    std::ostringstream cnf_out;
    write_dimacs(cnf_out, f);
    std::istringstream cnf_in(cnf_out.str());
    CHECK(read_dimacs(cnf_in) == f);
}

TEST_CASE("oracle answers slot queries and counts them") {
    Hypergraph h(3, 4, 2, {{1, 2, 3}, {1, 2, 4}});
    HypergraphOracle o(h);
    CHECK(o.count() == 0);
    CHECK(o.query(1, 1) == QueryAnswer{1, 2, 3});
    CHECK(o.query(2, 2) == QueryAnswer{1, 2, 4});
    CHECK(is_dummy(o.query(3, 2)));
    CHECK(o.count() == 3);
    o.reset_count();
    CHECK(o.count() == 0);

    SUBCASE("degree-1 vertex at slot 2 answers dummy") {
        Hypergraph single(3, 3, 2, {{1, 2, 3}});
        HypergraphOracle so(single);
        CHECK(is_dummy(so.query(1, 2)));
    }
    SUBCASE("out-of-range queries throw and do not count") {
        CHECK_THROWS_AS(o.query(0, 1), DomainError);
        CHECK_THROWS_AS(o.query(5, 1), DomainError);
        CHECK_THROWS_AS(o.query(1, 0), DomainError);
        CHECK_THROWS_AS(o.query(1, 3), DomainError);
        CHECK(o.count() == 0);
    }
    SUBCASE("replaying a query sequence yields identical answers and counts") {
        HypergraphOracle a(h), b(h);
        for (int v = 1; v <= 4; ++v)
            for (int j = 1; j <= 2; ++j) CHECK(a.query(v, j) == b.query(v, j));
        CHECK(a.count() == b.count());
    }
    SUBCASE("all answers reconstruct build_adjacency") {
        HypergraphOracle fresh(h);
        auto rows = dump_all_rows(fresh);
        auto adj = build_adjacency(h);
        for (int v = 1; v <= h.n(); ++v) {
            for (int j = 1; j <= h.delta_bound(); ++j) {
                int ei = adj[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(j - 1)];
                const auto& ans = rows[static_cast<std::size_t>(v - 1)]
                                      [static_cast<std::size_t>(j - 1)];
                if (ei == kNoEdge) {
                    CHECK(is_dummy(ans));
                } else {
                    CHECK(ans == h.edges()[static_cast<std::size_t>(ei)]);
                }
            }
        }
        CHECK(fresh.count() == static_cast<std::uint64_t>(h.n() * h.delta_bound()));
    }
    SUBCASE("trace log format") {
        std::ostringstream trace;
        HypergraphOracle traced(h);
        traced.set_trace(&trace);
        traced.query(1, 1);
        traced.query(3, 2);
        CHECK(trace.str() == "Q hgr 1 1 -> 1 2 3\nQ hgr 3 2 -> bot\n");
    }
}

TEST_CASE("graph oracle") {
    Graph g(3, 2, {{1, 2}, {1, 3}, {2, 3}});
    GraphOracle o(g);
    CHECK(o.query(2, 1) == QueryAnswer{1, 2});
    CHECK(o.query(2, 2) == QueryAnswer{2, 3});
    CHECK(o.arity() == 2);
}

TEST_CASE("rng is deterministic and sub-seeds are stable") {
    Rng a(123), b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.next_below(1000) == b.next_below(1000));
    CHECK(sub_seed(7, "stage") == sub_seed(7, "stage"));
    CHECK(sub_seed(7, "stage") != sub_seed(7, "other"));
    CHECK(sub_seed(7, "stage", 1) != sub_seed(7, "stage", 2));
    std::vector<int> v1 = {1, 2, 3, 4, 5}, v2 = {1, 2, 3, 4, 5};
    Rng c(9), d(9);
    c.shuffle(v1);
    d.shuffle(v2);
    CHECK(v1 == v2);
}
