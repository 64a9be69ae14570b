#include "hpt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hpt/errors.hpp"
#include "hpt/io.hpp"
#include "hpt/reductions.hpp"
#include "hpt/rho3col.hpp"
#include "hpt/rng.hpp"
#include "hpt/solvers.hpp"
#include "hpt/testers.hpp"

namespace hpt::verify {

namespace {

CheckResult check(const std::string& name, bool pass, const std::string& detail = "") {
    return {name, pass, detail};
}

gadgets::AuxAllocator small_allocator(int k, int pool = 64) {
    return gadgets::AuxAllocator(k, pool, 1001);
}

// Standalone clause-gadget relation over the six copies (pools pinned):
// the all-False tuple is blocked; for k = 3 the copy edges are bare
// not-all-equal triples, so the all-Dummy tuple forces every a to False and
// is blocked too (k > 3 copy edges carry an F pad that breaks that case).
// Inside the reduction, not-dummy gadgets keep copies off Dummy anyway.
std::set<std::vector<int>> clause_relation(int lambda) {
    std::set<std::vector<int>> r;
    std::vector<int> t(6, 1);
    while (true) {
        bool all_false = true, all_dummy = true;
        for (int c : t) {
            if (c != gadgets::kFalse) all_false = false;
            if (c != gadgets::dummy_color(1)) all_dummy = false;
        }
        if (!all_false && !(lambda == 3 && all_dummy)) r.insert(t);
        std::size_t i = t.size();
        while (i > 0 && t[i - 1] == lambda) t[--i] = 1;
        if (i == 0) break;
        ++t[i - 1];
    }
    return r;
}

// Skeleton-last emission order puts the anchors' own hyperedges behind the
// equality blocks; reorder so the search sees them first.
gadgets::ForcingProblem skeleton_first(gadgets::ForcingProblem p, int skeleton_edges) {
    std::vector<std::vector<int>> reordered;
    reordered.insert(reordered.end(), p.edges.end() - skeleton_edges, p.edges.end());
    reordered.insert(reordered.end(), p.edges.begin(), p.edges.end() - skeleton_edges);
    p.edges = std::move(reordered);
    return p;
}

}  // namespace

namespace {

// k=4 inequality verified through its verified equality blocks: enumerate
// anchors and designated vertices exhaustively, consult the flat-search
// equality relation for each block (auxiliaries are block-private, so the
// factorization is exact), and evaluate the two skeleton hyperedges directly.
bool verify_inequality_composed(int k, const std::set<std::vector<int>>& eq_relation) {
    auto alloc = small_allocator(k, 256);
    auto g = gadgets::inequality_gadget(1, 2, alloc, k);
    const int des = k - 2;
    std::vector<int> u_des(g.aux.begin(), g.aux.begin() + des);
    std::vector<int> v_des(g.aux.begin() + des, g.aux.begin() + 2 * des);
    // block privacy: the equality-block auxiliaries partition the rest
    std::set<int> seen(g.aux.begin(), g.aux.begin() + 2 * des);
    for (std::size_t i = static_cast<std::size_t>(2 * des); i < g.aux.size(); ++i)
        if (!seen.insert(g.aux[i]).second) return false;
    const auto& sk1 = g.hyperedges[g.hyperedges.size() - 2];  // {u} + u_des + {v}
    const auto& sk2 = g.hyperedges[g.hyperedges.size() - 1];
    std::set<std::vector<int>> relation;
    std::vector<int> color_of(static_cast<std::size_t>(alloc.vadd_base()) + g.aux.size() + 8, 0);
    const std::int64_t total_des = 2 * des;
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b) {
            color_of[1] = a;
            color_of[2] = b;
            std::vector<int> dc(static_cast<std::size_t>(total_des), 1);
            bool feasible = false;
            while (!feasible) {
                for (int i = 0; i < des; ++i) {
                    color_of[static_cast<std::size_t>(u_des[static_cast<std::size_t>(i)])] =
                        dc[static_cast<std::size_t>(i)];
                    color_of[static_cast<std::size_t>(v_des[static_cast<std::size_t>(i)])] =
                        dc[static_cast<std::size_t>(des + i)];
                }
                bool ok = true;
                for (int i = 0; i < des && ok; ++i) {
                    if (!eq_relation.count({a, dc[static_cast<std::size_t>(i)]})) ok = false;
                    if (!eq_relation.count({b, dc[static_cast<std::size_t>(des + i)]})) ok = false;
                }
                for (const auto* sk : {&sk1, &sk2}) {
                    if (!ok) break;
                    int first = color_of[static_cast<std::size_t>((*sk)[0])];
                    bool mono = true;
                    for (int v : *sk)
                        if (color_of[static_cast<std::size_t>(v)] != first) mono = false;
                    if (mono) ok = false;
                }
                if (ok) feasible = true;
                std::size_t i = dc.size();
                while (i > 0 && dc[i - 1] == k) dc[--i] = 1;
                if (i == 0) break;
                ++dc[i - 1];
            }
            if (feasible) relation.insert({a, b});
        }
    return relation == gadgets::unequal_pair_relation(k);
}

// k=4 clause gadget: same factorization, with the pad's equality tie to a D1
// pool anchor consulted through the verified equality relation.
bool verify_clause_composed(int k, const std::set<std::vector<int>>& eq_relation) {
    auto alloc = small_allocator(k, 256);
    auto g = gadgets::clause_gadget({1, 2, 3, 4, 5, 6}, alloc, k);
    // aux layout: a0 a1 a2, then per pad: pad vertex + its block auxiliaries
    std::vector<int> a = {g.aux[0], g.aux[1], g.aux[2]};
    std::vector<int> pads;
    std::vector<std::set<int>> block_aux_of;
    std::set<int> block_aux;
    std::size_t pos = 3;
    const std::size_t eq_aux = static_cast<std::size_t>(k * k - k - 1);
    for (int i = 0; i < k - 3; ++i) {
        pads.push_back(g.aux[pos]);
        std::set<int> block;
        for (std::size_t j = 0; j < eq_aux; ++j) {
            block.insert(g.aux[pos + 1 + j]);
            block_aux.insert(g.aux[pos + 1 + j]);
        }
        block_aux_of.push_back(std::move(block));
        pos += 1 + eq_aux;
    }
    // direct edges exclude the equality blocks; a block's pool anchor is the
    // D1 vertex its auxiliaries co-occur with (never in the pad's own edges)
    std::vector<std::vector<int>> direct;
    std::vector<int> pad_anchor(pads.size(), 0);
    for (const auto& e : g.hyperedges) {
        bool block_edge = false;
        for (int v : e)
            if (block_aux.count(v)) block_edge = true;
        if (!block_edge) {
            direct.push_back(e);
            continue;
        }
        for (std::size_t i = 0; i < pads.size(); ++i) {
            bool in_block = false;
            for (int v : e)
                if (block_aux_of[i].count(v)) in_block = true;
            if (!in_block) continue;
            for (int v : e)
                if (alloc.family_color(v) == gadgets::dummy_color(1))
                    pad_anchor[static_cast<std::size_t>(i)] = v;
        }
    }
    for (int anchor : pad_anchor)
        if (anchor == 0) return false;

    std::set<std::vector<int>> relation;
    std::vector<int> color_of(static_cast<std::size_t>(alloc.vadd_base()) + g.aux.size() + 8, 0);
    for (int pv : g.pool_used)
        color_of[static_cast<std::size_t>(pv)] = alloc.family_color(pv);
    std::vector<int> tuple(6, 1);
    const int free_count = 3 + static_cast<int>(pads.size());
    while (true) {
        for (int i = 0; i < 6; ++i)
            color_of[static_cast<std::size_t>(i + 1)] = tuple[static_cast<std::size_t>(i)];
        bool feasible = false;
        std::vector<int> fc(static_cast<std::size_t>(free_count), 1);
        while (!feasible) {
            for (int i = 0; i < 3; ++i)
                color_of[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])] =
                    fc[static_cast<std::size_t>(i)];
            bool ok = true;
            for (std::size_t i = 0; i < pads.size() && ok; ++i) {
                int pc = fc[static_cast<std::size_t>(3 + i)];
                color_of[static_cast<std::size_t>(pads[i])] = pc;
                int ac = color_of[static_cast<std::size_t>(pad_anchor[i])];
                if (!eq_relation.count({pc, ac})) ok = false;
            }
            for (const auto& e : direct) {
                if (!ok) break;
                int first = color_of[static_cast<std::size_t>(e[0])];
                bool mono = true;
                for (int v : e)
                    if (color_of[static_cast<std::size_t>(v)] != first) mono = false;
                if (mono) ok = false;
            }
            if (ok) feasible = true;
            std::size_t i = fc.size();
            while (i > 0 && fc[i - 1] == k) fc[--i] = 1;
            if (i == 0) break;
            ++fc[i - 1];
        }
        if (feasible) relation.insert(tuple);
        std::size_t i = tuple.size();
        while (i > 0 && tuple[i - 1] == k) tuple[--i] = 1;
        if (i == 0) break;
        ++tuple[i - 1];
    }
    return relation == clause_relation(k);
}

}  // namespace

std::vector<CheckResult> criterion_gadget_forcing() {
    std::vector<CheckResult> out;
    for (int k : {3, 4}) {
        auto alloc = small_allocator(k, 128);
        auto eq = gadgets::equality_gadget(1, 2, alloc, k);
        std::set<std::vector<int>> eq_relation =
            gadgets::anchor_relation(gadgets::forcing_problem(eq, alloc));
        out.push_back(check("equality forcing k=" + std::to_string(k),
                            eq_relation == gadgets::equal_pair_relation(k),
                            std::to_string(eq.hyperedges.size()) + " hyperedges"));

        if (k == 3) {
            auto ineq = gadgets::inequality_gadget(1, 2, alloc, k);
            out.push_back(check(
                "inequality forcing k=3",
                gadgets::verify_forcing(skeleton_first(gadgets::forcing_problem(ineq, alloc), 2),
                                        gadgets::unequal_pair_relation(k)),
                std::to_string(ineq.hyperedges.size()) + " hyperedges"));
        } else {
            // flat search over the 50-vertex closure multiplies equality-block
            // exhausts; factor through the verified equality relation instead
            out.push_back(check("inequality forcing k=4 (via verified equality blocks)",
                                verify_inequality_composed(k, eq_relation)));
        }

        auto nd = gadgets::not_dummy_gadget(1, alloc, k);
        std::set<std::vector<int>> nd_expected = {{gadgets::kTrue}, {gadgets::kFalse}};
        out.push_back(check("not-dummy forcing k=" + std::to_string(k),
                            gadgets::verify_forcing(gadgets::forcing_problem(nd, alloc),
                                                    nd_expected),
                            std::to_string(nd.hyperedges.size()) + " hyperedges"));

        if (k == 3) {
            auto cg = gadgets::clause_gadget({1, 2, 3, 4, 5, 6}, alloc, k);
            out.push_back(check("clause forcing k=3",
                                gadgets::verify_forcing(gadgets::forcing_problem(cg, alloc),
                                                        clause_relation(k)),
                                std::to_string(cg.hyperedges.size()) + " hyperedges"));
            auto c2 = gadgets::clause_gadget({7, 8, 9, 10}, alloc, k);
            std::set<std::vector<int>> c2_expected;
            for (int t0 = 1; t0 <= 3; ++t0)
                for (int t1 = 1; t1 <= 3; ++t1)
                    for (int t2 = 1; t2 <= 3; ++t2)
                        for (int t3 = 1; t3 <= 3; ++t3)
                            if (!(t0 == gadgets::kFalse && t1 == gadgets::kFalse &&
                                  t2 == gadgets::kFalse && t3 == gadgets::kFalse))
                                c2_expected.insert({t0, t1, t2, t3});
            out.push_back(check("clause forcing k=3 width 2",
                                gadgets::verify_forcing(gadgets::forcing_problem(c2, alloc),
                                                        c2_expected)));
        } else {
            out.push_back(check("clause forcing k=4 (via verified equality blocks)",
                                verify_clause_composed(k, eq_relation)));
        }
    }
    // Exact counts from the construction.
    {
        auto alloc = small_allocator(3);
        auto eq = gadgets::equality_gadget(1, 2, alloc, 3);
        auto ineq = gadgets::inequality_gadget(3, 4, alloc, 3);
        auto cg = gadgets::clause_gadget({11, 12, 13, 14, 15, 16}, alloc, 3);
        out.push_back(check("gadget sizes k=3",
                            eq.hyperedges.size() == 30 && eq.aux.size() == 5 &&
                                ineq.hyperedges.size() == 62 && ineq.aux.size() == 12 &&
                                cg.hyperedges.size() == 7 && cg.aux.size() == 3,
                            "30/62/7 hyperedges, 5/12/3 aux"));
    }
    return out;
}

namespace {

bool graph_three_colorable(const Graph& g) {
    return solvers::graph_coloring(g, 3, solvers::SearchMode::Backtracking).has_value();
}

bool hyper_three_partite(const Hypergraph& h) {
    return solvers::rainbow_partition(h, solvers::SearchMode::Backtracking).has_value();
}

}  // namespace

std::vector<CheckResult> criterion_reduction_equivalences() {
    std::vector<CheckResult> out;
    // All labeled graphs with n <= 6, delta <= 3:
    // 3-colorable(G) <=> 3-partite(rho_3par(G)).
    {
        std::int64_t graphs = 0;
        bool ok = true;
        for (int n = 1; n <= 6 && ok; ++n) {
            std::vector<std::pair<int, int>> pairs;
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
            const std::uint32_t total = 1u << pairs.size();
            for (std::uint32_t mask = 0; mask < total && ok; ++mask) {
                std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
                std::vector<std::pair<int, int>> edges;
                bool fits = true;
                for (std::size_t i = 0; i < pairs.size() && fits; ++i) {
                    if (!(mask & (1u << i))) continue;
                    auto [a, b] = pairs[i];
                    if (++deg[static_cast<std::size_t>(a)] > 3 ||
                        ++deg[static_cast<std::size_t>(b)] > 3)
                        fits = false;
                    edges.push_back(pairs[i]);
                }
                if (!fits) continue;
                Graph g(n, 3, edges);
                ++graphs;
                bool col = graph_three_colorable(g);
                bool par = hyper_three_partite(reductions::rho_3par(g));
                if (col != par) ok = false;
            }
        }
        out.push_back(check("3col(G) <=> 3partite(rho_3par(G)), all n<=6 delta<=3", ok,
                            std::to_string(graphs) + " graphs"));
    }
    // All 3-uniform H with n <= 6, m <= 8:
    // 3-partite(H) <=> 3-colorable(gaifman(H)); 3-partite(H) => alpha >= n.
    {
        std::int64_t hypergraphs = 0;
        bool equiv_ok = true;
        bool alpha_ok = true;
        for (int n = 3; n <= 6 && equiv_ok && alpha_ok; ++n) {
            std::vector<std::vector<int>> triples;
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    for (int c = b + 1; c <= n; ++c) triples.push_back({a, b, c});
            std::vector<int> pick;
            std::vector<std::vector<int>> chosen;
            // DFS over subsets of size <= 8.
            std::vector<std::size_t> stack;
            auto process = [&](const std::vector<std::vector<int>>& edges) {
                int maxdeg = 1;
                std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
                for (const auto& e : edges)
                    for (int v : e) maxdeg = std::max(maxdeg, ++deg[static_cast<std::size_t>(v)]);
                Hypergraph h(3, n, maxdeg, edges);
                ++hypergraphs;
                bool par = hyper_three_partite(h);
                bool col = graph_three_colorable(gaifman(h));
                if (par != col) equiv_ok = false;
                if (par) {
                    auto alpha = solvers::independence_number(reductions::rho_ind(h),
                                                              {1ULL << 25, 100'000'000}, n);
                    if (alpha.size < n) alpha_ok = false;
                }
            };
            // iterative enumeration of subsets of size <= 8 in lex order
            std::vector<std::vector<int>> current;
            std::function<void(std::size_t)> rec = [&](std::size_t from) {
                process(current);
                if (current.size() == 8) return;
                for (std::size_t i = from; i < triples.size(); ++i) {
                    if (!(equiv_ok && alpha_ok)) return;
                    current.push_back(triples[i]);
                    rec(i + 1);
                    current.pop_back();
                }
            };
            rec(0);
        }
        out.push_back(check("3partite(H) <=> 3col(gaifman(H)), all n<=6 m<=8", equiv_ok,
                            std::to_string(hypergraphs) + " hypergraphs"));
        out.push_back(check("3partite(H) => alpha(rho_ind(H)) >= n, all n<=6 m<=8", alpha_ok));
    }
    return out;
}

namespace {

struct GapStats {
    int checked = 0;
    int nonzero = 0;
    bool ok = true;
    std::string fail_detail;
};

}  // namespace

std::vector<CheckResult> criterion_gap_inequalities() {
    std::vector<CheckResult> out;
    const std::uint64_t master = 20260809;

    // rho_3par: d(G,3col) <= (d+1) * d(rho_3par(G),3partite), exact rationals.
    {
        GapStats st;
        for (int i = 0; i < 200; ++i) {
            int n = 4 + i % 7;  // 4..10
            Graph g = generators::random_bounded_graph(
                n, 3, 1 + static_cast<int>(sub_seed(master, "gap-3par-m", i) % (2 * n)),
                sub_seed(master, "gap-3par", i));
            Rational lhs = solvers::distance_to_property(
                g, solvers::PropertySpec::graph_colorable(3));
            Rational rhs = solvers::distance_to_property(reductions::rho_3par(g),
                                                         solvers::PropertySpec::k_partite());
            ++st.checked;
            if (lhs > Rational(0)) ++st.nonzero;
            if (!(lhs <= reductions::rho_3par_gap_constant(g) * rhs)) {
                st.ok = false;
                st.fail_detail = "seed index " + std::to_string(i) + ": " + lhs.str() +
                                 " > (d+1)*" + rhs.str();
                break;
            }
        }
        out.push_back(check("gap rho_3par: d(G,3col) <= (d+1)*d(H,3par) on 200 instances", st.ok,
                            st.ok ? "c2 = d+1 = 4; " + std::to_string(st.nonzero) +
                                        " instances with nonzero distance"
                                  : st.fail_detail));
    }

    // rho_ind: d(H,3par) <= 9(d+1) * d(rho_ind(H), alpha >= n). This bound is
    // FALSE in general: the lifted instance admits an independent set of two
    // level copies per vertex of any independent set of H, so alpha(H') >= n
    // (right side zero) whenever alpha(H) >= n/2 — which sparse instances
    // always satisfy — while H itself can be far from 3-partite. The check is
    // kept faithful to the stated bound and reports the counterexamples.
    {
        GapStats st;
        int counterexamples = 0;
        std::string first_cx;
        for (int i = 0; i < 200; ++i) {
            int n = 4 + i % 4;  // 4..7 (subset oracle enumerates C(3n, n))
            Hypergraph h = generators::random_bounded_hypergraph(
                n, 3, 3, 1 + static_cast<int>(sub_seed(master, "gap-ind-m", i) % n),
                sub_seed(master, "gap-ind", i));
            Rational lhs = solvers::distance_to_property(h, solvers::PropertySpec::k_partite());
            Rational rhs = solvers::distance_to_property(
                reductions::rho_ind(h), solvers::PropertySpec::independence_at_least(n),
                {1ULL << 26, 100'000'000});
            ++st.checked;
            if (lhs > Rational(0)) ++st.nonzero;
            if (!(lhs <= reductions::rho_ind_gap_constant(h) * rhs)) {
                st.ok = false;
                if (counterexamples == 0)
                    first_cx = "first at seed index " + std::to_string(i) + ": " + lhs.str() +
                               " > 36 * " + rhs.str() +
                               " (alpha(H') >= n certified by the subset oracle)";
                ++counterexamples;
            }
        }
        out.push_back(check(
            "gap rho_ind: d(H,3par) <= 9(d+1)*d(H',alpha>=n) on 200 instances", st.ok,
            st.ok ? "factor 9(d+1) = 36; " + std::to_string(st.nonzero) +
                        " instances with nonzero distance"
                  : std::to_string(counterexamples) +
                        " counterexamples to the stated bound; " + first_cx));
        // The failure mechanism, pinned as a regression: a complete 3-uniform
        // block plus isolated vertices is far from 3-partite, yet its lift
        // keeps an independent set of size n.
        {
            std::vector<std::vector<int>> edges = {
                {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
            Hypergraph h(3, 10, 3, std::move(edges));
            Rational lhs = solvers::distance_to_property(h, solvers::PropertySpec::k_partite());
            auto alpha = solvers::independence_number(reductions::rho_ind(h),
                                                      {1ULL << 26, 200'000'000}, h.n());
            out.push_back(check("gap rho_ind counterexample mechanism verified",
                                lhs == Rational(1, 15) && alpha.size >= h.n(),
                                "d(H,3par) = " + lhs.str() + ", alpha(rho_ind(H)) >= n"));
        }
    }

    // rho_3col: sat_distance(F) <= c1 * d(H,3col) with c1 = 3*d*delta_H*n_H/m.
    // Random regular formulas (satisfiable at these densities: both sides 0,
    // certified from both routes) plus the canonical one-clause-short UNSAT
    // instance whose hypergraph distance is exactly 1/(delta_H * n_H).
    {
        GapStats st;
        std::string c1_echo;
        for (int i = 0; i < 200 && st.ok; ++i) {
            int n = 3 * (1 + static_cast<int>(sub_seed(master, "gap-3col-n", i) % 3));  // 3,6,9
            int c = 1 + i % 2;
            CnfFormula f = generators::random_kc_cnf(n, c, sub_seed(master, "gap-3col", i));
            Rational lhs = sat_distance(f);
            auto pool = generators::random_regular_expander(8 * c * n, 4,
                                                            sub_seed(master, "gap-3col-exp", i));
            auto red = reductions::rho_3col(f, pool.graph);
            Rational c1 = reductions::rho_3col_gap_constant(red);
            if (i == 0) c1_echo = c1.str();
            auto witness = reductions::certified_weak_coloring(red);
            ++st.checked;
            if (lhs == Rational(0)) {
                // satisfiable: the certified coloring must exist, giving
                // d(H,3col) = 0 and the inequality 0 <= 0 exactly.
                if (!witness) {
                    st.ok = false;
                    st.fail_detail = "satisfiable formula mapped to non-colorable output, i=" +
                                     std::to_string(i);
                }
            } else {
                ++st.nonzero;
                Rational t = lhs * f.clause_count();
                if (t != Rational(1)) {
                    st.ok = false;
                    st.fail_detail = "sampled UNSAT instance needs t=1 analysis, i=" +
                                     std::to_string(i);
                    break;
                }
                // t = 1: non-colorable and one violation achievable, so
                // d(H,3col) = 1/(delta*n) exactly.
                Rational d_exact(1, static_cast<std::int64_t>(red.h.delta_bound()) * red.h.n());
                if (witness || !(lhs <= c1 * d_exact)) {
                    st.ok = false;
                    st.fail_detail = "t=1 instance failed, i=" + std::to_string(i);
                }
            }
        }
        // The canonical UNSAT case: all 8 sign patterns over 3 variables.
        if (st.ok) {
            std::vector<std::vector<int>> clauses;
            for (int mask = 0; mask < 8; ++mask) {
                std::vector<int> cl;
                for (int v = 1; v <= 3; ++v) cl.push_back((mask >> (v - 1)) & 1 ? -v : v);
                clauses.push_back(std::move(cl));
            }
            CnfFormula f8(3, std::move(clauses));
            Rational lhs = sat_distance(f8);
            auto pool = generators::random_regular_expander(8 * 4 * 3, 4,
                                                            sub_seed(master, "gap-3col-f8", 0));
            auto red = reductions::rho_3col(f8, pool.graph);
            Rational c1 = reductions::rho_3col_gap_constant(red);
            auto witness = reductions::certified_weak_coloring(red);
            auto best = brute_force_sat(f8);
            bool unsat_ok = !witness && !best && lhs == Rational(1, 8);
            // One violation is achievable: color by a 7/8 assignment.
            std::vector<bool> sigma = {false, false, false};
            int best_sat = 0;
            for (int mask = 0; mask < 8; ++mask) {
                std::vector<bool> a = {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
                int sat = count_satisfied(f8, a);
                if (sat > best_sat) {
                    best_sat = sat;
                    sigma = a;
                }
            }
            Coloring near = reductions::coloring_from_assignment_allow_violations(red, sigma);
            int violations = solvers::count_violations(red.h, near,
                                                       solvers::PropertyKind::WeakColorable);
            Rational d_exact(violations,
                             static_cast<std::int64_t>(red.h.delta_bound()) * red.h.n());
            bool gap_ok = violations == 1 && lhs <= c1 * d_exact;
            st.ok = unsat_ok && gap_ok;
            if (!st.ok) st.fail_detail = "all-patterns instance failed";
            ++st.checked;
            ++st.nonzero;
            c1_echo += " (all-patterns c1 = " + c1.str() + ")";
        }
        out.push_back(check("gap rho_3col: sat_distance(F) <= c1*d(H,3col) on 201 instances",
                            st.ok,
                            st.ok ? "c1 = 3*d_SAT*delta_H*n_H/m, first = " + c1_echo
                                  : st.fail_detail));
    }
    return out;
}

std::vector<CheckResult> criterion_locality() {
    std::vector<CheckResult> out;
    const std::uint64_t master = 481516;
    const std::vector<int> sizes = {60, 120, 240};

    for (auto [kind, name] : {std::pair{testers::AdapterKind::Rho3Par, "rho_3par"},
                              {testers::AdapterKind::RhoParTw, "rho_par_tw"},
                              {testers::AdapterKind::RhoInd, "rho_ind"},
                              {testers::AdapterKind::Rho3Col, "rho_3col"}}) {
        auto table = testers::measure_locality(kind, sizes, master);
        out.push_back(check(std::string("locality ") + name +
                                ": equal max overhead across n",
                            table.uniform(), table.str()));
    }
    // apex queries resolve with exactly one base query
    {
        bool apex_ok = true;
        for (int n : sizes) {
            Graph g = generators::random_bounded_graph(n, 3, (5 * n) / 4,
                                                       sub_seed(master, "loc-apex", n));
            GraphOracle base(g);
            reductions::Rho3ParAdapter adapter(base);
            Rng rng(sub_seed(master, "loc-apex-q", n));
            for (int q = 0; q < 500; ++q) {
                int v = n + 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(3 * n)));
                std::uint64_t before = base.count();
                adapter.query(v, 1);
                if (base.count() - before != 1) apex_ok = false;
            }
        }
        out.push_back(check("locality rho_3par: apex queries cost exactly 1 base query", apex_ok));
    }
    return out;
}

std::vector<CheckResult> criterion_simplicity() {
    const std::uint64_t master = 5150;
    bool ok3 = true, ok4 = true;
    for (int i = 0; i < 1000; ++i) {
        int n = 6 + static_cast<int>(sub_seed(master, "simp-n", i) % 25);
        Graph g = generators::random_bounded_graph(
            n, 3, 1 + static_cast<int>(sub_seed(master, "simp-m", i) % (3 * n / 2)),
            sub_seed(master, "simplicity", i));
        for (int k : {3, 4}) {
            Hypergraph h = k == 3 ? reductions::rho_3par(g) : reductions::rho_kpar(g, 4);
            std::set<std::pair<int, int>> pairs;
            bool simple = true;
            for (const auto& e : h.edges()) {
                for (std::size_t a = 0; a < e.size() && simple; ++a)
                    for (std::size_t b = a + 1; b < e.size() && simple; ++b)
                        if (!pairs.insert({e[a], e[b]}).second) simple = false;
            }
            if (!simple) (k == 3 ? ok3 : ok4) = false;
        }
    }
    return {check("simplicity: rho_3par outputs, 1000 seeded graphs", ok3),
            check("simplicity: rho_kpar (k=4) outputs, 1000 seeded graphs", ok4)};
}

std::vector<CheckResult> criterion_rho3col_soundness() {
    std::vector<CheckResult> out;
    const std::uint64_t master = 314159;
    // UNSAT side: all 8 sign patterns, (3,4)-regular, max-sat 7/8.
    {
        std::vector<std::vector<int>> clauses;
        for (int mask = 0; mask < 8; ++mask) {
            std::vector<int> cl;
            for (int v = 1; v <= 3; ++v) cl.push_back((mask >> (v - 1)) & 1 ? -v : v);
            clauses.push_back(std::move(cl));
        }
        CnfFormula f8(3, std::move(clauses));
        bool regular = validate_kc(f8, 3, 4);
        bool unsat = !brute_force_sat(f8).has_value();
        bool seven_eighths = max_sat_fraction(f8) == Rational(7, 8);
        auto pool = generators::random_regular_expander(96, 4, sub_seed(master, "f8-pool", 0));
        auto red = reductions::rho_3col(f8, pool.graph);
        auto witness = reductions::certified_weak_coloring(red, 100'000'000);
        out.push_back(check("rho_3col soundness: (3,4) all-patterns instance certified "
                            "non-3-colorable",
                            regular && unsat && seven_eighths && !witness,
                            "n_H=" + std::to_string(red.h.n()) +
                                ", m_H=" + std::to_string(red.h.edge_count())));
    }
    // SAT side: (3,1)-regular formula with a validated constructed coloring.
    {
        CnfFormula f(3, {{1, 2, 3}, {-1, -2, -3}});
        bool regular = validate_kc(f, 3, 1);
        auto sigma = brute_force_sat(f);
        auto pool = generators::random_regular_expander(24, 4, sub_seed(master, "sat-pool", 0));
        auto red = reductions::rho_3col(f, pool.graph);
        bool constructed = false;
        if (sigma) {
            Coloring col = reductions::coloring_from_assignment(red, *sigma);
            constructed = solvers::count_violations(red.h, col,
                                                    solvers::PropertyKind::WeakColorable) == 0;
        }
        auto witness = reductions::certified_weak_coloring(red);
        out.push_back(check("rho_3col completeness: satisfiable (3,1)-CNF maps to validated "
                            "3-colorable output",
                            regular && sigma.has_value() && constructed && witness.has_value(),
                            "n_H=" + std::to_string(red.h.n())));
    }
    return out;
}

std::vector<CheckResult> criterion_appendix_b() {
    std::vector<CheckResult> out;
    const std::uint64_t master = 271828;
    // Degree exactness + E[X_S] at (n,d,s) = (9,2,4), expected 2/7.
    {
        const int n = 9, d = 2, samples = 100000;
        bool degrees_ok = true;
        std::int64_t sum = 0;
        double sum_sq = 0;
        for (int i = 0; i < samples; ++i) {
            Hypergraph h = generators::sample_appendix_b(n, d, sub_seed(master, "exs", i));
            std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
            for (const auto& e : h.edges())
                for (int v : e) ++deg[static_cast<std::size_t>(v)];
            for (int v = 1; v <= n; ++v)
                if (deg[static_cast<std::size_t>(v)] != d) degrees_ok = false;
            int inside = 0;
            for (const auto& e : h.edges())
                if (e[2] <= 4) ++inside;  // edges within S = {1,2,3,4}
            sum += inside;
            sum_sq += static_cast<double>(inside) * inside;
        }
        double mean = static_cast<double>(sum) / samples;
        double var = sum_sq / samples - mean * mean;
        double se = std::sqrt(var / samples);
        double expected = 2.0 / 7.0;
        bool within = std::abs(mean - expected) <= 3 * se;
        std::ostringstream detail;
        detail << "mean=" << mean << " expected=" << expected << " se=" << se;
        out.push_back(check("appendix-b: degree exactness on 1e5 samples", degrees_ok));
        out.push_back(check("appendix-b: E[X_S] within 3 standard errors of 2/7", within,
                            detail.str()));
    }
    // Multi-edge rate strictly decreasing over n in {30, 90, 300} at d=3.
    {
        std::vector<double> rates;
        for (int n : {30, 90, 300}) {
            const int samples = 10000;
            int with_multi = 0;
            for (int i = 0; i < samples; ++i) {
                Hypergraph h = generators::sample_appendix_b(n, 3,
                                                             sub_seed(master, "multi", 1000 * n + i));
                std::set<std::vector<int>> seen;
                bool multi = false;
                for (const auto& e : h.edges())
                    if (!seen.insert(e).second) {
                        multi = true;
                        break;
                    }
                if (multi) ++with_multi;
            }
            rates.push_back(static_cast<double>(with_multi) / samples);
        }
        bool decreasing = rates[0] > rates[1] && rates[1] > rates[2];
        std::ostringstream detail;
        detail << "rates " << rates[0] << " > " << rates[1] << " > " << rates[2];
        out.push_back(check("appendix-b: multi-edge rate strictly decreasing over n=30,90,300",
                            decreasing, detail.str()));
    }
    return out;
}

std::vector<CheckResult> criterion_csp_construction() {
    std::vector<CheckResult> out;
    const std::uint64_t master = 1618;
    // build_fn over exhaustively verified expanders with n <= 6 is UNSAT;
    // every constraint and constraint pair is satisfiable.
    {
        bool unsat_ok = true, single_ok = true, pair_ok = true;
        for (int n : {4, 6}) {
            auto exp = generators::random_regular_expander(n, 3, sub_seed(master, "fn-exp", n));
            if (exp.certificate != generators::ExpanderCertificate::Exhaustive) unsat_ok = false;
            auto csp = generators::build_fn(exp);
            if (csp_brute_force(csp).has_value()) unsat_ok = false;
            // single constraints and pairs, brute forced over their variables
            auto subset_satisfiable = [&](const std::vector<int>& which) {
                std::set<int> vars;
                for (int ci : which) {
                    const auto& con = csp.constraints[static_cast<std::size_t>(ci)];
                    vars.insert(con.x_vars.begin(), con.x_vars.end());
                    vars.insert(con.y_vars.begin(), con.y_vars.end());
                }
                std::vector<int> var_list(vars.begin(), vars.end());
                std::vector<bool> assignment(static_cast<std::size_t>(csp.var_count), false);
                const std::uint64_t total = 1ULL << var_list.size();
                for (std::uint64_t mask = 0; mask < total; ++mask) {
                    for (std::size_t i = 0; i < var_list.size(); ++i)
                        assignment[static_cast<std::size_t>(var_list[i] - 1)] =
                            ((mask >> i) & 1ULL) != 0;
                    bool all = true;
                    for (int ci : which)
                        if (!generators::constraint_satisfied(
                                csp.constraints[static_cast<std::size_t>(ci)], assignment)) {
                            all = false;
                            break;
                        }
                    if (all) return true;
                }
                return false;
            };
            for (std::size_t i = 0; i < csp.constraints.size(); ++i)
                if (!subset_satisfiable({static_cast<int>(i)})) single_ok = false;
            for (std::size_t i = 0; i < csp.constraints.size(); ++i)
                for (std::size_t j = i + 1; j < csp.constraints.size(); ++j)
                    if (!subset_satisfiable({static_cast<int>(i), static_cast<int>(j)}))
                        pair_ok = false;
        }
        out.push_back(check("f_n UNSAT over exhaustively verified expanders (n=4,6)", unsat_ok));
        out.push_back(check("f_n: every single constraint satisfiable", single_ok));
        out.push_back(check("f_n: every constraint pair satisfiable", pair_ok));
    }
    // csp_to_3cnf equisatisfiability at d=2 by truth-table projection.
    {
        generators::CspInstance toy;
        toy.d = 2;
        toy.var_count = 4;
        toy.constraints.push_back({1, {1, 2}, {3, 4}});
        CnfFormula cnf = generators::csp_to_3cnf(toy);
        bool projection_ok = true;
        for (int mask = 0; mask < 16; ++mask) {
            std::vector<bool> inputs = {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0,
                                        (mask & 8) != 0};
            bool h_val = generators::constraint_satisfied(toy.constraints[0], inputs);
            // extendable iff some aux completion satisfies the CNF
            std::vector<std::vector<int>> forced = cnf.clauses();
            for (int v = 1; v <= 4; ++v)
                forced.push_back({inputs[static_cast<std::size_t>(v - 1)] ? v : -v});
            CnfFormula pinned(cnf.var_count(), std::move(forced));
            bool extendable = dpll_sat(pinned).has_value();
            if (extendable != h_val) projection_ok = false;
        }
        out.push_back(check("csp_to_3cnf: d=2 truth-table projection equals h", projection_ok,
                            std::to_string(cnf.var_count()) + " vars, " +
                                std::to_string(cnf.clause_count()) + " clauses"));
    }
    // Pipeline UNSAT carries through the encoding (K4 instance), and a
    // satisfiable toy CSP stays satisfiable.
    {
        auto exp = generators::random_regular_expander(4, 3, sub_seed(master, "k4", 0));
        auto cnf = generators::csp_to_3cnf(generators::build_fn(exp));
        bool k4_unsat = !dpll_sat(cnf).has_value();
        generators::CspInstance toy;
        toy.d = 1;
        toy.var_count = 2;
        toy.constraints.push_back({1, {1}, {2}});
        bool toy_sat = dpll_sat(generators::csp_to_3cnf(toy)).has_value();
        out.push_back(check("csp_to_3cnf: f_4 encoding UNSAT, satisfiable toy stays SAT",
                            k4_unsat && toy_sat));
    }
    return out;
}

std::vector<CheckResult> criterion_tester() {
    std::vector<CheckResult> out;
    const std::uint64_t master = 42424242;
    testers::TesterConfig cfg;
    cfg.epsilon = Rational(1, 20);

    // Perfect completeness: 1e4 runs over YES instances.
    {
        auto family = [&](std::uint64_t seed) {
            return generators::yes_bounded_tw_family(60, seed).h;
        };
        auto est = testers::estimate_acceptance(family, cfg, 10000, master);
        out.push_back(check("tester: 0 rejections over 1e4 YES runs",
                            est.frequency == Rational(1),
                            "accepted " + std::to_string(est.accepted) + "/10000"));
    }
    // Far family: rejection frequency >= 2/3 over 100 seeds at eps = 0.05.
    {
        Hypergraph far = generators::far_bounded_tw_family(120);
        int rejections = 0;
        for (int i = 0; i < 100; ++i) {
            HypergraphOracle oracle(far);
            auto report = testers::ball_tester_kpartite(oracle, cfg, sub_seed(master, "far", i));
            if (!report.accept) ++rejections;
        }
        Rational dist = solvers::distance_to_property(far, solvers::PropertySpec::k_partite());
        out.push_back(check("tester: far family rejected >= 2/3 of 100 seeds",
                            rejections * 3 >= 200 && dist == Rational(1, 6),
                            std::to_string(rejections) + "/100 rejections, distance " +
                                dist.str() + " > eps = 1/20"));
    }
    // Query counts equal between n = 120 and n = 480, same cfg and seeds.
    {
        Hypergraph far120 = generators::far_bounded_tw_family(120);
        Hypergraph far480 = generators::far_bounded_tw_family(480);
        bool equal = true;
        std::uint64_t q0 = 0;
        for (int i = 0; i < 100; ++i) {
            HypergraphOracle o120(far120);
            HypergraphOracle o480(far480);
            auto r120 = testers::ball_tester_kpartite(o120, cfg, sub_seed(master, "qc", i));
            auto r480 = testers::ball_tester_kpartite(o480, cfg, sub_seed(master, "qc", i));
            if (r120.queries_used != r480.queries_used) equal = false;
            if (i == 0) q0 = r120.queries_used;
        }
        out.push_back(check("tester: query counts identical for n=120 and n=480", equal,
                            "first-seed queries = " + std::to_string(q0)));
    }
    return out;
}

std::vector<CheckResult> criterion_determinism() {
    std::vector<CheckResult> out;
    // Seeded generators reproduce byte-identically.
    {
        auto g1 = generators::random_regular_expander(12, 3, 7);
        auto g2 = generators::random_regular_expander(12, 3, 7);
        std::ostringstream s1, s2;
        write_graph(s1, g1.graph);
        write_graph(s2, g2.graph);
        // expansion-1 certificates are only attainable for d+1 > n/2, so the
        // (12,3) instance carries a deterministic spectral certificate while
        // K4 verifies exhaustively
        auto k4 = generators::random_regular_expander(4, 3, 7);
        bool expander_ok =
            s1.str() == s2.str() && g1.certificate == g2.certificate &&
            g1.certificate == generators::ExpanderCertificate::SpectralHeuristic &&
            k4.certificate == generators::ExpanderCertificate::Exhaustive;
        auto h1 = generators::sample_appendix_b(30, 3, 7);
        auto h2 = generators::sample_appendix_b(30, 3, 7);
        std::ostringstream t1, t2;
        write_hypergraph(t1, h1);
        write_hypergraph(t2, h2);
        auto y1 = generators::yes_bounded_tw_family(40, 7);
        auto y2 = generators::yes_bounded_tw_family(40, 7);
        out.push_back(check("determinism: seeded generators byte-identical",
                            expander_ok && t1.str() == t2.str() && y1.h == y2.h));
    }
    // Pipeline manifest replay reproduces the payload.
    {
        auto result = generators::hard_instance_pipeline(
            4, generators::PipelineTarget::ThreeColHypergraph, 7);
        std::ostringstream payload;
        write_hypergraph(payload, result.instance);
        std::string replayed = replay_pipeline(result.manifest);
        out.push_back(check("determinism: pipeline manifest replay byte-identical",
                            payload.str() == replayed,
                            "payload " + std::to_string(payload.str().size()) + " bytes"));
    }
    return out;
}

std::string replay_pipeline(const generators::Manifest& manifest) {
    int n = std::stoi(manifest.get("n"));
    auto target = generators::parse_target(manifest.get("pipeline"));
    if (!target) throw ParseError("replay: bad pipeline target");
    std::uint64_t seed = std::stoull(manifest.get("seed"));
    auto result = generators::hard_instance_pipeline(n, *target, seed);
    std::ostringstream payload;
    write_hypergraph(payload, result.instance);
    return payload.str();
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace hpt::verify
