#include "hpt/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hpt/errors.hpp"

namespace hpt::solvers {

namespace {

enum class EdgeRule { NotAllEqual, AllDistinct };

// One engine drives weak coloring (NotAllEqual), rainbow partitions and
// proper graph coloring (AllDistinct over k-ary resp. 2-ary edges).
struct ColoringProblem {
    int n;
    int lambda;
    EdgeRule rule;
    std::vector<std::vector<int>> edges;  // vertex ids 1..n
    std::vector<int> preset;              // empty, or per-vertex fixed color (0 = free)
    bool break_symmetry = true;

    bool edge_ok(const std::vector<int>& e, const std::vector<int>& colors) const {
        if (rule == EdgeRule::NotAllEqual) {
            int first = colors[static_cast<std::size_t>(e[0] - 1)];
            for (int v : e)
                if (colors[static_cast<std::size_t>(v - 1)] != first) return true;
            return false;
        }
        unsigned mask = 0;
        for (int v : e) {
            unsigned bit = 1u << colors[static_cast<std::size_t>(v - 1)];
            if (mask & bit) return false;
            mask |= bit;
        }
        return true;
    }
};

std::uint64_t pow_clamped(std::uint64_t base, int exp, std::uint64_t clamp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > clamp / base) return clamp + 1;
        r *= base;
    }
    return r;
}

// Lexicographic enumeration over color tuples; returns the first valid one.
std::optional<std::vector<int>> solve_exhaustive(const ColoringProblem& p,
                                                 const SearchLimits& limits) {
    if (pow_clamped(static_cast<std::uint64_t>(p.lambda), p.n, limits.max_states) >
        limits.max_states)
        throw CapacityError("exhaustive coloring: state space over budget");
    std::vector<int> colors(static_cast<std::size_t>(p.n), 1);
    while (true) {
        bool ok = true;
        for (const auto& e : p.edges)
            if (!p.edge_ok(e, colors)) {
                ok = false;
                break;
            }
        if (ok) return colors;
        int i = p.n - 1;
        while (i >= 0 && colors[static_cast<std::size_t>(i)] == p.lambda) {
            colors[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) return std::nullopt;
        ++colors[static_cast<std::size_t>(i)];
    }
}

// Complete backtracking with per-vertex domains and edge propagation.
struct Backtracker {
    const ColoringProblem& p;
    const SearchLimits& limits;
    std::vector<std::vector<int>> incident;  // vertex-1 -> edge indices
    std::vector<int> colors;                 // 0 = unassigned
    std::vector<unsigned> domains;           // bit c = color c+1 allowed
    std::vector<int> edge_assigned;
    std::vector<int> edge_first_color;       // valid when assigned > 0
    std::vector<char> edge_uniform;
    std::vector<unsigned> edge_used;         // AllDistinct: colors present
    std::uint64_t nodes = 0;
    bool preset_conflict = false;

    struct DomainChange {
        int v;
        unsigned removed;
    };

    explicit Backtracker(const ColoringProblem& prob, const SearchLimits& lim)
        : p(prob), limits(lim) {
        incident.resize(static_cast<std::size_t>(p.n));
        for (std::size_t ei = 0; ei < p.edges.size(); ++ei)
            for (int v : p.edges[ei]) incident[static_cast<std::size_t>(v - 1)].push_back(
                static_cast<int>(ei));
        colors.assign(static_cast<std::size_t>(p.n), 0);
        domains.assign(static_cast<std::size_t>(p.n), (1u << p.lambda) - 1u);
        edge_assigned.assign(p.edges.size(), 0);
        edge_first_color.assign(p.edges.size(), 0);
        edge_uniform.assign(p.edges.size(), 1);
        edge_used.assign(p.edges.size(), 0);
        if (!p.preset.empty()) {
            std::vector<DomainChange> keep;  // preset consequences are permanent
            for (int v = 1; v <= p.n; ++v) {
                int c = p.preset[static_cast<std::size_t>(v - 1)];
                if (c == 0) continue;
                if (!(domains[static_cast<std::size_t>(v - 1)] & (1u << (c - 1)))) {
                    preset_conflict = true;
                    return;
                }
                colors[static_cast<std::size_t>(v - 1)] = c;
                if (!apply(v, c, keep)) {
                    preset_conflict = true;
                    return;
                }
            }
        }
    }

    bool remove_color(int v, int c, std::vector<DomainChange>& trail) {
        unsigned bit = 1u << (c - 1);
        std::size_t vi = static_cast<std::size_t>(v - 1);
        if (!(domains[vi] & bit)) return true;
        domains[vi] &= ~bit;
        trail.push_back({v, bit});
        return domains[vi] != 0;
    }

    // Applies the consequences of colors[v]=c. Returns false on dead end.
    // Bookkeeping always runs to completion so unapply stays symmetric.
    bool apply(int v, int c, std::vector<DomainChange>& trail) {
        bool ok = true;
        for (int ei : incident[static_cast<std::size_t>(v - 1)]) {
            const auto& e = p.edges[static_cast<std::size_t>(ei)];
            int k = static_cast<int>(e.size());
            if (p.rule == EdgeRule::AllDistinct) {
                unsigned bit = 1u << (c - 1);
                if (edge_used[static_cast<std::size_t>(ei)] & bit) ok = false;
                edge_used[static_cast<std::size_t>(ei)] |= bit;
                ++edge_assigned[static_cast<std::size_t>(ei)];
                if (ok)
                    for (int u : e)
                        if (colors[static_cast<std::size_t>(u - 1)] == 0 && u != v)
                            if (!remove_color(u, c, trail)) ok = false;
            } else {
                int& cnt = edge_assigned[static_cast<std::size_t>(ei)];
                if (cnt == 0) {
                    edge_first_color[static_cast<std::size_t>(ei)] = c;
                    edge_uniform[static_cast<std::size_t>(ei)] = 1;
                } else if (c != edge_first_color[static_cast<std::size_t>(ei)]) {
                    edge_uniform[static_cast<std::size_t>(ei)] = 0;
                }
                ++cnt;
                if (ok && edge_uniform[static_cast<std::size_t>(ei)]) {
                    if (cnt == k) ok = false;  // monochromatic
                    if (cnt == k - 1) {
                        for (int u : e)
                            if (colors[static_cast<std::size_t>(u - 1)] == 0 && u != v) {
                                if (!remove_color(
                                        u, edge_first_color[static_cast<std::size_t>(ei)], trail))
                                    ok = false;
                                break;
                            }
                    }
                }
            }
        }
        return ok;
    }

    void unapply(int v, int c) {
        (void)c;
        for (int ei : incident[static_cast<std::size_t>(v - 1)]) {
            --edge_assigned[static_cast<std::size_t>(ei)];
            if (p.rule == EdgeRule::AllDistinct) {
                // Recompute from scratch: after a same-color conflict the bit
                // may still be owned by another vertex of the edge.
                unsigned used = 0;
                for (int u : p.edges[static_cast<std::size_t>(ei)]) {
                    int uc = u == v ? 0 : colors[static_cast<std::size_t>(u - 1)];
                    if (uc) used |= 1u << (uc - 1);
                }
                edge_used[static_cast<std::size_t>(ei)] = used;
            } else {
                // Recompute uniformity from scratch; edges are tiny.
                const auto& e = p.edges[static_cast<std::size_t>(ei)];
                int first = 0;
                char uniform = 1;
                for (int u : e) {
                    int uc = u == v ? 0 : colors[static_cast<std::size_t>(u - 1)];
                    if (uc == 0) continue;
                    if (first == 0)
                        first = uc;
                    else if (uc != first)
                        uniform = 0;
                }
                edge_first_color[static_cast<std::size_t>(ei)] = first;
                edge_uniform[static_cast<std::size_t>(ei)] = uniform;
            }
        }
    }

    // Static vertex order; palette symmetry broken by capping fresh colors
    // (disabled when preset colors already pin the palette).
    bool search(int idx, int max_used) {
        while (idx < p.n && colors[static_cast<std::size_t>(idx)] != 0) ++idx;
        if (idx == p.n) return true;
        if (++nodes > limits.node_budget)
            throw CapacityError("backtracking coloring: node budget exceeded");
        std::size_t vi = static_cast<std::size_t>(idx);
        int cap = p.break_symmetry && p.preset.empty() ? std::min(p.lambda, max_used + 1)
                                                       : p.lambda;
        for (int c = 1; c <= cap; ++c) {
            if (!(domains[vi] & (1u << (c - 1)))) continue;
            colors[vi] = c;
            std::vector<DomainChange> trail;
            if (apply(idx + 1, c, trail) && search(idx + 1, std::max(max_used, c))) return true;
            unapply(idx + 1, c);
            for (const auto& ch : trail) domains[static_cast<std::size_t>(ch.v - 1)] |= ch.removed;
            colors[vi] = 0;
        }
        return false;
    }
};

std::optional<std::vector<int>> solve_backtracking(const ColoringProblem& p,
                                                   const SearchLimits& limits) {
    Backtracker bt(p, limits);
    if (bt.preset_conflict) return std::nullopt;
    if (!bt.search(0, 0)) return std::nullopt;
    return bt.colors;
}

std::optional<Coloring> solve(const ColoringProblem& p, SearchMode mode,
                              const SearchLimits& limits) {
    auto result = mode == SearchMode::Exhaustive ? solve_exhaustive(p, limits)
                                                 : solve_backtracking(p, limits);
    if (!result) return std::nullopt;
    return Coloring(p.lambda, std::move(*result));
}

ColoringProblem hypergraph_problem(const Hypergraph& h, int lambda, EdgeRule rule) {
    return ColoringProblem{h.n(), lambda, rule, h.edges()};
}

ColoringProblem graph_problem(const Graph& g, int lambda) {
    std::vector<std::vector<int>> edges;
    edges.reserve(g.edges().size());
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    return ColoringProblem{g.n(), lambda, EdgeRule::AllDistinct, std::move(edges)};
}

}  // namespace

std::optional<Coloring> weak_coloring(const Hypergraph& h, int lambda, SearchMode mode,
                                      const SearchLimits& limits) {
    if (lambda < 2) throw DomainError("weak_coloring: need at least two colors");
    return solve(hypergraph_problem(h, lambda, EdgeRule::NotAllEqual), mode, limits);
}

std::optional<Coloring> rainbow_partition(const Hypergraph& h, SearchMode mode,
                                          const SearchLimits& limits) {
    return solve(hypergraph_problem(h, h.k(), EdgeRule::AllDistinct), mode, limits);
}

std::optional<Coloring> graph_coloring(const Graph& g, int lambda, SearchMode mode,
                                       const SearchLimits& limits) {
    if (lambda < 1) throw DomainError("graph_coloring: empty palette");
    return solve(graph_problem(g, lambda), mode, limits);
}

std::optional<Coloring> complete_coloring(int n, int lambda, bool not_all_equal,
                                          const std::vector<std::vector<int>>& edges,
                                          const std::vector<int>& preset,
                                          const SearchLimits& limits) {
    if (static_cast<int>(preset.size()) != n)
        throw DomainError("complete_coloring: preset size mismatch");
    ColoringProblem p{n, lambda, not_all_equal ? EdgeRule::NotAllEqual : EdgeRule::AllDistinct,
                      edges, preset, false};
    auto result = solve_backtracking(p, limits);
    if (!result) return std::nullopt;
    return Coloring(lambda, std::move(*result));
}

namespace {

struct IndependenceSearch {
    const Hypergraph& h;
    const SearchLimits& limits;
    int stop_at;
    std::vector<std::vector<int>> incident;
    std::vector<int> edge_inside;
    std::vector<char> chosen;
    std::vector<int> current;
    std::vector<int> best_witness;
    int best = -1;
    std::uint64_t nodes = 0;

    IndependenceSearch(const Hypergraph& hg, const SearchLimits& lim, int stop)
        : h(hg), limits(lim), stop_at(stop) {
        incident.resize(static_cast<std::size_t>(h.n()));
        for (int ei = 0; ei < h.edge_count(); ++ei)
            for (int v : h.edges()[static_cast<std::size_t>(ei)])
                incident[static_cast<std::size_t>(v - 1)].push_back(ei);
        edge_inside.assign(static_cast<std::size_t>(h.edge_count()), 0);
        chosen.assign(static_cast<std::size_t>(h.n()), 0);
    }

    bool done() const { return stop_at >= 0 && best >= stop_at; }

    void search(int v) {
        if (done()) return;
        if (++nodes > limits.node_budget)
            throw CapacityError("independence_number: node budget exceeded");
        if (static_cast<int>(current.size()) + (h.n() - v + 1) <= best) return;
        if (v > h.n()) {
            if (static_cast<int>(current.size()) > best) {
                best = static_cast<int>(current.size());
                best_witness = current;
            }
            return;
        }
        bool can_include = true;
        for (int ei : incident[static_cast<std::size_t>(v - 1)])
            if (edge_inside[static_cast<std::size_t>(ei)] == h.k() - 1) {
                can_include = false;
                break;
            }
        if (can_include) {
            for (int ei : incident[static_cast<std::size_t>(v - 1)])
                ++edge_inside[static_cast<std::size_t>(ei)];
            current.push_back(v);
            search(v + 1);
            current.pop_back();
            for (int ei : incident[static_cast<std::size_t>(v - 1)])
                --edge_inside[static_cast<std::size_t>(ei)];
        }
        if (done()) return;
        search(v + 1);
    }
};

}  // namespace

IndependenceResult independence_number(const Hypergraph& h, const SearchLimits& limits,
                                       int stop_at) {
    IndependenceSearch s(h, limits, stop_at);
    s.search(1);
    return {s.best, std::move(s.best_witness)};
}

int count_violations(const Hypergraph& h, const Coloring& c, PropertyKind kind) {
    if (c.n() != h.n()) throw DomainError("count_violations: dimension mismatch");
    int violations = 0;
    for (const auto& e : h.edges()) {
        if (kind == PropertyKind::WeakColorable) {
            int first = c.color(e[0]);
            bool mono = true;
            for (int v : e)
                if (c.color(v) != first) {
                    mono = false;
                    break;
                }
            if (mono) ++violations;
        } else if (kind == PropertyKind::KPartite) {
            unsigned mask = 0;
            bool rainbow = true;
            for (int v : e) {
                unsigned bit = 1u << c.color(v);
                if (mask & bit) {
                    rainbow = false;
                    break;
                }
                mask |= bit;
            }
            if (!rainbow) ++violations;
        } else {
            throw DomainError("count_violations: unsupported kind for hypergraphs");
        }
    }
    return violations;
}

int count_violations(const Graph& g, const Coloring& c) {
    if (c.n() != g.n()) throw DomainError("count_violations: dimension mismatch");
    int violations = 0;
    for (const auto& [a, b] : g.edges())
        if (c.color(a) == c.color(b)) ++violations;
    return violations;
}

namespace {

// Min violations for one component: enumerate colors of vertices appearing in
// >= 2 edges; vertices in exactly one edge are resolved per edge (they occur
// nowhere else, so their best choice is local to that edge).
struct ComponentDistance {
    int lambda;
    EdgeRule rule;
    std::vector<int> core;                       // vertex ids
    std::vector<std::vector<int>> edges;         // original vertex ids
    std::vector<std::vector<int>> edge_core;     // positions into core, per edge
    std::vector<int> edge_fringe_count;

    // Min violation of edge ei given core colors (0 = fringe handled jointly).
    int edge_min_violation(std::size_t ei, const std::vector<int>& core_color_of) const {
        const auto& e = edges[ei];
        int fringe = edge_fringe_count[ei];
        if (rule == EdgeRule::NotAllEqual) {
            if (fringe > 0) return 0;  // a fringe vertex can always break the tie
            int first = -1;
            for (int v : e) {
                int c = core_color_of[static_cast<std::size_t>(v)];
                if (first == -1)
                    first = c;
                else if (c != first)
                    return 0;
            }
            return 1;
        }
        // AllDistinct: fringe vertices can take exactly the missing colors.
        unsigned mask = 0;
        for (int v : e) {
            int c = core_color_of[static_cast<std::size_t>(v)];
            if (c == 0) continue;  // fringe
            unsigned bit = 1u << c;
            if (mask & bit) return 1;
            mask |= bit;
        }
        return 0;
    }
};

std::int64_t component_min_violations(const ComponentDistance& cd, const SearchLimits& limits) {
    const int t = static_cast<int>(cd.core.size());
    if (pow_clamped(static_cast<std::uint64_t>(cd.lambda), t, limits.max_states) >
        limits.max_states)
        throw CapacityError("distance_to_property: core state space over budget");
    // core_color_of is indexed by original vertex id; 0 marks fringe.
    int max_id = 0;
    for (const auto& e : cd.edges)
        for (int v : e) max_id = std::max(max_id, v);
    std::vector<int> color_of(static_cast<std::size_t>(max_id) + 1, 0);
    std::vector<int> assignment(static_cast<std::size_t>(t), 1);
    std::int64_t best = -1;
    while (true) {
        for (int i = 0; i < t; ++i)
            color_of[static_cast<std::size_t>(cd.core[static_cast<std::size_t>(i)])] =
                assignment[static_cast<std::size_t>(i)];
        std::int64_t violations = 0;
        for (std::size_t ei = 0; ei < cd.edges.size(); ++ei)
            violations += cd.edge_min_violation(ei, color_of);
        if (best == -1 || violations < best) best = violations;
        if (best == 0) break;
        int i = t - 1;
        while (i >= 0 && assignment[static_cast<std::size_t>(i)] == cd.lambda) {
            assignment[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++assignment[static_cast<std::size_t>(i)];
    }
    return best < 0 ? 0 : best;
}

std::int64_t min_violations_colorings(int n, int lambda, EdgeRule rule,
                                      const std::vector<std::vector<int>>& all_edges,
                                      const SearchLimits& limits) {
    // Connected components over shared-edge vertex sets.
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& e : all_edges)
        for (std::size_t i = 1; i < e.size(); ++i)
            parent[static_cast<std::size_t>(find(e[i]))] = find(e[0]);

    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& e : all_edges)
        for (int v : e) ++degree[static_cast<std::size_t>(v)];

    // Group edges by component root.
    std::vector<std::vector<std::vector<int>>> comp_edges;
    std::vector<int> root_index(static_cast<std::size_t>(n) + 1, -1);
    for (const auto& e : all_edges) {
        int r = find(e[0]);
        if (root_index[static_cast<std::size_t>(r)] == -1) {
            root_index[static_cast<std::size_t>(r)] = static_cast<int>(comp_edges.size());
            comp_edges.emplace_back();
        }
        comp_edges[static_cast<std::size_t>(root_index[static_cast<std::size_t>(r)])].push_back(e);
    }

    std::int64_t total = 0;
    for (auto& edges : comp_edges) {
        ComponentDistance cd;
        cd.lambda = lambda;
        cd.rule = rule;
        cd.edges = std::move(edges);
        std::vector<char> in_core(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& e : cd.edges)
            for (int v : e)
                if (degree[static_cast<std::size_t>(v)] >= 2) in_core[static_cast<std::size_t>(v)] = 1;
        for (int v = 1; v <= n; ++v)
            if (in_core[static_cast<std::size_t>(v)]) cd.core.push_back(v);
        cd.edge_fringe_count.reserve(cd.edges.size());
        for (const auto& e : cd.edges) {
            int fringe = 0;
            for (int v : e)
                if (degree[static_cast<std::size_t>(v)] < 2) ++fringe;
            cd.edge_fringe_count.push_back(fringe);
        }
        total += component_min_violations(cd, limits);
    }
    return total;
}

std::int64_t binomial_clamped(int n, int r, std::uint64_t clamp) {
    __int128 v = 1;
    for (int i = 0; i < r; ++i) {
        v = v * (n - i) / (i + 1);
        if (v > static_cast<__int128>(clamp)) return static_cast<std::int64_t>(clamp) + 1;
    }
    return static_cast<std::int64_t>(v);
}

std::int64_t min_violations_independence(const Hypergraph& h, int t, const SearchLimits& limits) {
    if (t < 0 || t > h.n()) throw DomainError("distance: independence threshold out of range");
    if (t == 0) return 0;
    if (binomial_clamped(h.n(), t, limits.max_states) >
        static_cast<std::int64_t>(limits.max_states))
        throw CapacityError("distance: subset space over budget");
    std::vector<int> pick(static_cast<std::size_t>(t));
    std::iota(pick.begin(), pick.end(), 1);
    std::vector<char> inside(static_cast<std::size_t>(h.n()) + 1, 0);
    std::int64_t best = -1;
    while (true) {
        std::fill(inside.begin(), inside.end(), 0);
        for (int v : pick) inside[static_cast<std::size_t>(v)] = 1;
        std::int64_t violations = 0;
        for (const auto& e : h.edges()) {
            bool contained = true;
            for (int v : e)
                if (!inside[static_cast<std::size_t>(v)]) {
                    contained = false;
                    break;
                }
            if (contained) ++violations;
        }
        if (best == -1 || violations < best) best = violations;
        if (best == 0) break;
        // next combination
        int i = t - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == h.n() - (t - 1 - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return best;
}

}  // namespace

Rational distance_to_property(const Hypergraph& h, const PropertySpec& spec,
                              const SearchLimits& limits) {
    std::int64_t denom = static_cast<std::int64_t>(h.delta_bound()) * h.n();
    if (denom == 0) return Rational(0);
    switch (spec.kind) {
        case PropertyKind::WeakColorable:
            if (spec.lambda < 2) throw DomainError("distance: weak coloring needs >= 2 colors");
            return Rational(min_violations_colorings(h.n(), spec.lambda, EdgeRule::NotAllEqual,
                                                     h.edges(), limits),
                            denom);
        case PropertyKind::KPartite:
            return Rational(min_violations_colorings(h.n(), h.k(), EdgeRule::AllDistinct,
                                                     h.edges(), limits),
                            denom);
        case PropertyKind::IndependenceAtLeast:
            return Rational(min_violations_independence(h, spec.threshold, limits), denom);
        case PropertyKind::GraphColorable:
            break;
    }
    throw DomainError("distance_to_property: spec kind not applicable to hypergraphs");
}

Rational distance_to_property(const Graph& g, const PropertySpec& spec,
                              const SearchLimits& limits) {
    if (spec.kind != PropertyKind::GraphColorable)
        throw DomainError("distance_to_property: spec kind not applicable to graphs");
    if (spec.lambda < 2) throw DomainError("distance: graph coloring needs >= 2 colors");
    std::int64_t denom = static_cast<std::int64_t>(g.delta_bound()) * g.n();
    if (denom == 0) return Rational(0);
    std::vector<std::vector<int>> edges;
    edges.reserve(g.edges().size());
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    return Rational(
        min_violations_colorings(g.n(), spec.lambda, EdgeRule::AllDistinct, edges, limits),
        denom);
}

}  // namespace hpt::solvers
