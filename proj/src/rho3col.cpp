#include "hpt/rho3col.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "hpt/errors.hpp"
#include "hpt/solvers.hpp"

namespace hpt::reductions {

namespace {

std::int64_t binom(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0;
    std::int64_t v = 1;
    for (std::int64_t i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
    return v;
}

// Lexicographic rank/unrank of pairs 1 <= a < b <= n.
std::pair<int, int> unrank_pair(std::int64_t r, int n) {
    for (int a = 1; a < n; ++a) {
        std::int64_t count = n - a;
        if (r < count) return {a, a + 1 + static_cast<int>(r)};
        r -= count;
    }
    throw DomainError("unrank_pair: rank out of range");
}

std::int64_t rank_pair(int a, int b, int n) {
    std::int64_t r = 0;
    for (int i = 1; i < a; ++i) r += n - i;
    return r + (b - a - 1);
}

}  // namespace

Rho3ColSchema::Rho3ColSchema(int k_, int n_, int d_, int m_, Graph expander_graph)
    : k(k_), n(n_), d(d_), s(0), m(m_), expander(std::move(expander_graph)) {
    if (k < 3) throw DomainError("rho_kcol: k must be >= 3");
    if (n < 1 || d < 1 || m < 1) throw DomainError("rho_kcol: empty formula");
    if (expander.n() != pool())
        throw DomainError("rho_kcol: expander must have 8dn vertices");
    s = expander.degree(1);
    for (int v = 2; v <= expander.n(); ++v)
        if (expander.degree(v) != s) throw DomainError("rho_kcol: expander must be regular");
    if (!std::is_sorted(expander.edges().begin(), expander.edges().end()))
        throw DomainError("rho_kcol: expander edges must be sorted");
    expander_incident.resize(static_cast<std::size_t>(pool()));
    for (int e = 0; e < expander.edge_count(); ++e) {
        const auto& [a, b] = expander.edges()[static_cast<std::size_t>(e)];
        expander_incident[static_cast<std::size_t>(a - 1)].push_back(e);
        expander_incident[static_cast<std::size_t>(b - 1)].push_back(e);
    }
    // T and F pools must outlast their clause cursors (no wraparound there).
    if (static_cast<std::int64_t>(3 * (k - 1)) * m > pool())
        throw DomainError("rho_kcol: T pool undersized");
    if (k > 3 && static_cast<std::int64_t>(3 * (k - 3)) * m > pool())
        throw DomainError("rho_kcol: F pool undersized");
}

std::int64_t Rho3ColSchema::copy_pairs() const {
    return binom(copies_per_literal(), 2);
}

std::int64_t Rho3ColSchema::stage_gadgets(int stage) const {
    switch (stage) {
        case 1: return static_cast<std::int64_t>(2) * n * copy_pairs();
        case 2: return static_cast<std::int64_t>(k) * expander.edge_count();
        case 3: return static_cast<std::int64_t>(n) * copies_per_literal();
        case 4: return static_cast<std::int64_t>(pool()) * binom(k, 2);
        case 5: return copy_count();
        case 6: return m;
    }
    throw DomainError("stage_gadgets: bad stage");
}

std::int64_t Rho3ColSchema::vadd_per_gadget(int stage) const {
    switch (stage) {
        case 1:
        case 2: return eq_aux();
        case 3:
        case 4: return ineq_aux();
        case 5: return 0;
        case 6: return clause_aux();
    }
    throw DomainError("vadd_per_gadget: bad stage");
}

std::int64_t Rho3ColSchema::stage_vadd_start(int stage) const {
    std::int64_t total = 0;
    for (int st = 1; st < stage; ++st) total += stage_gadgets(st) * vadd_per_gadget(st);
    return total;
}

int Rho3ColSchema::total_vertices() const {
    return copy_count() + k * pool() + static_cast<int>(stage_vadd_start(7));
}

int Rho3ColSchema::delta() const {
    const std::int64_t closure = static_cast<std::int64_t>(k) * k - k + 1;
    const std::int64_t a_eq = binom(closure - 1, k - 1) - binom(closure - 2, k - 2);
    const std::int64_t eq_internal = binom(closure - 1, k - 1) - binom(closure - 3, k - 3);
    const std::int64_t ineq_anchor = 2 + (k - 2) * a_eq;

    const std::int64_t copy_deg =
        (copies_per_literal() - 1) * a_eq + ineq_anchor + (k - 2) + 1;
    const std::int64_t pool_base = static_cast<std::int64_t>(s) * a_eq + (k - 1) * ineq_anchor;
    std::int64_t pool_deg = pool_base + 1;  // T vertices used by clause gadgets
    for (int cls = 1; cls <= k - 2; ++cls) {
        std::int64_t nd_uses =
            (static_cast<std::int64_t>(copy_count()) * (k - 1) + pool() - 1) / pool();
        std::int64_t clause_quota = cls == 1 ? static_cast<std::int64_t>(2 + (k - 3)) * m
                                             : static_cast<std::int64_t>(3) * (k - 1) * m;
        std::int64_t clause_uses = (clause_quota + pool() - 1) / pool();
        // D1 draws for k > 3 include pad anchors, which join equality gadgets.
        std::int64_t per_clause_use = (cls == 1 && k > 3) ? a_eq : 1;
        pool_deg = std::max(pool_deg, pool_base + nd_uses + clause_uses * per_clause_use);
    }
    const std::int64_t designated = 1 + a_eq;
    const std::int64_t clause_a = 3 + std::max(0, k - 3);
    const std::int64_t clause_w = 1 + a_eq;
    return static_cast<int>(std::max({copy_deg, pool_deg, eq_internal, designated, clause_a,
                                      clause_w}));
}

Rho3ColSchema::AllocState Rho3ColSchema::state_before(int stage, std::int64_t idx) const {
    AllocState st;
    st.vadd = static_cast<int>(stage_vadd_start(stage) + idx * vadd_per_gadget(stage));
    st.t = stage == 6 ? static_cast<int>(idx * 3 * (k - 1)) : 0;
    st.f = stage == 6 ? static_cast<int>(idx * 3 * (k - 3)) : 0;
    st.d.assign(static_cast<std::size_t>(k - 2), 0);
    for (int cls = 1; cls <= k - 2; ++cls) {
        std::int64_t cursor = 0;
        if (stage == 5) {
            cursor = idx * (k - 1);
        } else if (stage == 6) {
            cursor = static_cast<std::int64_t>(copy_count()) * (k - 1) +
                     idx * (cls == 1 ? (2 + (k - 3)) : 3 * (k - 1));
        }
        st.d[static_cast<std::size_t>(cls - 1)] = static_cast<int>(cursor);
    }
    return st;
}

gadgets::GadgetInstance Rho3ColSchema::emit_gadget(
    int stage, std::int64_t idx, const std::function<AnnotatedClause(int)>& clause_of) const {
    AllocState st = state_before(stage, idx);
    gadgets::AuxAllocator alloc(k, pool(), first_pool_id());
    alloc.position(st.t, st.f, st.d, st.vadd);
    switch (stage) {
        case 1: {
            int lit = static_cast<int>(idx / copy_pairs()) + 1;
            auto [c1, c2] = unrank_pair(idx % copy_pairs(), copies_per_literal());
            return gadgets::equality_gadget(copy_id(lit, c1), copy_id(lit, c2), alloc, k);
        }
        case 2: {
            int fam = static_cast<int>(idx / expander.edge_count());
            const auto& [i, j] =
                expander.edges()[static_cast<std::size_t>(idx % expander.edge_count())];
            return gadgets::equality_gadget(pool_id(fam, i), pool_id(fam, j), alloc, k);
        }
        case 3: {
            // matched copy pairs: the i-th copy of x against the i-th copy
            // of its negation (copies are already equalized within a literal)
            int var = static_cast<int>(idx / copies_per_literal()) + 1;
            int i = static_cast<int>(idx % copies_per_literal()) + 1;
            return gadgets::inequality_gadget(copy_id(var, i), copy_id(n + var, i), alloc, k);
        }
        case 4: {
            int i = static_cast<int>(idx / binom(k, 2)) + 1;
            auto [f1, f2] = unrank_pair(idx % binom(k, 2), k);
            return gadgets::inequality_gadget(pool_id(f1 - 1, i), pool_id(f2 - 1, i), alloc, k);
        }
        case 5:
            return gadgets::not_dummy_gadget(static_cast<int>(idx) + 1, alloc, k);
        case 6: {
            AnnotatedClause ac = clause_of(static_cast<int>(idx) + 1);
            if (ac.literals.empty() || ac.literals.size() > 3)
                throw DomainError("rho_kcol: clause width must be 1..3");
            std::vector<int> copies;
            for (const auto& [lit, occ] : ac.literals) {
                int l = lit > 0 ? lit : n - lit;
                copies.push_back(copy_id(l, 2 * occ - 1));
                copies.push_back(copy_id(l, 2 * occ));
            }
            return gadgets::clause_gadget(copies, alloc, k);
        }
    }
    throw DomainError("emit_gadget: bad stage");
}

std::vector<std::pair<int, std::int64_t>> Rho3ColSchema::gadgets_at(
    int v, const std::function<AnnotatedClause(int, int)>& occurrence_of) const {
    std::vector<std::pair<int, std::int64_t>> refs;
    const int cpl = copies_per_literal();
    if (v <= copy_count()) {
        int lit = (v - 1) / cpl + 1;
        int c = (v - 1) % cpl + 1;
        for (int c1 = 1; c1 < c; ++c1)
            refs.emplace_back(1, (lit - 1) * copy_pairs() + rank_pair(c1, c, cpl));
        for (int c2 = c + 1; c2 <= cpl; ++c2)
            refs.emplace_back(1, (lit - 1) * copy_pairs() + rank_pair(c, c2, cpl));
        int var = lit <= n ? lit : lit - n;
        refs.emplace_back(3, static_cast<std::int64_t>(var - 1) * cpl + (c - 1));
        refs.emplace_back(5, v - 1);
        AnnotatedClause ac = occurrence_of(signed_literal(lit), (c + 1) / 2);
        refs.emplace_back(6, ac.index - 1);
    } else if (v < vadd_base()) {
        int fam = (v - first_pool_id()) / pool();
        int i = (v - first_pool_id()) % pool() + 1;
        for (int e : expander_incident[static_cast<std::size_t>(i - 1)])
            refs.emplace_back(2, static_cast<std::int64_t>(fam) * expander.edge_count() + e);
        for (std::int64_t pr = 0; pr < binom(k, 2); ++pr) {
            auto [f1, f2] = unrank_pair(pr, k);
            if (f1 - 1 == fam || f2 - 1 == fam)
                refs.emplace_back(4, static_cast<std::int64_t>(i - 1) * binom(k, 2) + pr);
        }
        if (fam >= 2) {
            int cls = fam - 1;
            // stage 5 uses: raw cursor positions congruent to i-1 mod pool()
            std::int64_t s5_total = static_cast<std::int64_t>(copy_count()) * (k - 1);
            for (std::int64_t cur = i - 1; cur < s5_total; cur += pool())
                refs.emplace_back(5, cur / (k - 1));
            std::int64_t per = cls == 1 ? (2 + (k - 3)) : 3 * (k - 1);
            if (per > 0) {
                for (std::int64_t cur = i - 1; cur < per * m; cur += pool())
                    refs.emplace_back(6, cur / per);
            }
        } else if (fam == 0) {
            std::int64_t per = 3 * (k - 1);
            for (std::int64_t cur = i - 1; cur < per * m; cur += pool())
                refs.emplace_back(6, cur / per);
        } else if (k > 3) {  // F pads
            std::int64_t per = 3 * (k - 3);
            for (std::int64_t cur = i - 1; cur < per * m; cur += pool())
                refs.emplace_back(6, cur / per);
        }
    } else {
        std::int64_t offset = v - vadd_base();
        for (int stage : {1, 2, 3, 4, 6}) {
            std::int64_t span = stage_gadgets(stage) * vadd_per_gadget(stage);
            if (offset < span) {
                refs.emplace_back(stage, offset / vadd_per_gadget(stage));
                break;
            }
            offset -= span;
        }
        if (refs.empty()) throw DomainError("gadgets_at: vertex out of range");
    }
    std::sort(refs.begin(), refs.end());
    refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
    return refs;
}

namespace {

int derive_regularity(const CnfFormula& f) {
    for (const auto& clause : f.clauses())
        if (clause.empty() || clause.size() > 3)
            throw DomainError("rho_kcol: clause width must be 1..3");
    if (f.var_count() < 1 || f.clause_count() < 1)
        throw DomainError("rho_kcol: empty formula");
    int d = literal_occurrences(f, 1);
    if (d < 1 || !validate_kc(f, 3, d))
        throw DomainError("rho_kcol: formula is not (3,d)-regular");
    return d;
}

}  // namespace

Rho3ColResult rho_kcol(const CnfFormula& f, int k, const Graph& expander) {
    if (k != 3 && k != 4) throw CapacityError("rho_kcol: only k in {3,4} supported");
    int d = derive_regularity(f);
    Rho3ColSchema schema(k, f.var_count(), d, f.clause_count(), expander);
    if (schema.total_vertices() > 20'000'000)
        throw CapacityError("rho_kcol: output exceeds the materialization budget (" +
                            std::to_string(schema.total_vertices()) + " vertices)");

    CnfIncidenceOracle annotator(f);
    auto clause_of = [&](int j) { return annotator.clause(j); };

    std::vector<gadgets::GadgetInstance> gadget_list;
    std::vector<std::vector<int>> edges;
    for (int stage = 1; stage <= 6; ++stage) {
        for (std::int64_t idx = 0; idx < schema.stage_gadgets(stage); ++idx) {
            gadgets::GadgetInstance g = schema.emit_gadget(stage, idx, clause_of);
            edges.insert(edges.end(), g.hyperedges.begin(), g.hyperedges.end());
            gadget_list.push_back(std::move(g));
        }
    }

    // Pool reuse stays within the round-robin cap.
    std::map<int, int> pool_uses;
    for (const auto& g : gadget_list)
        for (int pv : g.pool_used) ++pool_uses[pv];
    for (const auto& [pv, uses] : pool_uses)
        if (uses > 4)
            throw GenerationError("rho_kcol: pool vertex " + std::to_string(pv) +
                                  " reused " + std::to_string(uses) + " times");

    Hypergraph h(k, schema.total_vertices(), schema.delta(), std::move(edges));
    return {std::move(h), std::move(schema), std::move(gadget_list)};
}

Rho3ColResult rho_3col(const CnfFormula& f, const Graph& expander) {
    return rho_kcol(f, 3, expander);
}

namespace {

Coloring build_assignment_coloring(const Rho3ColResult& r, const std::vector<bool>& sigma) {
    const Rho3ColSchema& sc = r.schema;
    if (static_cast<int>(sigma.size()) != sc.n)
        throw DomainError("coloring_from_assignment: assignment size mismatch");
    std::vector<int> colors(static_cast<std::size_t>(sc.total_vertices()) + 1, 0);
    for (int lit = 1; lit <= 2 * sc.n; ++lit) {
        bool value = lit <= sc.n ? sigma[static_cast<std::size_t>(lit - 1)]
                                 : !sigma[static_cast<std::size_t>(lit - sc.n - 1)];
        int color = value ? gadgets::kTrue : gadgets::kFalse;
        for (int c = 1; c <= sc.copies_per_literal(); ++c)
            colors[static_cast<std::size_t>(sc.copy_id(lit, c))] = color;
    }
    for (int fam = 0; fam < sc.k; ++fam) {
        int family_color = fam == 0 ? gadgets::kTrue
                                    : fam == 1 ? gadgets::kFalse : gadgets::dummy_color(fam - 1);
        for (int i = 1; i <= sc.pool(); ++i)
            colors[static_cast<std::size_t>(sc.pool_id(fam, i))] = family_color;
    }
    for (const auto& g : r.gadget_list) gadgets::extend_coloring(g, sc.k, colors);
    std::vector<int> assignment(colors.begin() + 1, colors.end());
    return Coloring(sc.k, std::move(assignment));
}

}  // namespace

Coloring coloring_from_assignment(const Rho3ColResult& r, const std::vector<bool>& sigma) {
    Coloring coloring = build_assignment_coloring(r, sigma);
    if (solvers::count_violations(r.h, coloring, solvers::PropertyKind::WeakColorable) != 0)
        throw GenerationError("coloring_from_assignment: constructed coloring is invalid");
    return coloring;
}

Coloring coloring_from_assignment_allow_violations(const Rho3ColResult& r,
                                                   const std::vector<bool>& sigma) {
    return build_assignment_coloring(r, sigma);
}

namespace {

// The anchor-class constraint system: equality gadgets merge classes, the
// other gadget kinds become constraints evaluated over class colors.
struct ClassCsp {
    const Rho3ColResult& r;
    std::vector<int> parent;       // union-find over anchor ids
    std::vector<int> class_of;     // anchor id -> class index
    std::vector<int> class_rep;    // class index -> representative id
    int num_classes = 0;

    struct Constraint {
        enum class Kind { Neq, Nae, Clause } kind;
        std::vector<int> classes;       // involved class ids (deduplicated)
        std::vector<int> neq_pair;      // for Neq
        std::vector<std::vector<int>> nae_edges_by_class;  // for Nae
        const gadgets::GadgetInstance* gadget = nullptr;   // for Clause
    };
    std::vector<Constraint> constraints;
    std::vector<std::vector<int>> touching;  // class -> constraint indices

    explicit ClassCsp(const Rho3ColResult& result) : r(result) {
        const int anchors = r.schema.vadd_base() - 1;
        parent.resize(static_cast<std::size_t>(anchors) + 1);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& g : r.gadget_list)
            if (g.kind == gadgets::GadgetKind::Equality) unite(g.anchors[0], g.anchors[1]);

        class_of.assign(static_cast<std::size_t>(anchors) + 1, -1);
        for (int v = 1; v <= anchors; ++v) {
            int root = find(v);
            if (class_of[static_cast<std::size_t>(root)] == -1) {
                class_of[static_cast<std::size_t>(root)] = num_classes++;
                class_rep.push_back(root);
            }
            class_of[static_cast<std::size_t>(v)] = class_of[static_cast<std::size_t>(root)];
        }

        for (const auto& g : r.gadget_list) {
            switch (g.kind) {
                case gadgets::GadgetKind::Equality:
                    break;
                case gadgets::GadgetKind::Inequality: {
                    Constraint c;
                    c.kind = Constraint::Kind::Neq;
                    c.neq_pair = {cls(g.anchors[0]), cls(g.anchors[1])};
                    c.classes = c.neq_pair;
                    dedupe(c.classes);
                    constraints.push_back(std::move(c));
                    break;
                }
                case gadgets::GadgetKind::NotDummy: {
                    Constraint c;
                    c.kind = Constraint::Kind::Nae;
                    for (const auto& e : g.hyperedges) {
                        std::vector<int> ce;
                        ce.reserve(e.size());
                        for (int v : e) ce.push_back(cls(v));
                        for (int x : ce) c.classes.push_back(x);
                        c.nae_edges_by_class.push_back(std::move(ce));
                    }
                    dedupe(c.classes);
                    constraints.push_back(std::move(c));
                    break;
                }
                case gadgets::GadgetKind::Clause: {
                    Constraint c;
                    c.kind = Constraint::Kind::Clause;
                    c.gadget = &g;
                    for (int v : g.anchors) c.classes.push_back(cls(v));
                    for (int v : g.pool_used) c.classes.push_back(cls(v));
                    dedupe(c.classes);
                    constraints.push_back(std::move(c));
                    break;
                }
            }
        }
        touching.resize(static_cast<std::size_t>(num_classes));
        for (std::size_t ci = 0; ci < constraints.size(); ++ci)
            for (int cl : constraints[ci].classes)
                touching[static_cast<std::size_t>(cl)].push_back(static_cast<int>(ci));
    }

    static void dedupe(std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
    int cls(int v) { return class_of[static_cast<std::size_t>(v)]; }
};

struct ClassSearch {
    ClassCsp& csp;
    int lambda;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<int> color;        // per class, 0 = unassigned
    std::vector<int> pending;      // per constraint, unassigned class count
    std::vector<int> order;        // classes, largest first

    ClassSearch(ClassCsp& c, int lam, std::uint64_t node_budget)
        : csp(c), lambda(lam), budget(node_budget) {
        color.assign(static_cast<std::size_t>(csp.num_classes), 0);
        pending.reserve(csp.constraints.size());
        for (const auto& con : csp.constraints)
            pending.push_back(static_cast<int>(con.classes.size()));
        std::vector<std::int64_t> size(static_cast<std::size_t>(csp.num_classes), 0);
        for (std::size_t v = 1; v < csp.class_of.size(); ++v)
            ++size[static_cast<std::size_t>(csp.class_of[v])];
        order.resize(static_cast<std::size_t>(csp.num_classes));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (size[static_cast<std::size_t>(a)] != size[static_cast<std::size_t>(b)])
                return size[static_cast<std::size_t>(a)] > size[static_cast<std::size_t>(b)];
            return csp.class_rep[static_cast<std::size_t>(a)] <
                   csp.class_rep[static_cast<std::size_t>(b)];
        });
    }

    bool constraint_holds(const ClassCsp::Constraint& con) {
        switch (con.kind) {
            case ClassCsp::Constraint::Kind::Neq:
                return color[static_cast<std::size_t>(con.neq_pair[0])] !=
                       color[static_cast<std::size_t>(con.neq_pair[1])];
            case ClassCsp::Constraint::Kind::Nae: {
                for (const auto& e : con.nae_edges_by_class) {
                    int first = color[static_cast<std::size_t>(e[0])];
                    bool mono = true;
                    for (int cl : e)
                        if (color[static_cast<std::size_t>(cl)] != first) {
                            mono = false;
                            break;
                        }
                    if (mono) return false;
                }
                return true;
            }
            case ClassCsp::Constraint::Kind::Clause: {
                std::vector<std::pair<int, int>> fixed;
                for (int v : con.gadget->anchors)
                    fixed.emplace_back(v, color[static_cast<std::size_t>(csp.cls(v))]);
                for (int v : con.gadget->pool_used)
                    fixed.emplace_back(v, color[static_cast<std::size_t>(csp.cls(v))]);
                return gadgets::extension_exists(con.gadget->hyperedges, fixed, lambda);
            }
        }
        return true;
    }

    bool search(std::size_t pos) {
        if (pos == order.size()) return true;
        if (++nodes > budget)
            throw CapacityError("certified_weak_coloring: node budget exceeded");
        int cl = order[pos];
        for (int c = 1; c <= lambda; ++c) {
            color[static_cast<std::size_t>(cl)] = c;
            bool ok = true;
            for (int ci : csp.touching[static_cast<std::size_t>(cl)]) {
                if (--pending[static_cast<std::size_t>(ci)] == 0 &&
                    !constraint_holds(csp.constraints[static_cast<std::size_t>(ci)]))
                    ok = false;
            }
            if (ok && search(pos + 1)) return true;
            for (int ci : csp.touching[static_cast<std::size_t>(cl)])
                ++pending[static_cast<std::size_t>(ci)];
            color[static_cast<std::size_t>(cl)] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<Coloring> certified_weak_coloring(const Rho3ColResult& r,
                                                std::uint64_t node_budget) {
    ClassCsp csp(r);
    ClassSearch search(csp, r.schema.k, node_budget);
    if (!search.search(0)) return std::nullopt;

    std::vector<int> colors(static_cast<std::size_t>(r.schema.total_vertices()) + 1, 0);
    for (int v = 1; v < r.schema.vadd_base(); ++v)
        colors[static_cast<std::size_t>(v)] =
            search.color[static_cast<std::size_t>(csp.class_of[static_cast<std::size_t>(v)])];
    for (const auto& g : r.gadget_list) {
        if (g.kind == gadgets::GadgetKind::Clause) {
            // Clause aux colors come from a feasible extension, not the fixed
            // rule: the class solution need not put first-true-literal first.
            std::vector<std::pair<int, int>> fixed;
            for (int v : g.anchors) fixed.emplace_back(v, colors[static_cast<std::size_t>(v)]);
            for (int v : g.pool_used) fixed.emplace_back(v, colors[static_cast<std::size_t>(v)]);
            // Complete search over the private aux, small by construction.
            std::map<int, int> remap;
            std::vector<int> ids;
            auto add = [&](int v) {
                if (remap.emplace(v, static_cast<int>(ids.size()) + 1).second) ids.push_back(v);
            };
            for (const auto& [v, c] : fixed) add(v);
            for (const auto& e : g.hyperedges)
                for (int v : e) add(v);
            std::vector<std::vector<int>> mapped;
            for (const auto& e : g.hyperedges) {
                std::vector<int> me;
                for (int v : e) me.push_back(remap.at(v));
                mapped.push_back(std::move(me));
            }
            std::vector<int> preset(ids.size(), 0);
            for (const auto& [v, c] : fixed)
                preset[static_cast<std::size_t>(remap.at(v) - 1)] = c;
            auto ext = solvers::complete_coloring(static_cast<int>(ids.size()), r.schema.k, true,
                                                  mapped, preset);
            if (!ext)
                throw GenerationError("certified_weak_coloring: clause extension vanished");
            for (std::size_t i = 0; i < ids.size(); ++i)
                colors[static_cast<std::size_t>(ids[i])] = ext->color(static_cast<int>(i) + 1);
        } else {
            gadgets::extend_coloring(g, r.schema.k, colors);
        }
    }
    std::vector<int> assignment(colors.begin() + 1, colors.end());
    Coloring coloring(r.schema.k, std::move(assignment));
    if (solvers::count_violations(r.h, coloring, solvers::PropertyKind::WeakColorable) != 0)
        throw GenerationError("certified_weak_coloring: witness failed validation");
    return coloring;
}

Rational rho_3col_gap_constant(const Rho3ColResult& r) {
    return Rational(3) * r.schema.d *
           Rational(static_cast<std::int64_t>(r.h.delta_bound()) * r.h.n(), r.schema.m);
}

Rho3ColAdapter::Rho3ColAdapter(CnfIncidenceOracle& base, int k, const Graph& expander)
    : base_(base),
      schema_(k, base.formula().var_count(), derive_regularity(base.formula()),
              base.formula().clause_count(), expander) {}

QueryAnswer Rho3ColAdapter::answer(int v, int j) {
    std::map<int, AnnotatedClause> memo;
    auto occurrence_of = [&](int lit, int t) {
        AnnotatedClause ac = base_.occurrence(lit, t);
        memo.emplace(ac.index, ac);
        return ac;
    };
    auto clause_of = [&](int idx) {
        auto it = memo.find(idx);
        if (it != memo.end()) return it->second;
        AnnotatedClause ac = base_.clause(idx);
        memo.emplace(idx, ac);
        return ac;
    };
    auto refs = schema_.gadgets_at(v, occurrence_of);
    int seen = 0;
    for (const auto& [stage, idx] : refs) {
        gadgets::GadgetInstance g = schema_.emit_gadget(stage, idx, clause_of);
        for (const auto& e : g.hyperedges) {
            if (std::find(e.begin(), e.end(), v) == e.end()) continue;
            if (++seen == j) return e;
        }
    }
    return {};
}

std::unique_ptr<IncidenceOracle> make_rho3col_adapter(CnfIncidenceOracle& base, int k,
                                                      const Graph& expander) {
    return std::make_unique<Rho3ColAdapter>(base, k, expander);
}

}  // namespace hpt::reductions
