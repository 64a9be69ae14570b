#include "hpt/gadgets.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hpt/errors.hpp"

namespace hpt::gadgets {

AuxAllocator::AuxAllocator(int k, int pool_size, int first_pool_id, int d_use_cap)
    : k_(k), pool_size_(pool_size), first_pool_id_(first_pool_id),
      vadd_base_(first_pool_id + k * pool_size), d_use_cap_(d_use_cap) {
    if (k_ < 3) throw DomainError("allocator: k must be >= 3");
    if (pool_size_ < 1) throw DomainError("allocator: empty pools");
    d_cursor_.assign(static_cast<std::size_t>(k_ - 2), 0);
    d_use_count_.assign(static_cast<std::size_t>(k_ - 2),
                        std::vector<int>(static_cast<std::size_t>(pool_size_), 0));
}

int AuxAllocator::t_id(int i) const { return first_pool_id_ + (i - 1); }
int AuxAllocator::f_id(int i) const { return first_pool_id_ + pool_size_ + (i - 1); }

int AuxAllocator::d_id(int cls, int i) const {
    return first_pool_id_ + (1 + cls) * pool_size_ + (i - 1);
}

int AuxAllocator::d_cursor(int cls) const { return d_cursor_[static_cast<std::size_t>(cls - 1)]; }

std::vector<int> AuxAllocator::fresh_vadd(int count) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(vadd_base_ + vadd_next_++);
    return out;
}

std::vector<int> AuxAllocator::take_t(int count) {
    if (t_cursor_ + count > pool_size_) throw CapacityError("allocator: T pool exhausted");
    std::vector<int> out;
    for (int i = 0; i < count; ++i) out.push_back(t_id(++t_cursor_));
    return out;
}

std::vector<int> AuxAllocator::take_f(int count) {
    if (f_cursor_ + count > pool_size_) throw CapacityError("allocator: F pool exhausted");
    std::vector<int> out;
    for (int i = 0; i < count; ++i) out.push_back(f_id(++f_cursor_));
    return out;
}

std::vector<int> AuxAllocator::take_d(int cls, int count) {
    if (cls < 1 || cls > k_ - 2) throw DomainError("allocator: bad dummy class");
    if (count > pool_size_) throw CapacityError("allocator: D request exceeds pool");
    auto& cursor = d_cursor_[static_cast<std::size_t>(cls - 1)];
    auto& uses = d_use_count_[static_cast<std::size_t>(cls - 1)];
    std::vector<int> out;
    for (int i = 0; i < count; ++i) {
        int idx = cursor % pool_size_;
        ++cursor;
        if (++uses[static_cast<std::size_t>(idx)] > d_use_cap_)
            throw CapacityError("allocator: dummy vertex reuse cap exceeded");
        out.push_back(d_id(cls, idx + 1));
    }
    return out;
}

void AuxAllocator::position(int t_cursor, int f_cursor, const std::vector<int>& d_cursors,
                            int vadd_next) {
    if (static_cast<int>(d_cursors.size()) != k_ - 2)
        throw DomainError("allocator: bad cursor vector");
    t_cursor_ = t_cursor;
    f_cursor_ = f_cursor;
    d_cursor_ = d_cursors;
    vadd_next_ = vadd_next;
    for (auto& uses : d_use_count_) std::fill(uses.begin(), uses.end(), 0);
}

int AuxAllocator::family_color(int v) const {
    if (v < first_pool_id_ || v >= vadd_base_) return 0;
    int family = (v - first_pool_id_) / pool_size_;
    if (family == 0) return kTrue;
    if (family == 1) return kFalse;
    return dummy_color(family - 1);
}

namespace {

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Every k-subset of `closure` whose positions avoid {0, 1} together.
void emit_equality_edges(const std::vector<int>& closure, int k,
                         std::vector<std::vector<int>>& out) {
    const int m = static_cast<int>(closure.size());
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!(pick[0] == 0 && pick[1] == 1)) {
            std::vector<int> e;
            e.reserve(static_cast<std::size_t>(k));
            for (int idx : pick) e.push_back(closure[static_cast<std::size_t>(idx)]);
            out.push_back(sorted(std::move(e)));
        }
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - (k - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

GadgetInstance equality_gadget(int u, int v, AuxAllocator& alloc, int k) {
    if (k != alloc.k()) throw DomainError("equality_gadget: k mismatch");
    if (u == v) throw DomainError("equality_gadget: identical anchors");
    GadgetInstance g;
    g.kind = GadgetKind::Equality;
    g.anchors = {u, v};
    g.aux = alloc.fresh_vadd(k * k - k - 1);
    std::vector<int> closure = {u, v};
    closure.insert(closure.end(), g.aux.begin(), g.aux.end());
    emit_equality_edges(closure, k, g.hyperedges);
    return g;
}

GadgetInstance inequality_gadget(int u, int v, AuxAllocator& alloc, int k) {
    if (k != alloc.k()) throw DomainError("inequality_gadget: k mismatch");
    if (u == v) throw DomainError("inequality_gadget: identical anchors");
    GadgetInstance g;
    g.kind = GadgetKind::Inequality;
    g.anchors = {u, v};
    std::vector<int> u_des = alloc.fresh_vadd(k - 2);
    std::vector<int> v_des = alloc.fresh_vadd(k - 2);
    g.aux = u_des;
    g.aux.insert(g.aux.end(), v_des.begin(), v_des.end());
    for (int side = 0; side < 2; ++side) {
        int anchor = side == 0 ? u : v;
        const auto& des = side == 0 ? u_des : v_des;
        for (int tied : des) {
            GadgetInstance eq = equality_gadget(anchor, tied, alloc, k);
            g.aux.insert(g.aux.end(), eq.aux.begin(), eq.aux.end());
            g.hyperedges.insert(g.hyperedges.end(), eq.hyperedges.begin(), eq.hyperedges.end());
        }
    }
    std::vector<int> e1 = {u, v};
    e1.insert(e1.end(), u_des.begin(), u_des.end());
    std::vector<int> e2 = {u, v};
    e2.insert(e2.end(), v_des.begin(), v_des.end());
    g.hyperedges.push_back(sorted(std::move(e1)));
    g.hyperedges.push_back(sorted(std::move(e2)));
    return g;
}

GadgetInstance not_dummy_gadget(int u, AuxAllocator& alloc, int k) {
    if (k != alloc.k()) throw DomainError("not_dummy_gadget: k mismatch");
    GadgetInstance g;
    g.kind = GadgetKind::NotDummy;
    g.anchors = {u};
    for (int cls = 1; cls <= k - 2; ++cls) {
        std::vector<int> dummies = alloc.take_d(cls, k - 1);
        g.pool_used.insert(g.pool_used.end(), dummies.begin(), dummies.end());
        std::vector<int> e = {u};
        e.insert(e.end(), dummies.begin(), dummies.end());
        g.hyperedges.push_back(sorted(std::move(e)));
    }
    return g;
}

GadgetInstance clause_gadget(const std::vector<int>& copies, AuxAllocator& alloc, int k) {
    if (k != alloc.k()) throw DomainError("clause_gadget: k mismatch");
    if (copies.size() != 2 && copies.size() != 4 && copies.size() != 6)
        throw DomainError("clause_gadget: need two copy vertices per literal");
    const int w = static_cast<int>(copies.size()) / 2;
    for (std::size_t i = 0; i < copies.size(); ++i)
        for (std::size_t j = i + 1; j < copies.size(); ++j)
            if (copies[i] == copies[j]) throw DomainError("clause_gadget: repeated copy vertex");
    GadgetInstance g;
    g.kind = GadgetKind::Clause;
    g.anchors = copies;
    // Pool consumption is width-independent (full width-3 quotas, surplus
    // discarded) so lazy adapters can position cursors without reading the
    // clause widths of earlier clauses.
    std::vector<int> a = alloc.fresh_vadd(3);
    g.aux = a;
    for (int l = 0; l < w; ++l) {
        std::vector<int> e = {copies[static_cast<std::size_t>(2 * l)],
                              copies[static_cast<std::size_t>(2 * l + 1)],
                              a[static_cast<std::size_t>(l)]};
        if (k > 3) {
            std::vector<int> pad = alloc.take_f(k - 3);
            g.pool_used.insert(g.pool_used.end(), pad.begin(), pad.end());
            e.insert(e.end(), pad.begin(), pad.end());
        }
        g.hyperedges.push_back(sorted(std::move(e)));
    }
    if (k > 3) alloc.take_f((3 - w) * (k - 3));
    for (int l = 0; l < w; ++l) {
        std::vector<int> ts = alloc.take_t(k - 1);
        g.pool_used.insert(g.pool_used.end(), ts.begin(), ts.end());
        std::vector<int> e = {a[static_cast<std::size_t>(l)]};
        e.insert(e.end(), ts.begin(), ts.end());
        g.hyperedges.push_back(sorted(std::move(e)));
    }
    alloc.take_t((3 - w) * (k - 1));
    for (int l = 0; l < w; ++l) {
        for (int cls = 2; cls <= k - 2; ++cls) {
            std::vector<int> ds = alloc.take_d(cls, k - 1);
            g.pool_used.insert(g.pool_used.end(), ds.begin(), ds.end());
            std::vector<int> e = {a[static_cast<std::size_t>(l)]};
            e.insert(e.end(), ds.begin(), ds.end());
            g.hyperedges.push_back(sorted(std::move(e)));
        }
    }
    for (int cls = 2; cls <= k - 2; ++cls) alloc.take_d(cls, (3 - w) * (k - 1));
    // Final hyperedge over the used a's, topped up to three with D1 pool
    // vertices for short clauses, plus k-3 fresh pads equality-tied to D1
    // anchors. D1 quota per clause is the fixed 2 + (k-3).
    std::vector<int> final_edge(a.begin(), a.begin() + w);
    if (w < 3) {
        std::vector<int> ds = alloc.take_d(1, 3 - w);
        g.pool_used.insert(g.pool_used.end(), ds.begin(), ds.end());
        final_edge.insert(final_edge.end(), ds.begin(), ds.end());
    }
    for (int i = 0; i < k - 3; ++i) {
        int pad = alloc.fresh_vadd(1)[0];
        g.aux.push_back(pad);
        int anchor = alloc.take_d(1, 1)[0];
        g.pool_used.push_back(anchor);
        GadgetInstance eq = equality_gadget(pad, anchor, alloc, k);
        g.aux.insert(g.aux.end(), eq.aux.begin(), eq.aux.end());
        g.hyperedges.insert(g.hyperedges.end(), eq.hyperedges.begin(), eq.hyperedges.end());
        final_edge.push_back(pad);
    }
    alloc.take_d(1, w - 1);
    g.hyperedges.push_back(sorted(std::move(final_edge)));
    return g;
}

namespace {

// Equality aux pattern for anchor color c: k-2 aux on c, then k-1 aux on each
// other color in ascending order. Valid and tight (see the forcing counting).
void extend_equality_aux(const std::vector<int>& aux, std::size_t offset, int k, int c,
                         std::vector<int>& colors) {
    std::size_t pos = offset;
    for (int i = 0; i < k - 2; ++i) colors[static_cast<std::size_t>(aux[pos++])] = c;
    for (int other = 1; other <= k; ++other) {
        if (other == c) continue;
        for (int i = 0; i < k - 1; ++i) colors[static_cast<std::size_t>(aux[pos++])] = other;
    }
}

}  // namespace

void extend_coloring(const GadgetInstance& g, int k, std::vector<int>& colors) {
    const int eq_aux = k * k - k - 1;
    auto color_of = [&](int v) { return colors[static_cast<std::size_t>(v)]; };
    switch (g.kind) {
        case GadgetKind::Equality:
            extend_equality_aux(g.aux, 0, k, color_of(g.anchors[0]), colors);
            return;
        case GadgetKind::Inequality: {
            // Layout: u_des (k-2), v_des (k-2), then an equality block per tie.
            std::size_t pos = 0;
            for (int side = 0; side < 2; ++side) {
                int c = color_of(g.anchors[static_cast<std::size_t>(side)]);
                for (int i = 0; i < k - 2; ++i)
                    colors[static_cast<std::size_t>(g.aux[pos++])] = c;
            }
            std::size_t block = static_cast<std::size_t>(2 * (k - 2));
            for (int side = 0; side < 2; ++side) {
                int c = color_of(g.anchors[static_cast<std::size_t>(side)]);
                for (int i = 0; i < k - 2; ++i) {
                    extend_equality_aux(g.aux, block, k, c, colors);
                    block += static_cast<std::size_t>(eq_aux);
                }
            }
            return;
        }
        case GadgetKind::NotDummy:
            return;
        case GadgetKind::Clause: {
            // a_l = Dummy1 for false literals; the first true literal's a
            // takes False so the final hyperedge is never monochromatic.
            const int w = static_cast<int>(g.anchors.size()) / 2;
            bool seen_true = false;
            for (int l = 0; l < 3; ++l) {
                int c = dummy_color(1);
                if (l < w) {
                    bool lit_true =
                        color_of(g.anchors[static_cast<std::size_t>(2 * l)]) == kTrue;
                    if (lit_true && !seen_true) {
                        c = kFalse;
                        seen_true = true;
                    }
                }
                colors[static_cast<std::size_t>(g.aux[static_cast<std::size_t>(l)])] = c;
            }
            std::size_t pos = 3;
            for (int i = 0; i < k - 3; ++i) {
                colors[static_cast<std::size_t>(g.aux[pos])] = dummy_color(1);
                extend_equality_aux(g.aux, pos + 1, k, dummy_color(1), colors);
                pos += 1 + static_cast<std::size_t>(eq_aux);
            }
            return;
        }
    }
}

ForcingProblem forcing_problem(const GadgetInstance& g, const AuxAllocator& alloc) {
    ForcingProblem p;
    p.edges = g.hyperedges;
    p.anchors = g.anchors;
    p.lambda = alloc.k();
    std::set<int> seen;
    for (int v : g.pool_used) {
        if (!seen.insert(v).second) continue;
        int c = alloc.family_color(v);
        if (c == 0) throw DomainError("forcing_problem: non-pool vertex in pool_used");
        p.fixed.emplace_back(v, c);
    }
    return p;
}

bool extension_exists(const std::vector<std::vector<int>>& edges,
                      const std::vector<std::pair<int, int>>& fixed, int lambda,
                      const solvers::SearchLimits& limits) {
    std::map<int, int> remap;
    std::vector<int> order;
    auto add = [&](int v) {
        if (remap.emplace(v, static_cast<int>(order.size()) + 1).second) order.push_back(v);
    };
    for (const auto& [v, c] : fixed) add(v);
    for (const auto& e : edges)
        for (int v : e) add(v);
    std::vector<std::vector<int>> mapped;
    mapped.reserve(edges.size());
    for (const auto& e : edges) {
        std::vector<int> me;
        me.reserve(e.size());
        for (int v : e) me.push_back(remap.at(v));
        mapped.push_back(std::move(me));
    }
    std::vector<int> preset(order.size(), 0);
    for (const auto& [v, c] : fixed) preset[static_cast<std::size_t>(remap.at(v) - 1)] = c;
    return solvers::complete_coloring(static_cast<int>(order.size()), lambda, true, mapped,
                                      preset, limits)
        .has_value();
}

std::set<std::vector<int>> anchor_relation(const ForcingProblem& p,
                                           const solvers::SearchLimits& limits) {
    // Remap closure vertices to 1..V: anchors first, fixed next, aux after in
    // first-appearance order (keeps the search skeleton-first).
    std::map<int, int> remap;
    std::vector<int> order;
    auto add = [&](int v) {
        if (remap.emplace(v, static_cast<int>(order.size()) + 1).second) order.push_back(v);
    };
    for (int v : p.anchors) add(v);
    for (const auto& [v, c] : p.fixed) add(v);
    for (const auto& e : p.edges)
        for (int v : e) add(v);
    const int total = static_cast<int>(order.size());
    if (total > 64) throw CapacityError("anchor_relation: closure too large");

    std::vector<std::vector<int>> edges;
    edges.reserve(p.edges.size());
    for (const auto& e : p.edges) {
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(remap.at(v));
        edges.push_back(std::move(mapped));
    }

    std::vector<int> preset(static_cast<std::size_t>(total), 0);
    for (const auto& [v, c] : p.fixed) preset[static_cast<std::size_t>(remap.at(v) - 1)] = c;

    std::set<std::vector<int>> relation;
    std::vector<int> tuple(p.anchors.size(), 1);
    while (true) {
        for (std::size_t i = 0; i < p.anchors.size(); ++i)
            preset[static_cast<std::size_t>(remap.at(p.anchors[i]) - 1)] = tuple[i];
        if (solvers::complete_coloring(total, p.lambda, true, edges, preset, limits))
            relation.insert(tuple);
        std::size_t i = tuple.size();
        while (i > 0 && tuple[i - 1] == p.lambda) tuple[--i] = 1;
        if (i == 0) break;
        ++tuple[i - 1];
    }
    return relation;
}

bool verify_forcing(const ForcingProblem& p, const std::set<std::vector<int>>& expected,
                    const solvers::SearchLimits& limits) {
    return anchor_relation(p, limits) == expected;
}

std::set<std::vector<int>> equal_pair_relation(int lambda) {
    std::set<std::vector<int>> r;
    for (int c = 1; c <= lambda; ++c) r.insert({c, c});
    return r;
}

std::set<std::vector<int>> unequal_pair_relation(int lambda) {
    std::set<std::vector<int>> r;
    for (int a = 1; a <= lambda; ++a)
        for (int b = 1; b <= lambda; ++b)
            if (a != b) r.insert({a, b});
    return r;
}

}  // namespace hpt::gadgets
