#include "hpt/reductions.hpp"

#include <algorithm>

#include "hpt/errors.hpp"

namespace hpt::reductions {

Hypergraph rho_3par(const Graph& g) {
    const int n = g.n();
    const int d = g.delta_bound();
    std::vector<int> incident_seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> edges;
    edges.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) {
        ++incident_seen[static_cast<std::size_t>(u)];
        ++incident_seen[static_cast<std::size_t>(v)];
        int j = incident_seen[static_cast<std::size_t>(u)];
        edges.push_back({u, v, n + (u - 1) * d + j});
    }
    return Hypergraph(3, n + d * n, d, std::move(edges));
}

Hypergraph rho_kpar(const Graph& g, int k) {
    if (k < 3) throw DomainError("rho_kpar: k must be >= 3");
    const int n = g.n();
    const int m = g.edge_count();
    std::vector<std::vector<int>> edges;
    edges.reserve(g.edges().size());
    for (int e = 1; e <= m; ++e) {
        const auto& [u, v] = g.edges()[static_cast<std::size_t>(e - 1)];
        std::vector<int> he = {u, v};
        for (int t = 1; t <= k - 2; ++t) he.push_back(n + (k - 2) * (e - 1) + t);
        edges.push_back(std::move(he));
    }
    return Hypergraph(k, n + (k - 2) * m, g.delta_bound(), std::move(edges));
}

Graph rho_par_tw(const Hypergraph& h) { return gaifman(h); }

Hypergraph rho_ind(const Hypergraph& h) {
    if (h.k() != 3) throw DomainError("rho_ind: input must be 3-uniform");
    const int n = h.n();
    auto level_id = [n](int u, int level) { return 3 * (u - 1) + level; };
    std::vector<std::vector<int>> edges;
    edges.reserve(3 * h.edges().size() + static_cast<std::size_t>(n));
    for (int level = 1; level <= 3; ++level) {
        for (const auto& e : h.edges())
            edges.push_back({level_id(e[0], level), level_id(e[1], level), level_id(e[2], level)});
    }
    for (int u = 1; u <= n; ++u)
        edges.push_back({level_id(u, 1), level_id(u, 2), level_id(u, 3)});
    return Hypergraph(3, 3 * n, h.delta_bound() + 1, std::move(edges));
}

Rho3ParAdapter::Rho3ParAdapter(IncidenceOracle& base) : base_(base) {
    if (base.arity() != 2) throw DomainError("rho_3par adapter: base must be a graph oracle");
}

QueryAnswer Rho3ParAdapter::answer(int v, int j) {
    const int n = base_.n();
    const int d = base_.delta();
    if (v <= n) {
        QueryAnswer e = base_.query(v, j);
        if (is_dummy(e)) return {};
        int u = e[0];  // smaller endpoint keys the apex
        int w = e[1];
        int ju = j;
        if (v != u) {
            // Find this edge's slot in u's row.
            ju = 0;
            for (int t = 1; t <= d; ++t) {
                QueryAnswer eu = base_.query(u, t);
                if (!is_dummy(eu) && eu == e) {
                    ju = t;
                    break;
                }
            }
        }
        QueryAnswer out = {u, w, apex_of(u, ju)};
        std::sort(out.begin(), out.end());
        return out;
    }
    if (j != 1) return {};
    int offset = v - n - 1;
    int u = offset / d + 1;
    int slot = offset % d + 1;
    QueryAnswer e = base_.query(u, slot);
    if (is_dummy(e)) return {};
    if (e[0] != u) return {};  // apex belongs to the smaller endpoint only
    QueryAnswer out = {e[0], e[1], v};
    std::sort(out.begin(), out.end());
    return out;
}

GaifmanAdapter::GaifmanAdapter(IncidenceOracle& base) : base_(base) {
    if (base.arity() < 2) throw DomainError("gaifman adapter: bad base arity");
}

QueryAnswer GaifmanAdapter::answer(int v, int j) {
    // Row of v in the primal graph: neighbors below v ascending, then above.
    std::vector<int> below, above;
    for (int t = 1; t <= base_.delta(); ++t) {
        QueryAnswer e = base_.query(v, t);
        if (is_dummy(e)) break;  // rows are dummy-padded at the end only
        for (int u : e) {
            if (u == v) continue;
            (u < v ? below : above).push_back(u);
        }
    }
    std::sort(below.begin(), below.end());
    below.erase(std::unique(below.begin(), below.end()), below.end());
    std::sort(above.begin(), above.end());
    above.erase(std::unique(above.begin(), above.end()), above.end());
    const int degree = static_cast<int>(below.size() + above.size());
    if (j > degree) return {};
    int u = j <= static_cast<int>(below.size())
                ? below[static_cast<std::size_t>(j - 1)]
                : above[static_cast<std::size_t>(j - 1) - below.size()];
    return u < v ? QueryAnswer{u, v} : QueryAnswer{v, u};
}

RhoIndAdapter::RhoIndAdapter(IncidenceOracle& base) : base_(base) {
    if (base.arity() != 3) throw DomainError("rho_ind adapter: base must be 3-uniform");
}

QueryAnswer RhoIndAdapter::answer(int v, int j) {
    const int u = (v - 1) / 3 + 1;
    const int level = (v - 1) % 3 + 1;
    const int du = base_.delta();
    auto level_id = [this](int w, int l) { return 3 * (w - 1) + l; };
    auto vertical = [&]() -> QueryAnswer {
        return {level_id(u, 1), level_id(u, 2), level_id(u, 3)};
    };
    if (j <= du) {
        QueryAnswer e = base_.query(u, j);
        if (!is_dummy(e)) {
            QueryAnswer out = {level_id(e[0], level), level_id(e[1], level),
                               level_id(e[2], level)};
            std::sort(out.begin(), out.end());
            return out;
        }
        // Slot j is past u's degree: the vertical sits at slot deg(u)+1.
        if (j == 1 || !is_dummy(base_.query(u, j - 1))) return vertical();
        return {};
    }
    // j == du + 1: vertical iff u has full degree.
    if (!is_dummy(base_.query(u, du))) return vertical();
    return {};
}

std::unique_ptr<IncidenceOracle> make_local_adapter(ReductionKind kind, IncidenceOracle& base) {
    switch (kind) {
        case ReductionKind::Rho3Par:
            return std::make_unique<Rho3ParAdapter>(base);
        case ReductionKind::RhoParTw:
            return std::make_unique<GaifmanAdapter>(base);
        case ReductionKind::RhoInd:
            return std::make_unique<RhoIndAdapter>(base);
        case ReductionKind::Rho3Col:
            throw CapacityError("make_local_adapter: rho_3col adapters need a CNF oracle");
        case ReductionKind::RhoKCol:
        case ReductionKind::RhoKPar:
            throw CapacityError("make_local_adapter: no lazy form for this kind");
    }
    throw DomainError("make_local_adapter: unknown kind");
}

Rational rho_3par_gap_constant(const Graph& g) { return Rational(g.delta_bound() + 1); }

Rational rho_ind_gap_constant(const Hypergraph& h) { return Rational(9) * (h.delta_bound() + 1); }

}  // namespace hpt::reductions
