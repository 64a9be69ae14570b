#include "hpt/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hpt/errors.hpp"
#include "hpt/io.hpp"
#include "hpt/reductions.hpp"
#include "hpt/rho3col.hpp"
#include "hpt/rng.hpp"

namespace hpt::generators {

std::string certificate_name(ExpanderCertificate c) {
    switch (c) {
        case ExpanderCertificate::Exhaustive: return "exhaustive";
        case ExpanderCertificate::SpectralHeuristic: return "spectral-heuristic";
        case ExpanderCertificate::Unverified: return "unverified";
    }
    return "unverified";
}

std::optional<std::vector<int>> expansion_counterexample(const Graph& g) {
    const int n = g.n();
    if (n > 24) throw CapacityError("expansion_counterexample: n too large for exhaustion");
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : g.edges()) {
        nbr[static_cast<std::size_t>(a - 1)] |= 1u << (b - 1);
        nbr[static_cast<std::size_t>(b - 1)] |= 1u << (a - 1);
    }
    const std::uint32_t total = n == 32 ? 0xffffffffu : (1u << n) - 1;
    for (std::uint32_t mask = 1; mask <= total; ++mask) {
        int size = __builtin_popcount(mask);
        if (size > n / 2) continue;
        std::uint32_t reach = 0;
        std::uint32_t rest = mask;
        while (rest) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            reach |= nbr[static_cast<std::size_t>(v)];
        }
        reach &= ~mask;
        if (__builtin_popcount(reach) < size) {
            std::vector<int> witness;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) witness.push_back(v + 1);
            return witness;
        }
    }
    return std::nullopt;
}

namespace {

std::optional<Graph> pairing_model_regular(int n, int d, Rng& rng) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int v = 1; v <= n; ++v)
        for (int i = 0; i < d; ++i) stubs.push_back(v);
    rng.shuffle(stubs);
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int a = stubs[i], b = stubs[i + 1];
        if (a == b) return std::nullopt;
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second) return std::nullopt;
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    return Graph(n, d, std::move(edges));
}

bool graph_connected(const Graph& g) {
    if (g.n() == 0) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n()) + 1);
    for (const auto& [a, b] : g.edges()) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<char> vis(static_cast<std::size_t>(g.n()) + 1, 0);
    std::vector<int> stack = {1};
    vis[1] = 1;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int u : adj[static_cast<std::size_t>(v)])
            if (!vis[static_cast<std::size_t>(u)]) {
                vis[static_cast<std::size_t>(u)] = 1;
                stack.push_back(u);
            }
    }
    return count == g.n();
}

// Top eigenvalue of (sign*A + shift*I) restricted to the space orthogonal to
// the all-ones vector, by fixed-iteration power iteration. The shift makes
// the iterated operator PSD so the iteration converges to the algebraic top.
double power_iteration_orthogonal(const Graph& g, double sign, double shift, Rng& rng) {
    const int n = g.n();
    std::vector<double> x(static_cast<std::size_t>(n));
    for (auto& xi : x) xi = static_cast<double>(rng.next_below(1000000)) / 1e6 - 0.5;
    auto project = [&]() {
        double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
        for (auto& xi : x) xi -= mean;
    };
    auto normalize = [&]() {
        double norm = 0;
        for (double xi : x) norm += xi * xi;
        norm = std::sqrt(norm);
        if (norm < 1e-300) return false;
        for (auto& xi : x) xi /= norm;
        return true;
    };
    auto matvec = [&](const std::vector<double>& in, std::vector<double>& out) {
        std::fill(out.begin(), out.end(), 0.0);
        for (const auto& [a, b] : g.edges()) {
            out[static_cast<std::size_t>(a - 1)] += sign * in[static_cast<std::size_t>(b - 1)];
            out[static_cast<std::size_t>(b - 1)] += sign * in[static_cast<std::size_t>(a - 1)];
        }
        for (int i = 0; i < n; ++i)
            out[static_cast<std::size_t>(i)] += shift * in[static_cast<std::size_t>(i)];
    };
    project();
    if (!normalize()) return shift;
    std::vector<double> y(static_cast<std::size_t>(n));
    for (int iter = 0; iter < 300; ++iter) {
        matvec(x, y);
        x.swap(y);
        project();
        if (!normalize()) return shift;
    }
    matvec(x, y);
    double eigen = 0;
    for (int i = 0; i < n; ++i)
        eigen += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    return eigen;
}

}  // namespace

ExpanderGraph random_regular_expander(int n, int d, std::uint64_t seed) {
    if (n <= d) throw DomainError("expander: need n > d");
    if ((static_cast<std::int64_t>(n) * d) % 2 != 0)
        throw DomainError("expander: n*d must be even");
    Rng rng(seed);
    const int attempts = 5000;
    // Exhaustive verification can only ever succeed when d + 1 > n/2: for any
    // sparser regular graph, S = complement of (closed neighborhood of a
    // vertex padded to n/2) has |N(S)| < |S|. Elsewhere fall back to the
    // spectral heuristic.
    if (n <= 20 && d + 1 > n / 2) {
        for (int attempt = 0; attempt < attempts; ++attempt) {
            auto graph = pairing_model_regular(n, d, rng);
            if (!graph) continue;
            if (expansion_counterexample(*graph)) continue;
            return {std::move(*graph), d, ExpanderCertificate::Exhaustive, 0.0};
        }
        throw GenerationError("expander: resampling budget exceeded");
    }
    for (int attempt = 0; attempt < attempts; ++attempt) {
        auto graph = pairing_model_regular(n, d, rng);
        if (!graph) continue;
        if (!graph_connected(*graph)) continue;
        // l2 from (A + dI), -l_n from (dI - A); both PSD.
        double l2 = power_iteration_orthogonal(*graph, 1.0, d, rng) - d;
        double minus_ln = power_iteration_orthogonal(*graph, -1.0, d, rng) - d;
        double lambda = std::max(l2, minus_ln);
        if (lambda <= 2.1 * std::sqrt(static_cast<double>(d - 1)))
            return {std::move(*graph), d, ExpanderCertificate::SpectralHeuristic, lambda};
    }
    throw GenerationError("expander: resampling budget exceeded");
}

Hypergraph sample_appendix_b(int n, int d, std::uint64_t seed) {
    if (n % 3 != 0) throw DomainError("sample_appendix_b: n must be divisible by 3");
    if (n < 3 || d < 1) throw DomainError("sample_appendix_b: bad parameters");
    Rng rng(seed);
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(d) * (n / 3));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    for (int part = 0; part < d; ++part) {
        rng.shuffle(perm);
        std::vector<std::vector<int>> triples;
        triples.reserve(static_cast<std::size_t>(n) / 3);
        for (int i = 0; i < n; i += 3) {
            std::vector<int> t = {perm[static_cast<std::size_t>(i)],
                                  perm[static_cast<std::size_t>(i + 1)],
                                  perm[static_cast<std::size_t>(i + 2)]};
            std::sort(t.begin(), t.end());
            triples.push_back(std::move(t));
        }
        std::sort(triples.begin(), triples.end());
        edges.insert(edges.end(), triples.begin(), triples.end());
    }
    return Hypergraph(3, n, d, std::move(edges), /*allows_multi=*/true);
}

bool h_eval(const std::vector<bool>& x, const std::vector<bool>& y) {
    if (x.size() != y.size()) throw DomainError("h_eval: length mismatch");
    int sx = 0, sy = 0;
    for (bool b : x) sx += b ? 1 : 0;
    for (bool b : y) sy += b ? 1 : 0;
    return sx == sy + 1;
}

CspInstance build_fn(const ExpanderGraph& expander) {
    const Graph& g = expander.graph;
    const int n = g.n();
    const int d = expander.d;
    // Arc variables: both orientations of every edge, ids by lex order.
    std::map<std::pair<int, int>, int> arc_id;
    {
        std::vector<std::pair<int, int>> arcs;
        for (const auto& [a, b] : g.edges()) {
            arcs.emplace_back(a, b);
            arcs.emplace_back(b, a);
        }
        std::sort(arcs.begin(), arcs.end());
        for (std::size_t i = 0; i < arcs.size(); ++i) arc_id[arcs[i]] = static_cast<int>(i) + 1;
    }
    CspInstance csp;
    csp.d = d;
    csp.var_count = static_cast<int>(arc_id.size());
    auto rows = build_adjacency(g);
    for (int v = 1; v <= n; ++v) {
        CspConstraint c;
        c.vertex = v;
        for (int slot = 0; slot < d; ++slot) {
            int ei = rows[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(slot)];
            if (ei == kNoEdge) throw DomainError("build_fn: expander not regular");
            const auto& [a, b] = g.edges()[static_cast<std::size_t>(ei)];
            int w = a == v ? b : a;
            c.x_vars.push_back(arc_id.at({v, w}));
            c.y_vars.push_back(arc_id.at({w, v}));
        }
        csp.constraints.push_back(std::move(c));
    }
    return csp;
}

bool constraint_satisfied(const CspConstraint& c, const std::vector<bool>& assignment) {
    std::vector<bool> x, y;
    for (int v : c.x_vars) x.push_back(assignment[static_cast<std::size_t>(v - 1)]);
    for (int v : c.y_vars) y.push_back(assignment[static_cast<std::size_t>(v - 1)]);
    return h_eval(x, y);
}

bool csp_satisfied(const CspInstance& csp, const std::vector<bool>& assignment) {
    for (const auto& c : csp.constraints)
        if (!constraint_satisfied(c, assignment)) return false;
    return true;
}

std::optional<std::vector<bool>> csp_brute_force(const CspInstance& csp, int var_limit) {
    if (csp.var_count > var_limit) throw CapacityError("csp_brute_force: over variable limit");
    const std::uint64_t total = 1ULL << csp.var_count;
    std::vector<bool> a(static_cast<std::size_t>(csp.var_count));
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (int i = 0; i < csp.var_count; ++i)
            a[static_cast<std::size_t>(i)] = ((mask >> (csp.var_count - 1 - i)) & 1ULL) != 0;
        if (csp_satisfied(csp, a)) return a;
    }
    return std::nullopt;
}

namespace {

constexpr int kConstTrue = INT32_MAX;
constexpr int kConstFalse = INT32_MIN;

// Clause builder with constant folding.
void push_clause(std::vector<std::vector<int>>& clauses, std::vector<int> lits) {
    std::vector<int> out;
    for (int lit : lits) {
        if (lit == kConstTrue) return;  // clause satisfied
        if (lit == kConstFalse) continue;
        out.push_back(lit);
    }
    if (out.empty()) throw DomainError("csp_to_3cnf: derived an empty clause");
    clauses.push_back(std::move(out));
}

int negate(int lit) {
    if (lit == kConstTrue) return kConstFalse;
    if (lit == kConstFalse) return kConstTrue;
    return -lit;
}

// z <-> a OR (b AND c)
void define_or_and(std::vector<std::vector<int>>& clauses, int z, int a, int b, int c) {
    push_clause(clauses, {negate(z), a, b});
    push_clause(clauses, {negate(z), a, c});
    push_clause(clauses, {negate(a), z});
    push_clause(clauses, {negate(b), negate(c), z});
}

}  // namespace

CnfFormula csp_to_3cnf(const CspInstance& csp) {
    std::vector<std::vector<int>> clauses;
    int next_var = csp.var_count;
    const int d = csp.d;
    for (const auto& con : csp.constraints) {
        // Unary prefix counters: p[i][j] = "at least j of the first i inputs
        // are true" (variables only for 1 <= j <= i).
        auto make_counters = [&](const std::vector<int>& inputs) {
            std::vector<std::vector<int>> p(static_cast<std::size_t>(d) + 1);
            for (int i = 0; i <= d; ++i)
                p[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1,
                                                      kConstFalse);
            p[0][0] = kConstTrue;
            for (int i = 1; i <= d; ++i) {
                p[static_cast<std::size_t>(i)][0] = kConstTrue;
                for (int j = 1; j <= i; ++j) {
                    int z;
                    if (i == 1 && j == 1) {
                        z = inputs[0];  // "at least 1 of first 1" is the input itself
                    } else {
                        z = ++next_var;
                        int prev_same = j <= i - 1 ? p[static_cast<std::size_t>(i - 1)]
                                                      [static_cast<std::size_t>(j)]
                                                   : kConstFalse;
                        int prev_less = p[static_cast<std::size_t>(i - 1)]
                                         [static_cast<std::size_t>(j - 1)];
                        define_or_and(clauses, z, prev_same, prev_less,
                                      inputs[static_cast<std::size_t>(i - 1)]);
                    }
                    p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = z;
                }
            }
            return p;
        };
        auto px = make_counters(con.x_vars);
        auto qy = make_counters(con.y_vars);
        // sum(x) = sum(y) + 1  <=>  for all j in 1..d: P[d][j] <-> Q[d][j-1],
        // plus not Q[d][d].
        for (int j = 1; j <= d; ++j) {
            int pj = px[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)];
            int qj = qy[static_cast<std::size_t>(d)][static_cast<std::size_t>(j - 1)];
            push_clause(clauses, {negate(pj), qj});
            push_clause(clauses, {negate(qj), pj});
        }
        push_clause(clauses,
                    {negate(qy[static_cast<std::size_t>(d)][static_cast<std::size_t>(d)])});
    }
    for (const auto& clause : clauses)
        if (clause.size() > 3) throw DomainError("csp_to_3cnf: clause wider than 3");
    return CnfFormula(next_var, std::move(clauses));
}

CnfFormula random_kc_cnf(int n, int c, std::uint64_t seed) {
    if (n < 3 || c < 1) throw DomainError("random_kc_cnf: bad parameters");
    if ((2 * n * c) % 3 != 0) throw DomainError("random_kc_cnf: 2nc must be divisible by 3");
    Rng rng(seed);
    std::vector<int> slots;
    for (int v = 1; v <= n; ++v) {
        for (int i = 0; i < c; ++i) {
            slots.push_back(v);
            slots.push_back(-v);
        }
    }
    for (int attempt = 0; attempt < 10000; ++attempt) {
        rng.shuffle(slots);
        std::vector<std::vector<int>> clauses;
        bool ok = true;
        for (std::size_t i = 0; ok && i < slots.size(); i += 3) {
            int a = slots[i], b = slots[i + 1], cc = slots[i + 2];
            if (std::abs(a) == std::abs(b) || std::abs(a) == std::abs(cc) ||
                std::abs(b) == std::abs(cc)) {
                ok = false;
                break;
            }
            clauses.push_back({a, b, cc});
        }
        if (!ok) continue;
        return CnfFormula(n, std::move(clauses));
    }
    throw GenerationError("random_kc_cnf: resampling budget exceeded");
}

Graph random_bounded_graph(int n, int delta, int edge_target, std::uint64_t seed) {
    Rng rng(seed);
    std::set<std::pair<int, int>> seen;
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> edges;
    int attempts = 50 * edge_target + 100;
    while (static_cast<int>(edges.size()) < edge_target && attempts-- > 0) {
        int a = static_cast<int>(rng.next_int(1, n));
        int b = static_cast<int>(rng.next_int(1, n));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (seen.count({a, b})) continue;
        if (degree[static_cast<std::size_t>(a)] >= delta ||
            degree[static_cast<std::size_t>(b)] >= delta)
            continue;
        seen.insert({a, b});
        edges.emplace_back(a, b);
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    }
    return Graph(n, delta, std::move(edges));
}

Hypergraph random_bounded_hypergraph(int n, int k, int delta, int edge_target,
                                     std::uint64_t seed) {
    Rng rng(seed);
    std::set<std::vector<int>> seen;
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> edges;
    int attempts = 50 * edge_target + 100;
    while (static_cast<int>(edges.size()) < edge_target && attempts-- > 0) {
        std::set<int> pick;
        while (static_cast<int>(pick.size()) < k) pick.insert(static_cast<int>(rng.next_int(1, n)));
        std::vector<int> e(pick.begin(), pick.end());
        if (seen.count(e)) continue;
        bool fits = true;
        for (int v : e)
            if (degree[static_cast<std::size_t>(v)] >= delta) {
                fits = false;
                break;
            }
        if (!fits) continue;
        seen.insert(e);
        for (int v : e) ++degree[static_cast<std::size_t>(v)];
        edges.push_back(std::move(e));
    }
    return Hypergraph(k, n, delta, std::move(edges));
}

Hypergraph far_bounded_tw_family(int n) {
    if (n % 4 != 0 || n <= 0) throw DomainError("far_bounded_tw_family: n must be divisible by 4");
    std::vector<std::vector<int>> edges;
    for (int block = 0; block < n / 4; ++block) {
        int base = 4 * block;
        for (int skip = 4; skip >= 1; --skip) {
            std::vector<int> e;
            for (int i = 1; i <= 4; ++i)
                if (i != skip) e.push_back(base + i);
            edges.push_back(std::move(e));
        }
    }
    return Hypergraph(3, n, 3, std::move(edges));
}

YesInstance yes_bounded_tw_family(int n, std::uint64_t seed, int delta_bound) {
    if (n < 3) throw DomainError("yes_bounded_tw_family: n must be >= 3");
    Rng rng(seed);
    std::vector<int> part(static_cast<std::size_t>(n));
    for (auto& p : part) p = static_cast<int>(rng.next_int(1, 3));
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    rng.shuffle(order);
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> edges;
    const int bag_size = std::min(4, n);
    for (int start = 0; start + bag_size <= n; ++start) {
        // all rainbow triples within this bag, added with probability 1/2
        for (int i = 0; i < bag_size; ++i) {
            for (int j = i + 1; j < bag_size; ++j) {
                for (int l = j + 1; l < bag_size; ++l) {
                    int a = order[static_cast<std::size_t>(start + i)];
                    int b = order[static_cast<std::size_t>(start + j)];
                    int c = order[static_cast<std::size_t>(start + l)];
                    std::vector<int> e = {a, b, c};
                    std::sort(e.begin(), e.end());
                    bool rainbow = part[static_cast<std::size_t>(a - 1)] !=
                                       part[static_cast<std::size_t>(b - 1)] &&
                                   part[static_cast<std::size_t>(b - 1)] !=
                                       part[static_cast<std::size_t>(c - 1)] &&
                                   part[static_cast<std::size_t>(a - 1)] !=
                                       part[static_cast<std::size_t>(c - 1)];
                    bool draw = rng.next_bool();
                    if (!rainbow || !draw) continue;
                    if (seen.count(e)) continue;
                    if (degree[static_cast<std::size_t>(a)] >= delta_bound ||
                        degree[static_cast<std::size_t>(b)] >= delta_bound ||
                        degree[static_cast<std::size_t>(c)] >= delta_bound)
                        continue;
                    for (int v : e) ++degree[static_cast<std::size_t>(v)];
                    seen.insert(e);
                    edges.push_back(std::move(e));
                }
            }
        }
    }
    Hypergraph h(3, n, delta_bound, std::move(edges));
    return {std::move(h), Coloring(3, std::move(part))};
}

void Manifest::add(const std::string& key, const std::string& value) {
    entries.emplace_back(key, value);
}

void Manifest::add(const std::string& key, std::int64_t value) {
    entries.emplace_back(key, std::to_string(value));
}

std::string Manifest::get(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return v;
    throw ParseError("manifest: missing key " + key);
}

std::string Manifest::str() const {
    std::ostringstream out;
    for (const auto& [k, v] : entries) out << k << '=' << v << '\n';
    return out.str();
}

Manifest Manifest::parse(const std::string& text) {
    Manifest m;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto pos = line.find('=');
        if (pos == std::string::npos) throw ParseError("manifest: bad line: " + line);
        m.entries.emplace_back(line.substr(0, pos), line.substr(pos + 1));
    }
    return m;
}

std::uint64_t payload_digest(const std::string& payload) { return detail::fnv1a(payload); }

std::string target_name(PipelineTarget t) {
    switch (t) {
        case PipelineTarget::ThreeColHypergraph: return "3col-hypergraph";
        case PipelineTarget::ThreePartiteHypergraph: return "3partite-hypergraph";
        case PipelineTarget::IndependenceNumber: return "ind-number";
    }
    return "";
}

std::optional<PipelineTarget> parse_target(const std::string& name) {
    if (name == "3col-hypergraph") return PipelineTarget::ThreeColHypergraph;
    if (name == "3partite-hypergraph") return PipelineTarget::ThreePartiteHypergraph;
    if (name == "ind-number") return PipelineTarget::IndependenceNumber;
    return std::nullopt;
}

PipelineResult hard_instance_pipeline(int n, PipelineTarget target, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw DomainError("hard_instance_pipeline: n must be even and >= 4");
    Manifest manifest;
    manifest.add("pipeline", target_name(target));
    manifest.add("n", n);
    manifest.add("seed", std::to_string(seed));

    const int d = 3;
    std::uint64_t exp_seed = sub_seed(seed, "base-expander");
    ExpanderGraph expander = random_regular_expander(n, d, exp_seed);
    manifest.add("stage", "base-expander");
    manifest.add("d", d);
    manifest.add("expander-seed", std::to_string(exp_seed));
    manifest.add("certificate", certificate_name(expander.certificate));

    CspInstance csp = build_fn(expander);
    manifest.add("stage", "fn-csp");
    manifest.add("csp-vars", csp.var_count);
    manifest.add("csp-constraints", static_cast<std::int64_t>(csp.constraints.size()));

    CnfFormula cnf = csp_to_3cnf(csp);
    manifest.add("stage", "3cnf");
    manifest.add("cnf-vars", cnf.var_count());
    manifest.add("cnf-clauses", cnf.clause_count());

    RegularizeResult reg = regularize(cnf);
    manifest.add("stage", "regularize");
    manifest.add("d-sat", reg.d);
    manifest.add("reg-vars", reg.formula.var_count());
    manifest.add("reg-clauses", reg.formula.clause_count());

    std::uint64_t pool_seed = sub_seed(seed, "pool-expander");
    int pool_vertices = 8 * reg.d * reg.formula.var_count();
    ExpanderGraph pool = random_regular_expander(pool_vertices, 4, pool_seed);
    manifest.add("stage", "pool-expander");
    manifest.add("pool-vertices", pool_vertices);
    manifest.add("pool-seed", std::to_string(pool_seed));
    manifest.add("pool-certificate", certificate_name(pool.certificate));

    reductions::Rho3ColResult col = reductions::rho_3col(reg.formula, pool.graph);
    manifest.add("stage", "rho-3col");
    manifest.add("hypergraph-n", col.h.n());
    manifest.add("hypergraph-delta", col.h.delta_bound());
    manifest.add("hypergraph-m", col.h.edge_count());

    if (target == PipelineTarget::ThreeColHypergraph) {
        return {std::move(col.h), std::move(manifest)};
    }

    // The later targets multiply the vertex count by the primal-graph degree
    // bound; refuse compositions that cannot be materialized at desk scale.
    std::int64_t partite_vertices = static_cast<std::int64_t>(col.h.n()) *
                                    (1 + 2 * col.h.delta_bound());
    if (partite_vertices > 20'000'000)
        throw CapacityError("hard_instance_pipeline: composed instance would have " +
                            std::to_string(partite_vertices) +
                            " vertices; beyond the materialization budget");
    Graph primal = reductions::rho_par_tw(col.h);
    manifest.add("stage", "rho-par-tw");
    manifest.add("graph-delta", primal.delta_bound());
    Hypergraph par = reductions::rho_3par(primal);
    manifest.add("stage", "rho-3par");
    manifest.add("partite-n", par.n());
    manifest.add("partite-delta", par.delta_bound());
    if (target == PipelineTarget::ThreePartiteHypergraph) {
        return {std::move(par), std::move(manifest)};
    }

    Hypergraph ind = reductions::rho_ind(par);
    manifest.add("stage", "rho-ind");
    manifest.add("ind-n", ind.n());
    manifest.add("ind-delta", ind.delta_bound());
    return {std::move(ind), std::move(manifest)};
}

}  // namespace hpt::generators
