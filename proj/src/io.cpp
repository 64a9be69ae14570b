#include "hpt/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "hpt/errors.hpp"

namespace hpt {

namespace {

// Next non-comment, non-blank line.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == 'c') continue;
        return true;
    }
    return false;
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("hgr: missing header");
    std::istringstream hs(line);
    std::string p, fmt;
    int k, n, delta, m;
    if (!(hs >> p >> fmt >> k >> n >> delta >> m) || p != "p" || fmt != "hgr")
        throw ParseError("hgr: bad header: " + line);
    std::string flag;
    bool multi = false;
    if (hs >> flag) {
        if (flag != "multi") throw ParseError("hgr: bad header flag: " + flag);
        multi = true;
    }
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!next_line(in, line)) throw ParseError("hgr: truncated edge list");
        std::istringstream es(line);
        std::vector<int> e;
        int v;
        while (es >> v) e.push_back(v);
        if (static_cast<int>(e.size()) != k) throw ParseError("hgr: edge arity mismatch: " + line);
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph(k, n, delta, std::move(edges), multi);
    } catch (const DomainError& e) {
        throw ParseError(std::string("hgr: ") + e.what());
    }
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << "p hgr " << h.k() << ' ' << h.n() << ' ' << h.delta_bound() << ' ' << h.edge_count();
    if (h.allows_multi()) out << " multi";
    out << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

Graph read_graph(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("gr: missing header");
    std::istringstream hs(line);
    std::string p, fmt;
    int n, delta, m;
    if (!(hs >> p >> fmt >> n >> delta >> m) || p != "p" || fmt != "gr")
        throw ParseError("gr: bad header: " + line);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!next_line(in, line)) throw ParseError("gr: truncated edge list");
        std::istringstream es(line);
        int a, b;
        if (!(es >> a >> b)) throw ParseError("gr: bad edge line: " + line);
        edges.emplace_back(a, b);
    }
    try {
        return Graph(n, delta, std::move(edges));
    } catch (const DomainError& e) {
        throw ParseError(std::string("gr: ") + e.what());
    }
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p gr " << g.n() << ' ' << g.delta_bound() << ' ' << g.edge_count() << '\n';
    for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

CnfFormula read_dimacs(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("cnf: missing header");
    std::istringstream hs(line);
    std::string p, fmt;
    int n, m;
    if (!(hs >> p >> fmt >> n >> m) || p != "p" || fmt != "cnf")
        throw ParseError("cnf: bad header: " + line);
    std::vector<std::vector<int>> clauses;
    clauses.reserve(static_cast<std::size_t>(m));
    std::vector<int> current;
    int lit;
    int done = 0;
    while (done < m && in >> lit) {
        if (lit == 0) {
            clauses.push_back(current);
            current.clear();
            ++done;
        } else {
            current.push_back(lit);
        }
    }
    if (done != m) throw ParseError("cnf: truncated clause list");
    try {
        return CnfFormula(n, std::move(clauses));
    } catch (const DomainError& e) {
        throw ParseError(std::string("cnf: ") + e.what());
    }
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
    out << "p cnf " << f.var_count() << ' ' << f.clause_count() << '\n';
    for (const auto& clause : f.clauses()) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
}

void write_coloring(std::ostream& out, const Coloring& c) {
    for (int v = 1; v <= c.n(); ++v) out << "s col " << v << ' ' << c.color(v) << '\n';
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::istringstream in(slurp_file(path));
    return read_hypergraph(in);
}

Graph read_graph_file(const std::string& path) {
    std::istringstream in(slurp_file(path));
    return read_graph(in);
}

CnfFormula read_dimacs_file(const std::string& path) {
    std::istringstream in(slurp_file(path));
    return read_dimacs(in);
}

}  // namespace hpt
