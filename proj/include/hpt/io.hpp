#pragma once

#include <iosfwd>
#include <string>

#include "hpt/cnf.hpp"
#include "hpt/hypergraph.hpp"

namespace hpt {

// Hypergraph text format:
//   p hgr <k> <n> <delta> <m> [multi]
// followed by m lines of k ascending vertex ids; line order is the global
// ordering. Lines starting with 'c' are comments. Writers emit the canonical
// form (no comments), so canonical files round-trip byte-identically.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

// Graph format: p gr <n> <delta> <m>, then m ascending pair lines.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// DIMACS CNF: p cnf <n> <m>, clause lines of signed ints terminated by 0.
CnfFormula read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const CnfFormula& f);

// Witness colorings serialize as "s col <v> <color>" lines.
void write_coloring(std::ostream& out, const Coloring& c);

// File helpers (throw ParseError on unreadable paths).
std::string slurp_file(const std::string& path);
void spit_file(const std::string& path, const std::string& content);
Hypergraph read_hypergraph_file(const std::string& path);
Graph read_graph_file(const std::string& path);
CnfFormula read_dimacs_file(const std::string& path);

}  // namespace hpt
