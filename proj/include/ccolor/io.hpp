#ifndef CCOLOR_IO_HPP
#define CCOLOR_IO_HPP

#include <iosfwd>
#include <string>

#include "ccolor/core.hpp"
#include "ccolor/exact.hpp"

// HGX instance format (line-oriented plain text, 1-based ids on disk):
//
//   hg <n> <m>
//   <m edge lines of space-separated vertex ids>
//   host                          (optional; followed by n-1 lines "u v")
//   demands <w_1> ... <w_m>       (optional, one line)
//
// A line whose first non-blank character is '#' is a comment, anywhere.
// No standard hypergraph format carries host trees and per-edge demands
// together, hence this one.

namespace ccolor {

struct Instance {
    Hypergraph hg;
    std::optional<HostTree> tree;
    std::optional<DemandVector> demands;

    bool operator==(const Instance& o) const {
        return hg == o.hg && tree == o.tree &&
               (demands.has_value() == o.demands.has_value()) &&
               (!demands || demands->w == o.demands->w);
    }
};

Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);

// Canonical text: sections in hg/host/demands order, ids 1-based, vertices
// within an edge ascending. parse(render(x)) == x.
std::string render_instance(const Instance& inst);

// Standard DIMACS CNF: "p cnf <vars> <clauses>", 'c' comment lines, clauses
// as signed 1-based literals terminated by 0 (line breaks are free).
// Clauses must have exactly three distinct variables.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);

// Witness lines as printed by the CLI and accepted back by `verify`:
//   coloring <c_1> ... <c_n>
//   transversal <v_1> ... <v_k>      (1-based vertex ids; checked with k=1)
//   multitransversal <v_1> ... <v_k> (checked against demands or --k)
//   independent-set <v_1> ... <v_k>
//   lines <u_1> <v_1> <u_2> <v_2> ...
//   variables <x_1> ... <x_k>        (1-based CNF variables)
enum class WitnessKind {
    Coloring,
    Transversal,
    Multitransversal,
    IndependentSet,
    Lines,
    Variables
};

struct WitnessItem {
    WitnessKind kind;
    std::vector<int> values;  // ids already converted to 0-based
                              // (colors and CNF variables stay as written)
};

std::vector<WitnessItem> parse_witness(std::istream& in);

std::string format_vertex_set(std::vector<int> s);  // sorted, 1-based
std::string format_coloring(const CColoring& c);
std::string format_lines(std::vector<Line> lines);  // sorted, 1-based pairs

}  // namespace ccolor

#endif
