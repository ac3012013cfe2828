#ifndef CCOLOR_APPROX_HPP
#define CCOLOR_APPROX_HPP

#include "ccolor/core.hpp"

// Coloring pipelines with proved ratio bounds on the decrement n - k:
//   general hypergraphs  — greedy 2-transversal, one shared class, 2+2ln(2m);
//   hypertrees           — greedy transversal of the line hypergraph, 1+ln m;
//   hyperstars           — strip the center, everything reduces to tau/alpha.
// Reported bounds use the natural logarithm.

namespace ccolor {

// Auxiliary hypergraph on the host-tree lines: vertex j stands for lines[j],
// and the image of edge E_i is every line with both endpoints in E_i.
// Images can be singletons (host stars), so hg is a relaxed hypergraph.
struct LineHypergraph {
    Hypergraph hg;
    std::vector<Line> lines;
};

struct DecApproxResult {
    CColoring coloring;
    double bound = 0.0;  // proven multiplicative ratio on the decrement
};

// One class per connected component of (X, lines) after keeping exactly the
// given lines; a valid C-coloring with decrement |line_set|. Throws unless
// every edge contains both endpoints of some kept line.
CColoring coloring_from_line_set(const Hypergraph& h, const HostTree& t,
                                 const std::vector<Line>& line_set);

// The 2-transversal becomes one color class, everything else a singleton:
// n - |s| + 1 colors. Throws if s misses some edge twice.
CColoring coloring_from_2transversal(const Hypergraph& h, const std::vector<int>& s);

LineHypergraph build_line_hypergraph(const Hypergraph& h, const HostTree& t);

// Requires m >= 1; achieved decrement is |greedy 2-transversal| - 1.
DecApproxResult approx_decrement_general(const Hypergraph& h);

// Requires a valid host tree; for m = 0 the all-singleton coloring is exact
// and the reported bound is 1.
DecApproxResult approx_decrement_hypertree(const Hypergraph& h, const HostTree& t);

struct StripResult {
    Hypergraph reduced;             // relaxed: stripping size-2 edges leaves singletons
    int center = -1;                // original id of the removed vertex
    std::vector<int> original_ids;  // reduced vertex -> original vertex
};

// Removes the hyperstar center from the vertex set and every edge.
StripResult strip_center(const Hypergraph& h);

// s (original ids, center excluded, independent in the stripped hypergraph)
// keeps a private color each; the rest of X is one class. |s| + 1 colors.
CColoring hyperstar_coloring_from_independent_set(const Hypergraph& h,
                                                  const std::vector<int>& s);

// Output bundle for the CLI and the bench harness.
struct ApproxReport {
    std::string algo;
    std::optional<CColoring> coloring;
    std::optional<std::vector<int>> set;
    long long value = 0;
    std::optional<long long> oracle;
    double bound = 0.0;
};

}  // namespace ccolor

#endif
