#ifndef CCOLOR_CORE_HPP
#define CCOLOR_CORE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Core instance model for C-colorings of hypergraphs.
//
// Vertices are 0-based contiguous integers; file formats use 1-based ids
// and conversion is the parser's job. All types are immutable after
// construction and every operation is a pure function of its inputs.

namespace ccolor {

// Malformed instances, violated preconditions, bad witnesses. CLI exit 1.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact oracle was asked to enumerate beyond its hard size guard. CLI exit 2.
struct SizeLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Host-graph edge, normalized so first < second.
using Line = std::pair<int, int>;

struct Hypergraph {
    int n = 0;                            // vertices are 0..n-1
    std::vector<std::vector<int>> edges;  // each sorted ascending, ids distinct

    int m() const { return static_cast<int>(edges.size()); }
    bool operator==(const Hypergraph&) const = default;
};

// Strict factory: sorts and deduplicates vertices within each edge, then
// requires every edge to have size >= 2 and all ids < n. Isolated vertices
// and m = 0 are fine.
Hypergraph validate_hypergraph(int n, const std::vector<std::vector<int>>& raw_edges);

// Relaxed factory: identical except edges of size 1 are permitted. Reduced
// hypergraphs (center-stripped hyperstars, line hypergraphs of host stars)
// can carry singleton edges; tau and alpha stay well-defined on them, so the
// exact oracles and the unit-demand greedy accept relaxed instances.
// C-coloring operations do not: a singleton edge is never C-colorable.
Hypergraph relaxed_hypergraph(int n, const std::vector<std::vector<int>>& raw_edges);

struct HostTree {
    int n = 0;
    std::vector<Line> lines;  // exactly n-1 pairs, normalized and sorted

    bool operator==(const HostTree&) const = default;
};

// Shape-level factory: normalizes pairs, sorts, rejects loops, duplicates,
// out-of-range ids and wrong line counts. Whether the lines actually form a
// spanning tree is the job of verify_host_tree.
HostTree make_host_tree(int n, std::vector<Line> lines);

struct CColoring {
    std::vector<int> colors;  // colors[v] in 1..k, relabeled by first appearance
    int k = 0;                // number of distinct colors

    int n() const { return static_cast<int>(colors.size()); }
    bool operator==(const CColoring&) const = default;
};

// Relabels colors 1..k in order of first appearance. Idempotent; makes
// witness outputs byte-reproducible.
CColoring normalize_coloring(const std::vector<int>& raw);

struct DemandVector {
    std::vector<int> w;     // one demand per edge
    long long total = 0;    // sum of the demands
};

// Validates one positive demand per edge with w_i <= |E_i|; anything else
// has no solution and is rejected here rather than looped on later.
DemandVector make_demands(const Hypergraph& h, std::vector<int> w);

// n - k; never negative for a normalized coloring.
int decrement_of_coloring(const CColoring& c);

// True iff every edge contains two distinct vertices of equal color.
// Throws InvalidInput on a length mismatch.
bool verify_c_coloring(const Hypergraph& h, const CColoring& c);

// True iff t.lines span all n vertices acyclically and every edge of h
// induces a connected subtree. On failure, *diag (when given) names the
// cycle/disconnection or the first offending edge.
bool verify_host_tree(const Hypergraph& h, const HostTree& t, std::string* diag = nullptr);

// { uv in t.lines : c(u) = c(v) }, in line order.
std::vector<Line> monochromatic_lines(const HostTree& t, const CColoring& c);

// Smallest vertex contained in every edge, or nullopt. Throws on m = 0,
// where "center" is meaningless.
std::optional<int> hyperstar_center(const Hypergraph& h);

// Number of connected components of (X, E); equals the maximum C-coloring
// color count when every edge has size exactly 2. Throws otherwise.
int upper_chromatic_2uniform(const Hypergraph& h);

// True iff |s ∩ E_i| >= w_i for every edge. Repeated ids in s are ignored.
bool verify_multitransversal(const Hypergraph& h, const DemandVector& d,
                             const std::vector<int>& s);

}  // namespace ccolor

#endif
