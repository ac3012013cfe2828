#ifndef CCOLOR_EXACT_HPP
#define CCOLOR_EXACT_HPP

#include <array>

#include "ccolor/core.hpp"

// Brute-force oracles at desk scale. Subset oracles iterate in increasing
// cardinality with early exit; the partition oracle enumerates restricted
// growth strings. Each is guarded by a hard size limit and throws SizeLimit
// instead of silently grinding.

namespace ccolor {

inline constexpr int kMaxSubsetVertices = 24;     // tau, alpha, multitransversal
inline constexpr int kMaxPartitionVertices = 12;  // upper chromatic number
inline constexpr int kMaxHypertreeVertices = 25;  // decrement via line transversal
inline constexpr int kMaxCnfVariables = 20;       // variable-deletion search

struct SetResult {
    int size = 0;
    std::vector<int> witness;  // lexicographically smallest among optima, sorted
};

// Minimum |S| with |S ∩ E_i| >= w_i for all i.
SetResult exact_multitransversal(const Hypergraph& h, const DemandVector& d);

// Minimum hitting set / maximum edge-free set. Gallai: the two sizes sum to n.
SetResult exact_transversal(const Hypergraph& h);
SetResult exact_independence(const Hypergraph& h);

struct ChiBarResult {
    int chi_bar = 0;
    int decrement = 0;   // n - chi_bar
    CColoring witness;   // lexicographically smallest normalized optimum
};

// Maximum color count over all vertex partitions that leave no edge rainbow.
// Rejects singleton edges: no C-coloring exists for them.
ChiBarResult exact_upper_chromatic(const Hypergraph& h);

struct LineSetResult {
    int decrement = 0;
    std::vector<Line> witness;  // minimum set of host lines whose contraction
                                // puts a monochromatic pair in every edge
};

// Decrement of a hypertree as the minimum transversal of its line hypergraph.
LineSetResult exact_decrement_hypertree(const Hypergraph& h, const HostTree& t);

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;  // signed 1-based literals,
                                              // three distinct variables each
};

CnfFormula validate_cnf(int num_vars, const std::vector<std::array<int, 3>>& clauses);

struct DeletionResult {
    int count = 0;
    std::vector<int> variables;  // 1-based, sorted
};

// Minimum set of variables whose deletion (dropping every clause containing
// the variable in either sign) leaves a satisfiable formula.
DeletionResult min_variable_deletion(const CnfFormula& f);

// Satisfiability of the formula after deleting the given 1-based variables.
bool cnf_satisfiable_after_deletion(const CnfFormula& f, const std::vector<int>& deleted);

}  // namespace ccolor

#endif
