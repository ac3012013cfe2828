#ifndef CCOLOR_GEN_HPP
#define CCOLOR_GEN_HPP

#include <cstdint>

#include "ccolor/core.hpp"
#include "ccolor/exact.hpp"

// Instance generators: the tight families behind the decrement/2-transversal
// sandwich, the CNF gadget hypertree, and seeded random instances for
// property tests. Everything is a pure function of (parameters, seed).

namespace ccolor {

// H = (X, {X}): the vertex set is the only edge. Requires n >= 2.
Hypergraph gen_single_edge(int n);

// S = {0..s-1} plus all triples meeting S exactly twice. S is then the unique
// smallest 2-transversal and the decrement is s - 1. Requires 2 <= s <= n-2.
Hypergraph gen_prop3_upper_family(int n, int s);

struct HypertreeInstance {
    Hypergraph hg;
    HostTree tree;
};

// n = 3k+1 with edges {3r,3r+1,3r+2} then {3r+1,3r+2,3r+3} (0-based) over
// the path host tree; 2-transversal number 2k, decrement k.
HypertreeInstance gen_prop3_lower_family(int k);

// Hypertree encoding of a 3-CNF: center c*, one branch per variable with
// vertices x', t, f. Variable-edges {x',t,f} come first; each clause-edge
// holds c* plus, per literal, x' and t for a positive or x' and f for a
// negative occurrence (7 vertices).
struct GadgetInstance {
    Hypergraph hg;
    HostTree tree;
    int center = 0;
    std::vector<int> var_vertex;    // x'_i by 0-based variable index
    std::vector<int> true_vertex;   // t_i
    std::vector<int> false_vertex;  // f_i
    int variable_edge_count = 0;    // edges [0, v) are variable-edges,
                                    // the rest clause-edges in clause order
};

GadgetInstance gen_sat_gadget(const CnfFormula& f);

// Uniformly random labeled host tree (random Prüfer sequence), then m edges
// grown as random subtrees of size 2..max_edge_size (random root, seeded
// choice among frontier lines). Repeated edges are possible.
HypertreeInstance gen_random_hypertree(int n, int m, int max_edge_size, std::uint64_t seed);

// m distinct edges sampled uniformly among the subsets with size in
// [min_size, max_size]. Fails if fewer than m such subsets exist.
Hypergraph gen_random_hypergraph(int n, int m, int min_size, int max_size,
                                 std::uint64_t seed);

}  // namespace ccolor

#endif
