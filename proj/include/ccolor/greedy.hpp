#ifndef CCOLOR_GREEDY_HPP
#define CCOLOR_GREEDY_HPP

#include "ccolor/core.hpp"

// Greedy construction of multiple transversals: repeatedly pick the vertex
// lying in the most edges whose demand is still unmet. The result has at
// most H_W = sum_{i=1..W} 1/i times the optimal size, W the total demand.

namespace ccolor {

// |{ E_i : x in E_i and w_i - |E_i ∩ selected| > 0 }|. Throws if x is
// already selected or out of range.
int usefulness(const Hypergraph& h, const DemandVector& d,
               const std::vector<int>& selected, int x);

// Vertices in selection order; ties go to the smallest id, so identical
// inputs yield identical outputs. Stops once every usefulness is 0, after
// at most min(n, W) selections.
std::vector<int> greedy_multitransversal(const Hypergraph& h, const DemandVector& d);

// Uniform demand w_i = k. Requires 1 <= k <= min edge size.
std::vector<int> greedy_k_transversal(const Hypergraph& h, int k);

// Plain hitting set, k = 1. Singleton edges are acceptable here.
std::vector<int> greedy_transversal(const Hypergraph& h);

// Exact rational H_w = sum_{i=1..w} 1/i, for tolerance-free ratio checks.
struct Fraction {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

Fraction harmonic_fraction(int w);  // guarded to w <= 40 to keep int64 exact
double harmonic_sum(int w);

}  // namespace ccolor

#endif
