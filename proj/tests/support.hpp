#ifndef CCOLOR_TESTS_SUPPORT_HPP
#define CCOLOR_TESTS_SUPPORT_HPP

#include <algorithm>
#include <climits>
#include <functional>
#include <vector>

#include "ccolor/core.hpp"

// Test-only reference oracle, kept independent of the library's subset
// enumeration: branch on an unmet edge, forcing one of its unchosen vertices
// into the solution, with a best-size cutoff.

namespace ccolor::testing {

inline int naive_multitransversal(const Hypergraph& h, const std::vector<int>& w) {
    int best = INT_MAX;
    std::vector<char> chosen(h.n, 0);
    std::function<void(int)> rec = [&](int size) {
        if (size >= best) return;
        int unmet = -1;
        for (int i = 0; i < h.m(); ++i) {
            int have = 0;
            for (int v : h.edges[i]) have += chosen[v];
            if (have < w[i]) {
                unmet = i;
                break;
            }
        }
        if (unmet == -1) {
            best = size;
            return;
        }
        for (int v : h.edges[unmet]) {
            if (chosen[v]) continue;
            chosen[v] = 1;
            rec(size + 1);
            chosen[v] = 0;
        }
    };
    rec(0);
    return best;
}

inline int naive_transversal(const Hypergraph& h) {
    return naive_multitransversal(h, std::vector<int>(h.edges.size(), 1));
}

// Unpruned partition enumeration in restricted-growth order; returns the
// maximum valid color count and the first (lex-smallest) witness reaching it.
inline std::pair<int, std::vector<int>> naive_chi_bar(const Hypergraph& h) {
    int best = 0;
    std::vector<int> witness, cols(h.n, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == h.n) {
            for (const auto& e : h.edges) {
                bool repeat = false;
                for (std::size_t a = 0; a + 1 < e.size() && !repeat; ++a)
                    for (std::size_t b = a + 1; b < e.size(); ++b)
                        if (cols[e[a]] == cols[e[b]]) {
                            repeat = true;
                            break;
                        }
                if (!repeat) return;
            }
            if (used > best) {
                best = used;
                witness = cols;
            }
            return;
        }
        for (int c = 1; c <= used + 1; ++c) {
            cols[i] = c;
            rec(i + 1, std::max(used, c));
        }
    };
    rec(0, 0);
    return {best, witness};
}

}  // namespace ccolor::testing

#endif
