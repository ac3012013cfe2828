#include "ccolor/greedy.hpp"

#include <algorithm>
#include <numeric>

namespace ccolor {

int usefulness(const Hypergraph& h, const DemandVector& d,
               const std::vector<int>& selected, int x) {
    if (x < 0 || x >= h.n)
        throw InvalidInput("vertex " + std::to_string(x) + " out of range");
    if (std::find(selected.begin(), selected.end(), x) != selected.end())
        throw InvalidInput("usefulness of an already selected vertex is undefined");
    if (static_cast<int>(d.w.size()) != h.m())
        throw InvalidInput("demand vector size differs from edge count");

    std::vector<char> in_y(h.n, 0);
    for (int v : selected) in_y[v] = 1;
    int u = 0;
    for (int i = 0; i < h.m(); ++i) {
        const auto& e = h.edges[i];
        if (!std::binary_search(e.begin(), e.end(), x)) continue;
        int covered = 0;
        for (int v : e) covered += in_y[v];
        if (d.w[i] - covered > 0) ++u;
    }
    return u;
}

std::vector<int> greedy_multitransversal(const Hypergraph& h, const DemandVector& d) {
    // re-validates so raw demand vectors are rejected up front
    DemandVector checked = make_demands(h, d.w);

    std::vector<int> residual = checked.w;
    std::vector<int> use(h.n, 0);  // usefulness, maintained incrementally
    for (const auto& e : h.edges)
        for (int v : e) ++use[v];

    std::vector<char> selected(h.n, 0);
    std::vector<int> order;
    for (;;) {
        int best = -1;
        for (int v = 0; v < h.n; ++v)
            if (!selected[v] && use[v] > 0 && (best == -1 || use[v] > use[best])) best = v;
        if (best == -1) break;
        selected[best] = 1;
        order.push_back(best);
        for (int i = 0; i < h.m(); ++i) {
            const auto& e = h.edges[i];
            if (residual[i] == 0 || !std::binary_search(e.begin(), e.end(), best)) continue;
            if (--residual[i] == 0)
                for (int v : e)
                    if (!selected[v]) --use[v];
        }
    }
    return order;
}

std::vector<int> greedy_k_transversal(const Hypergraph& h, int k) {
    if (k < 1) throw InvalidInput("k must be positive");
    for (int i = 0; i < h.m(); ++i)
        if (static_cast<int>(h.edges[i].size()) < k)
            throw InvalidInput("k=" + std::to_string(k) + " exceeds edge " +
                               std::to_string(i + 1) + " of size " +
                               std::to_string(h.edges[i].size()));
    if (h.m() == 0) return {};
    return greedy_multitransversal(h, make_demands(h, std::vector<int>(h.m(), k)));
}

std::vector<int> greedy_transversal(const Hypergraph& h) {
    return greedy_k_transversal(h, 1);
}

Fraction harmonic_fraction(int w) {
    if (w < 0) throw InvalidInput("harmonic index must be nonnegative");
    if (w > 40) throw SizeLimit("exact harmonic fraction supported up to w = 40");
    Fraction f{0, 1};
    for (int i = 1; i <= w; ++i) {
        // num/den + 1/i; intermediates stay below 2^63 for w <= 40
        long long num = static_cast<long long>(static_cast<__int128>(f.num) * i + f.den);
        long long den = static_cast<long long>(static_cast<__int128>(f.den) * i);
        long long g = std::gcd(num, den);
        f.num = num / g;
        f.den = den / g;
    }
    return f;
}

double harmonic_sum(int w) {
    double s = 0.0;
    for (int i = 1; i <= w; ++i) s += 1.0 / i;
    return s;
}

}  // namespace ccolor
