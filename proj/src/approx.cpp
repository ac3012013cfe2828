#include "ccolor/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ccolor/greedy.hpp"

namespace ccolor {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int u, int v) { parent[find(u)] = find(v); }
};

}  // namespace

CColoring coloring_from_line_set(const Hypergraph& h, const HostTree& t,
                                 const std::vector<Line>& line_set) {
    if (t.n != h.n) throw InvalidInput("host tree vertex count differs from hypergraph");
    for (const auto& l : line_set)
        if (!std::binary_search(t.lines.begin(), t.lines.end(), l))
            throw InvalidInput("(" + std::to_string(l.first) + "," +
                               std::to_string(l.second) + ") is not a host line");
    for (int i = 0; i < h.m(); ++i) {
        const auto& e = h.edges[i];
        bool hit = false;
        for (const auto& [u, v] : line_set)
            if (std::binary_search(e.begin(), e.end(), u) &&
                std::binary_search(e.begin(), e.end(), v)) {
                hit = true;
                break;
            }
        if (!hit)
            throw InvalidInput("line set is not a transversal of the line hypergraph: edge " +
                               std::to_string(i + 1) + " stays rainbow");
    }
    Dsu dsu(h.n);
    for (const auto& [u, v] : line_set) dsu.unite(u, v);
    std::vector<int> raw(h.n);
    for (int v = 0; v < h.n; ++v) raw[v] = dsu.find(v);
    return normalize_coloring(raw);
}

CColoring coloring_from_2transversal(const Hypergraph& h, const std::vector<int>& s) {
    DemandVector two = make_demands(h, std::vector<int>(h.m(), 2));
    if (!verify_multitransversal(h, two, s))
        throw InvalidInput("set is not a 2-transversal");
    std::vector<int> raw(h.n);
    std::vector<char> in_s(h.n, 0);
    for (int v : s) in_s[v] = 1;
    int fresh = 1;
    for (int v = 0; v < h.n; ++v) raw[v] = in_s[v] ? 0 : fresh++;
    return normalize_coloring(raw);
}

LineHypergraph build_line_hypergraph(const Hypergraph& h, const HostTree& t) {
    std::string diag;
    if (!verify_host_tree(h, t, &diag)) throw InvalidInput("invalid host tree: " + diag);
    LineHypergraph star;
    star.lines = t.lines;
    std::vector<std::vector<int>> images(h.m());
    for (int j = 0; j < static_cast<int>(t.lines.size()); ++j) {
        const auto& [u, v] = t.lines[j];
        for (int i = 0; i < h.m(); ++i) {
            const auto& e = h.edges[i];
            if (std::binary_search(e.begin(), e.end(), u) &&
                std::binary_search(e.begin(), e.end(), v))
                images[i].push_back(j);
        }
    }
    // nonempty because each edge has >= 2 vertices and induces a subtree
    star.hg = relaxed_hypergraph(h.n - 1, images);
    return star;
}

DecApproxResult approx_decrement_general(const Hypergraph& h) {
    if (h.m() < 1)
        throw InvalidInput("the general pipeline needs at least one edge");
    std::vector<int> t = greedy_k_transversal(h, 2);
    DecApproxResult r;
    r.coloring = coloring_from_2transversal(h, t);
    r.bound = 2.0 + 2.0 * std::log(2.0 * h.m());
    return r;
}

DecApproxResult approx_decrement_hypertree(const Hypergraph& h, const HostTree& t) {
    std::string diag;
    if (!verify_host_tree(h, t, &diag)) throw InvalidInput("invalid host tree: " + diag);
    LineHypergraph star = build_line_hypergraph(h, t);
    std::vector<int> picked = greedy_transversal(star.hg);
    std::vector<Line> lines;
    lines.reserve(picked.size());
    for (int j : picked) lines.push_back(star.lines[j]);
    DecApproxResult r;
    r.coloring = coloring_from_line_set(h, t, lines);
    r.bound = h.m() == 0 ? 1.0 : 1.0 + std::log(static_cast<double>(h.m()));
    return r;
}

StripResult strip_center(const Hypergraph& h) {
    auto center = hyperstar_center(h);
    if (!center) throw InvalidInput("not a hyperstar: no vertex lies in every edge");
    StripResult r;
    r.center = *center;
    r.original_ids.reserve(h.n - 1);
    for (int v = 0; v < h.n; ++v)
        if (v != r.center) r.original_ids.push_back(v);
    std::vector<std::vector<int>> edges(h.m());
    for (int i = 0; i < h.m(); ++i)
        for (int v : h.edges[i])
            if (v != r.center) edges[i].push_back(v < r.center ? v : v - 1);
    r.reduced = relaxed_hypergraph(h.n - 1, edges);
    return r;
}

CColoring hyperstar_coloring_from_independent_set(const Hypergraph& h,
                                                  const std::vector<int>& s) {
    auto center = hyperstar_center(h);
    if (!center) throw InvalidInput("not a hyperstar: no vertex lies in every edge");
    std::vector<char> in_s(h.n, 0);
    for (int v : s) {
        if (v < 0 || v >= h.n)
            throw InvalidInput("vertex " + std::to_string(v) + " out of range");
        if (v == *center) throw InvalidInput("independent set must exclude the center");
        in_s[v] = 1;
    }
    for (int i = 0; i < h.m(); ++i) {
        bool outside = false;  // some non-center vertex of the edge stays unpicked
        for (int v : h.edges[i])
            if (v != *center && !in_s[v]) {
                outside = true;
                break;
            }
        if (!outside)
            throw InvalidInput("set is not independent in the stripped hypergraph: edge " +
                               std::to_string(i + 1) + " minus the center is covered");
    }
    std::vector<int> raw(h.n);
    int fresh = 1;
    for (int v = 0; v < h.n; ++v) raw[v] = in_s[v] ? fresh++ : 0;
    return normalize_coloring(raw);
}

}  // namespace ccolor
