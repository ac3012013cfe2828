#include "ccolor/core.hpp"

#include <algorithm>
#include <numeric>

namespace ccolor {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    // false if u and v were already connected
    bool unite(int u, int v) {
        u = find(u);
        v = find(v);
        if (u == v) return false;
        parent[u] = v;
        return true;
    }
};

Hypergraph build_hypergraph(int n, const std::vector<std::vector<int>>& raw_edges,
                            int min_edge_size) {
    if (n < 0) throw InvalidInput("vertex count must be nonnegative");
    Hypergraph h;
    h.n = n;
    h.edges.reserve(raw_edges.size());
    for (std::size_t i = 0; i < raw_edges.size(); ++i) {
        std::vector<int> e = raw_edges[i];
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (int v : e) {
            if (v < 0 || v >= n)
                throw InvalidInput("edge " + std::to_string(i + 1) + ": vertex id " +
                                   std::to_string(v) + " out of range [0," +
                                   std::to_string(n) + ")");
        }
        if (static_cast<int>(e.size()) < min_edge_size)
            throw InvalidInput("edge " + std::to_string(i + 1) + " has size " +
                               std::to_string(e.size()) + " after deduplication (minimum " +
                               std::to_string(min_edge_size) + ")");
        h.edges.push_back(std::move(e));
    }
    return h;
}

}  // namespace

Hypergraph validate_hypergraph(int n, const std::vector<std::vector<int>>& raw_edges) {
    return build_hypergraph(n, raw_edges, 2);
}

Hypergraph relaxed_hypergraph(int n, const std::vector<std::vector<int>>& raw_edges) {
    return build_hypergraph(n, raw_edges, 1);
}

HostTree make_host_tree(int n, std::vector<Line> lines) {
    if (n < 1) throw InvalidInput("host tree needs at least one vertex");
    for (auto& [u, v] : lines) {
        if (u == v) throw InvalidInput("host line is a loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw InvalidInput("host line (" + std::to_string(u) + "," + std::to_string(v) +
                               ") out of range");
    }
    std::sort(lines.begin(), lines.end());
    if (std::adjacent_find(lines.begin(), lines.end()) != lines.end())
        throw InvalidInput("duplicate host line");
    if (static_cast<int>(lines.size()) != n - 1)
        throw InvalidInput("host tree on " + std::to_string(n) + " vertices needs " +
                           std::to_string(n - 1) + " lines, got " +
                           std::to_string(lines.size()));
    return HostTree{n, std::move(lines)};
}

CColoring normalize_coloring(const std::vector<int>& raw) {
    CColoring c;
    c.colors.resize(raw.size());
    std::vector<std::pair<int, int>> seen;  // (raw color, normalized id)
    for (std::size_t i = 0; i < raw.size(); ++i) {
        int id = 0;
        for (const auto& [orig, norm] : seen)
            if (orig == raw[i]) {
                id = norm;
                break;
            }
        if (id == 0) {
            id = static_cast<int>(seen.size()) + 1;
            seen.emplace_back(raw[i], id);
        }
        c.colors[i] = id;
    }
    c.k = static_cast<int>(seen.size());
    return c;
}

DemandVector make_demands(const Hypergraph& h, std::vector<int> w) {
    if (static_cast<int>(w.size()) != h.m())
        throw InvalidInput("demand vector has " + std::to_string(w.size()) +
                           " entries for " + std::to_string(h.m()) + " edges");
    DemandVector d;
    for (int i = 0; i < h.m(); ++i) {
        if (w[i] < 1)
            throw InvalidInput("demand for edge " + std::to_string(i + 1) +
                               " must be positive");
        if (w[i] > static_cast<int>(h.edges[i].size()))
            throw InvalidInput("infeasible demand " + std::to_string(w[i]) + " for edge " +
                               std::to_string(i + 1) + " of size " +
                               std::to_string(h.edges[i].size()));
        d.total += w[i];
    }
    d.w = std::move(w);
    return d;
}

int decrement_of_coloring(const CColoring& c) { return c.n() - c.k; }

bool verify_c_coloring(const Hypergraph& h, const CColoring& c) {
    if (c.n() != h.n)
        throw InvalidInput("coloring has " + std::to_string(c.n()) + " entries for " +
                           std::to_string(h.n) + " vertices");
    for (const auto& e : h.edges) {
        bool repeat = false;
        for (std::size_t a = 0; a < e.size() && !repeat; ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                if (c.colors[e[a]] == c.colors[e[b]]) {
                    repeat = true;
                    break;
                }
        if (!repeat) return false;
    }
    return true;
}

bool verify_host_tree(const Hypergraph& h, const HostTree& t, std::string* diag) {
    auto fail = [&](const std::string& why) {
        if (diag) *diag = why;
        return false;
    };
    if (t.n != h.n) return fail("host tree vertex count differs from hypergraph");
    if (static_cast<int>(t.lines.size()) != t.n - 1)
        return fail("line count is not n-1");

    Dsu dsu(t.n);
    for (const auto& [u, v] : t.lines)
        if (!dsu.unite(u, v))
            return fail("lines contain a cycle through (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
    // n-1 acyclic lines on n vertices are necessarily spanning.

    // adjacency restricted to each edge: a subtree check by DFS
    std::vector<std::vector<int>> adj(t.n);
    for (const auto& [u, v] : t.lines) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> in_edge(t.n, 0), seen(t.n, 0);
    for (int i = 0; i < h.m(); ++i) {
        const auto& e = h.edges[i];
        for (int v : e) in_edge[v] = 1;
        std::vector<int> stack{e[0]};
        seen[e[0]] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v])
                if (in_edge[u] && !seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        for (int v : e) in_edge[v] = seen[v] = 0;
        if (reached != e.size())
            return fail("edge " + std::to_string(i + 1) + " induces a disconnected subgraph");
    }
    if (diag) diag->clear();
    return true;
}

std::vector<Line> monochromatic_lines(const HostTree& t, const CColoring& c) {
    if (c.n() != t.n)
        throw InvalidInput("coloring size differs from host tree vertex count");
    std::vector<Line> mono;
    for (const auto& l : t.lines)
        if (c.colors[l.first] == c.colors[l.second]) mono.push_back(l);
    return mono;
}

std::optional<int> hyperstar_center(const Hypergraph& h) {
    if (h.m() == 0) throw InvalidInput("center of an edgeless hypergraph is meaningless");
    std::vector<int> common = h.edges[0];
    std::vector<int> next;
    for (int i = 1; i < h.m() && !common.empty(); ++i) {
        next.clear();
        std::set_intersection(common.begin(), common.end(), h.edges[i].begin(),
                              h.edges[i].end(), std::back_inserter(next));
        common.swap(next);
    }
    if (common.empty()) return std::nullopt;
    return common.front();  // edges are sorted, so this is the smallest id
}

int upper_chromatic_2uniform(const Hypergraph& h) {
    for (const auto& e : h.edges)
        if (e.size() != 2)
            throw InvalidInput("hypergraph is not 2-uniform: edge of size " +
                               std::to_string(e.size()));
    Dsu dsu(h.n);
    int components = h.n;
    for (const auto& e : h.edges)
        if (dsu.unite(e[0], e[1])) --components;
    return components;
}

bool verify_multitransversal(const Hypergraph& h, const DemandVector& d,
                             const std::vector<int>& s) {
    if (static_cast<int>(d.w.size()) != h.m())
        throw InvalidInput("demand vector size differs from edge count");
    std::vector<char> in_s(h.n, 0);
    for (int v : s) {
        if (v < 0 || v >= h.n)
            throw InvalidInput("witness vertex " + std::to_string(v) + " out of range");
        in_s[v] = 1;
    }
    for (int i = 0; i < h.m(); ++i) {
        int hit = 0;
        for (int v : h.edges[i]) hit += in_s[v];
        if (hit < d.w[i]) return false;
    }
    return true;
}

}  // namespace ccolor
