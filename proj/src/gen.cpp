#include "ccolor/gen.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

namespace ccolor {

namespace {

// mt19937_64 output is pinned by the standard; the distributions are not,
// so bounded draws are done by rejection here.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t below(std::uint64_t k) {
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % k;
        std::uint64_t x;
        do {
            x = eng();
        } while (x >= limit);
        return x % k;
    }
    int below_int(int k) { return static_cast<int>(below(static_cast<std::uint64_t>(k))); }
};

constexpr std::uint64_t kCountCap = 1'000'000'000'000'000'000ULL;

std::uint64_t binom_capped(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > kCountCap / static_cast<std::uint64_t>(n - k + i)) return kCountCap;
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (r >= kCountCap) return kCountCap;
    }
    return r;
}

std::vector<Line> random_pruefer_tree(int n, Rng& rng) {
    if (n == 1) return {};
    if (n == 2) return {{0, 1}};
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = rng.below_int(n);
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<Line> lines;
    lines.reserve(n - 1);
    for (int s : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        lines.emplace_back(std::min(leaf, s), std::max(leaf, s));
        if (--degree[s] == 1) leaves.insert(s);
    }
    int u = *leaves.begin(), v = *std::next(leaves.begin());
    lines.emplace_back(std::min(u, v), std::max(u, v));
    return lines;
}

}  // namespace

Hypergraph gen_single_edge(int n) {
    if (n < 2) throw InvalidInput("single-edge family needs n >= 2");
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return validate_hypergraph(n, {all});
}

Hypergraph gen_prop3_upper_family(int n, int s) {
    if (s < 2 || s > n - 2)
        throw InvalidInput("upper family needs 2 <= s <= n-2");
    std::vector<std::vector<int>> edges;
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b)
            for (int c = s; c < n; ++c) edges.push_back({a, b, c});
    return validate_hypergraph(n, edges);
}

HypertreeInstance gen_prop3_lower_family(int k) {
    if (k < 1) throw InvalidInput("lower family needs k >= 1");
    int n = 3 * k + 1;
    std::vector<std::vector<int>> edges;
    for (int r = 0; r < k; ++r) edges.push_back({3 * r, 3 * r + 1, 3 * r + 2});
    for (int r = 0; r < k; ++r) edges.push_back({3 * r + 1, 3 * r + 2, 3 * r + 3});
    std::vector<Line> path;
    for (int v = 0; v + 1 < n; ++v) path.emplace_back(v, v + 1);
    return HypertreeInstance{validate_hypergraph(n, edges), make_host_tree(n, path)};
}

GadgetInstance gen_sat_gadget(const CnfFormula& input) {
    CnfFormula f = validate_cnf(input.num_vars, input.clauses);
    int v = f.num_vars;
    GadgetInstance g;
    g.center = 0;
    g.var_vertex.resize(v);
    g.true_vertex.resize(v);
    g.false_vertex.resize(v);
    std::vector<Line> lines;
    for (int i = 0; i < v; ++i) {
        g.var_vertex[i] = 3 * i + 1;
        g.true_vertex[i] = 3 * i + 2;
        g.false_vertex[i] = 3 * i + 3;
        lines.emplace_back(0, g.var_vertex[i]);
        lines.emplace_back(g.var_vertex[i], g.true_vertex[i]);
        lines.emplace_back(g.var_vertex[i], g.false_vertex[i]);
    }
    int n = 3 * v + 1;
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < v; ++i)
        edges.push_back({g.var_vertex[i], g.true_vertex[i], g.false_vertex[i]});
    for (const auto& cl : f.clauses) {
        std::vector<int> e{0};
        for (int lit : cl) {
            int i = std::abs(lit) - 1;
            e.push_back(g.var_vertex[i]);
            e.push_back(lit > 0 ? g.true_vertex[i] : g.false_vertex[i]);
        }
        edges.push_back(e);
    }
    g.variable_edge_count = v;
    g.hg = validate_hypergraph(n, edges);
    g.tree = make_host_tree(n, lines);
    return g;
}

HypertreeInstance gen_random_hypertree(int n, int m, int max_edge_size,
                                       std::uint64_t seed) {
    if (n < 2 || max_edge_size < 2)
        throw InvalidInput("random hypertree needs n >= 2 and max_edge_size >= 2");
    if (m < 0) throw InvalidInput("edge count must be nonnegative");
    Rng rng(seed);
    std::vector<Line> lines = random_pruefer_tree(n, rng);
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : lines) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    int cap = std::min(max_edge_size, n);
    std::vector<std::vector<int>> edges;
    for (int e = 0; e < m; ++e) {
        int target = 2 + rng.below_int(cap - 1);
        std::vector<int> grown{rng.below_int(n)};
        std::vector<char> in_grown(n, 0);
        in_grown[grown[0]] = 1;
        while (static_cast<int>(grown.size()) < target) {
            std::vector<Line> frontier;
            for (int u : grown)
                for (int w : adj[u])
                    if (!in_grown[w]) frontier.emplace_back(u, w);
            const auto& pick = frontier[rng.below_int(static_cast<int>(frontier.size()))];
            in_grown[pick.second] = 1;
            grown.push_back(pick.second);
        }
        std::sort(grown.begin(), grown.end());
        edges.push_back(std::move(grown));
    }
    return HypertreeInstance{validate_hypergraph(n, edges), make_host_tree(n, lines)};
}

Hypergraph gen_random_hypergraph(int n, int m, int min_size, int max_size,
                                 std::uint64_t seed) {
    if (min_size < 2 || min_size > max_size || max_size > n)
        throw InvalidInput("random hypergraph needs 2 <= min_size <= max_size <= n");
    if (m < 0) throw InvalidInput("edge count must be nonnegative");
    std::vector<std::uint64_t> counts;  // per size in [min_size, max_size]
    std::uint64_t total = 0;
    for (int s = min_size; s <= max_size; ++s) {
        std::uint64_t c = binom_capped(n, s);
        counts.push_back(c);
        total = total > kCountCap - c ? kCountCap : total + c;
    }
    if (total < static_cast<std::uint64_t>(m))
        throw InvalidInput("fewer than m distinct subsets of the requested sizes exist");

    Rng rng(seed);
    std::vector<std::vector<int>> edges;

    if (total <= 2 * static_cast<std::uint64_t>(m)) {
        // dense request: enumerate everything once, shuffle, take a prefix
        std::vector<std::vector<int>> all;
        std::vector<int> idx;
        auto emit = [&](auto&& self, int start, int remaining) -> void {
            if (remaining == 0) {
                all.push_back(idx);
                return;
            }
            for (int v = start; v <= n - remaining; ++v) {
                idx.push_back(v);
                self(self, v + 1, remaining - 1);
                idx.pop_back();
            }
        };
        for (int s = min_size; s <= max_size; ++s) emit(emit, 0, s);
        for (int i = static_cast<int>(all.size()) - 1; i > 0; --i)
            std::swap(all[i], all[rng.below_int(i + 1)]);
        edges.assign(all.begin(), all.begin() + m);
    } else {
        std::set<std::vector<int>> seen;
        std::vector<int> pool(n);
        while (static_cast<int>(edges.size()) < m) {
            std::uint64_t pick = rng.below(total);
            int s = min_size;
            for (std::uint64_t c : counts) {
                if (pick < c) break;
                pick -= c;
                ++s;
            }
            for (int v = 0; v < n; ++v) pool[v] = v;
            std::vector<int> edge;
            for (int j = 0; j < s; ++j) {
                int at = j + rng.below_int(n - j);
                std::swap(pool[j], pool[at]);
                edge.push_back(pool[j]);
            }
            std::sort(edge.begin(), edge.end());
            if (seen.insert(edge).second) edges.push_back(std::move(edge));
        }
    }
    return validate_hypergraph(n, edges);
}

}  // namespace ccolor
