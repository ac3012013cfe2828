#include "ccolor/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "ccolor/approx.hpp"

namespace ccolor {

namespace {

std::vector<std::uint32_t> edge_masks(const Hypergraph& h) {
    std::vector<std::uint32_t> masks(h.edges.size(), 0);
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (int v : h.edges[i]) masks[i] |= std::uint32_t{1} << v;
    return masks;
}

// First subset feasible(mask) when sizes are scanned in the given order and,
// within a size, index tuples in lexicographic order. Returns nullopt only
// if no size yields a feasible subset.
template <typename Pred>
std::optional<std::vector<int>> first_feasible_subset(int n, int size_from, int size_to,
                                                      Pred feasible) {
    int step = size_from <= size_to ? 1 : -1;
    for (int s = size_from;; s += step) {
        std::vector<int> idx(s);
        for (int j = 0; j < s; ++j) idx[j] = j;
        for (;;) {
            std::uint32_t mask = 0;
            for (int v : idx) mask |= std::uint32_t{1} << v;
            if (feasible(mask)) return idx;
            // advance to the next s-combination of 0..n-1
            int j = s - 1;
            while (j >= 0 && idx[j] == n - s + j) --j;
            if (j < 0) break;
            ++idx[j];
            for (int t = j + 1; t < s; ++t) idx[t] = idx[t - 1] + 1;
        }
        if (s == size_to) break;
    }
    return std::nullopt;
}

}  // namespace

SetResult exact_multitransversal(const Hypergraph& h, const DemandVector& d) {
    if (h.n > kMaxSubsetVertices)
        throw SizeLimit("multitransversal oracle is limited to n <= " +
                        std::to_string(kMaxSubsetVertices));
    DemandVector dd = make_demands(h, d.w);  // rejects infeasible demands

    auto masks = edge_masks(h);
    int lower = 0;
    for (int w : dd.w) lower = std::max(lower, w);
    auto witness = first_feasible_subset(h.n, lower, h.n, [&](std::uint32_t s) {
        for (std::size_t i = 0; i < masks.size(); ++i)
            if (std::popcount(s & masks[i]) < dd.w[i]) return false;
        return true;
    });
    // feasible at s = n because every demand fits its edge
    return SetResult{static_cast<int>(witness->size()), std::move(*witness)};
}

SetResult exact_transversal(const Hypergraph& h) {
    if (h.n > kMaxSubsetVertices)
        throw SizeLimit("transversal oracle is limited to n <= " +
                        std::to_string(kMaxSubsetVertices));
    auto masks = edge_masks(h);
    auto witness = first_feasible_subset(h.n, 0, h.n, [&](std::uint32_t s) {
        for (std::uint32_t em : masks)
            if ((s & em) == 0) return false;
        return true;
    });
    return SetResult{static_cast<int>(witness->size()), std::move(*witness)};
}

SetResult exact_independence(const Hypergraph& h) {
    if (h.n > kMaxSubsetVertices)
        throw SizeLimit("independence oracle is limited to n <= " +
                        std::to_string(kMaxSubsetVertices));
    auto masks = edge_masks(h);
    auto witness = first_feasible_subset(h.n, h.n, 0, [&](std::uint32_t s) {
        for (std::uint32_t em : masks)
            if ((s & em) == em) return false;
        return true;
    });
    return SetResult{static_cast<int>(witness->size()), std::move(*witness)};
}

namespace {

// Branch-and-bound over restricted growth strings. Colors are 1..used+1 per
// vertex; an edge is checked as soon as its largest vertex is colored, so
// rainbow branches die early. Pass 1 tries a fresh color first to push the
// block count up quickly; pass 2 re-runs in lexicographic order and stops at
// the first optimum, which is therefore the lex-smallest witness.
struct PartitionSearch {
    const Hypergraph& h;
    std::vector<std::vector<int>> closing;  // edges whose max vertex is v
    std::vector<int> cols;
    int best;

    explicit PartitionSearch(const Hypergraph& hg, int initial_best)
        : h(hg), closing(hg.n), cols(hg.n, 0), best(initial_best) {
        for (int i = 0; i < h.m(); ++i) closing[h.edges[i].back()].push_back(i);
    }

    bool edge_has_repeat(int ei) const {
        const auto& e = h.edges[ei];
        for (std::size_t a = 0; a + 1 < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                if (cols[e[a]] == cols[e[b]]) return true;
        return false;
    }

    bool closings_ok(int v) const {
        for (int ei : closing[v])
            if (!edge_has_repeat(ei)) return false;
        return true;
    }

    void maximize(int v, int used) {
        if (used + (h.n - v) <= best) return;
        if (v == h.n) {
            best = used;
            return;
        }
        for (int c = used + 1; c >= 1; --c) {
            cols[v] = c;
            if (closings_ok(v)) maximize(v + 1, std::max(used, c));
        }
        cols[v] = 0;
    }

    bool lex_witness(int v, int used, int target) {
        if (used + (h.n - v) < target) return false;
        if (v == h.n) return true;
        for (int c = 1; c <= used + 1; ++c) {
            cols[v] = c;
            if (closings_ok(v) && lex_witness(v + 1, std::max(used, c), target)) return true;
        }
        cols[v] = 0;
        return false;
    }
};

}  // namespace

ChiBarResult exact_upper_chromatic(const Hypergraph& h) {
    if (h.n > kMaxPartitionVertices)
        throw SizeLimit("upper chromatic oracle is limited to n <= " +
                        std::to_string(kMaxPartitionVertices));
    for (const auto& e : h.edges)
        if (e.size() < 2)
            throw InvalidInput("no C-coloring exists: edge of size " +
                               std::to_string(e.size()));
    if (h.m() == 0) {
        std::vector<int> identity(h.n);
        for (int v = 0; v < h.n; ++v) identity[v] = v + 1;
        return ChiBarResult{h.n, 0, normalize_coloring(identity)};
    }

    // Coloring one optimal 2-transversal monochromatically shows
    // chi_bar >= n - tau2 + 1; start the search just below that.
    int tau2 = exact_multitransversal(h, make_demands(h, std::vector<int>(h.m(), 2))).size;

    PartitionSearch search(h, h.n - tau2);
    search.maximize(0, 0);
    int chi_bar = search.best;

    PartitionSearch wit(h, 0);
    bool found = wit.lex_witness(0, 0, chi_bar);
    (void)found;  // a chi_bar-coloring exists by construction

    ChiBarResult r;
    r.chi_bar = chi_bar;
    r.decrement = h.n - chi_bar;
    r.witness = normalize_coloring(wit.cols);
    return r;
}

LineSetResult exact_decrement_hypertree(const Hypergraph& h, const HostTree& t) {
    if (h.n > kMaxHypertreeVertices)
        throw SizeLimit("hypertree decrement oracle is limited to n <= " +
                        std::to_string(kMaxHypertreeVertices));
    std::string diag;
    if (!verify_host_tree(h, t, &diag)) throw InvalidInput("invalid host tree: " + diag);

    LineHypergraph star = build_line_hypergraph(h, t);
    SetResult tau = exact_transversal(star.hg);
    LineSetResult r;
    r.decrement = tau.size;
    for (int idx : tau.witness) r.witness.push_back(star.lines[idx]);
    return r;
}

CnfFormula validate_cnf(int num_vars, const std::vector<std::array<int, 3>>& clauses) {
    if (num_vars < 0) throw InvalidInput("variable count must be nonnegative");
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        const auto& cl = clauses[j];
        for (int lit : cl) {
            int v = std::abs(lit);
            if (lit == 0 || v > num_vars)
                throw InvalidInput("clause " + std::to_string(j + 1) + ": literal " +
                                   std::to_string(lit) + " out of range");
        }
        int a = std::abs(cl[0]), b = std::abs(cl[1]), c = std::abs(cl[2]);
        if (a == b || a == c || b == c)
            throw InvalidInput("clause " + std::to_string(j + 1) +
                               " must use three distinct variables");
    }
    return CnfFormula{num_vars, clauses};
}

namespace {

bool sat_backtrack(int num_vars, const std::vector<std::array<int, 3>>& clauses) {
    // decide each clause as soon as its largest variable is assigned
    std::vector<std::vector<int>> closing(num_vars + 1);
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        int mx = 0;
        for (int lit : clauses[j]) mx = std::max(mx, std::abs(lit));
        closing[mx].push_back(static_cast<int>(j));
    }
    std::vector<char> val(num_vars + 1, 0);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v > num_vars) return true;
        for (int b = 0; b <= 1; ++b) {
            val[v] = static_cast<char>(b);
            bool ok = true;
            for (int cj : closing[v]) {
                bool satisfied = false;
                for (int lit : clauses[cj])
                    if (lit > 0 ? val[lit] : !val[-lit]) {
                        satisfied = true;
                        break;
                    }
                if (!satisfied) {
                    ok = false;
                    break;
                }
            }
            if (ok && rec(v + 1)) return true;
        }
        return false;
    };
    return rec(1);
}

}  // namespace

bool cnf_satisfiable_after_deletion(const CnfFormula& f, const std::vector<int>& deleted) {
    if (f.num_vars > kMaxCnfVariables)
        throw SizeLimit("satisfiability check is limited to " +
                        std::to_string(kMaxCnfVariables) + " variables");
    std::vector<char> gone(f.num_vars + 1, 0);
    for (int v : deleted) {
        if (v < 1 || v > f.num_vars)
            throw InvalidInput("deleted variable " + std::to_string(v) + " out of range");
        gone[v] = 1;
    }
    std::vector<std::array<int, 3>> remaining;
    for (const auto& cl : f.clauses) {
        bool touched = false;
        for (int lit : cl)
            if (gone[std::abs(lit)]) {
                touched = true;
                break;
            }
        if (!touched) remaining.push_back(cl);
    }
    return sat_backtrack(f.num_vars, remaining);
}

DeletionResult min_variable_deletion(const CnfFormula& f) {
    if (f.num_vars > kMaxCnfVariables)
        throw SizeLimit("variable-deletion oracle is limited to " +
                        std::to_string(kMaxCnfVariables) + " variables");
    for (int s = 0; s <= f.num_vars; ++s) {
        std::vector<int> pick(s);
        for (int j = 0; j < s; ++j) pick[j] = j + 1;
        for (;;) {
            if (cnf_satisfiable_after_deletion(f, pick)) return DeletionResult{s, pick};
            int j = s - 1;
            while (j >= 0 && pick[j] == f.num_vars - s + j + 1) --j;
            if (j < 0) break;
            ++pick[j];
            for (int t = j + 1; t < s; ++t) pick[t] = pick[t - 1] + 1;
        }
    }
    // deleting every variable empties the formula
    std::vector<int> all(f.num_vars);
    for (int j = 0; j < f.num_vars; ++j) all[j] = j + 1;
    return DeletionResult{f.num_vars, all};
}

}  // namespace ccolor
