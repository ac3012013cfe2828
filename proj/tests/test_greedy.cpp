#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ccolor/gen.hpp"
#include "ccolor/greedy.hpp"
#include "support.hpp"

using namespace ccolor;
using ccolor::testing::naive_multitransversal;
using ccolor::testing::naive_transversal;

TEST_CASE("usefulness counts edges with open demand") {
    Hypergraph h = validate_hypergraph(3, {{0, 1, 2}});
    DemandVector d = make_demands(h, {2});
    CHECK(usefulness(h, d, {}, 0) == 1);
    CHECK(usefulness(h, d, {1, 2}, 0) == 0);

    Hypergraph h2 = validate_hypergraph(5, {{0, 1, 2}, {0, 3, 4}});
    DemandVector d2 = make_demands(h2, {1, 1});
    CHECK(usefulness(h2, d2, {}, 0) == 2);

    CHECK_THROWS_AS(usefulness(h, d, {0}, 0), InvalidInput);
}

TEST_CASE("greedy_multitransversal on a single edge") {
    Hypergraph h = validate_hypergraph(3, {{0, 1, 2}});
    DemandVector d = make_demands(h, {2});
    std::vector<int> s = greedy_multitransversal(h, d);
    CHECK(s.size() == 2);
    CHECK(verify_multitransversal(h, d, s));
}

TEST_CASE("greedy picks smallest ids among ties") {
    // three edges in a ring of pairs; optimum 2, and greedy reaches it via {0,2}
    Hypergraph h = validate_hypergraph(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
    DemandVector d = make_demands(h, {1, 1, 1});
    std::vector<int> s = greedy_multitransversal(h, d);
    CHECK(s == std::vector<int>{0, 2});
    CHECK(naive_transversal(h) == 2);
}

TEST_CASE("greedy meets the harmonic ratio on the k=2 tight family") {
    HypertreeInstance g = gen_prop3_lower_family(2);
    DemandVector d = make_demands(g.hg, std::vector<int>(g.hg.m(), 2));
    std::vector<int> s = greedy_multitransversal(g.hg, d);
    CHECK(verify_multitransversal(g.hg, d, s));
    int opt = naive_multitransversal(g.hg, d.w);
    CHECK(opt == 4);  // 2k disjoint-edge lower bound is attained
    Fraction hw = harmonic_fraction(static_cast<int>(d.total));
    CHECK(static_cast<long long>(s.size()) * hw.den <= hw.num * opt);
}

TEST_CASE("greedy_k_transversal specializations") {
    Hypergraph h = validate_hypergraph(3, {{0, 1, 2}});
    CHECK(greedy_k_transversal(h, 2).size() == 2);
    CHECK_THROWS_AS(greedy_k_transversal(h, 4), InvalidInput);
    CHECK_THROWS_AS(greedy_k_transversal(h, 0), InvalidInput);

    HypertreeInstance g = gen_prop3_lower_family(3);
    std::vector<int> s = greedy_k_transversal(g.hg, 2);
    DemandVector d = make_demands(g.hg, std::vector<int>(g.hg.m(), 2));
    CHECK(verify_multitransversal(g.hg, d, s));
    Fraction hw = harmonic_fraction(static_cast<int>(d.total));  // W = 2m = 12
    CHECK(static_cast<long long>(s.size()) * hw.den <= hw.num * 6);
}

TEST_CASE("greedy_transversal basics") {
    CHECK(greedy_transversal(validate_hypergraph(3, {{0, 1}, {0, 2}})) ==
          std::vector<int>{0});
    CHECK(greedy_transversal(validate_hypergraph(4, {})).empty());
}

TEST_CASE("greedy_transversal stays within the ratio on random instances") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Hypergraph h = gen_random_hypergraph(10, 15, 2, 4, 9000 + seed);
        std::vector<int> s = greedy_transversal(h);
        DemandVector d = make_demands(h, std::vector<int>(h.m(), 1));
        CHECK(verify_multitransversal(h, d, s));
        int opt = naive_transversal(h);
        Fraction hw = harmonic_fraction(h.m());
        CHECK(static_cast<long long>(s.size()) * hw.den <= hw.num * opt);
    }
}

TEST_CASE("harmonic ratio holds exactly over randomized demand instances") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        int n = 4 + static_cast<int>(seed % 9);            // up to 12
        int mm = 1 + static_cast<int>((seed * 7) % 12);    // up to 12
        Hypergraph h = gen_random_hypergraph(n, mm, 2, std::min(4, n), 1000 + seed * 37);
        std::vector<int> w(h.m());
        for (int i = 0; i < h.m(); ++i)
            w[i] = 1 + static_cast<int>((seed + i) % std::min<std::size_t>(
                                                          3, h.edges[i].size()));
        DemandVector d = make_demands(h, w);
        std::vector<int> s = greedy_multitransversal(h, d);

        CHECK(verify_multitransversal(h, d, s));
        CHECK(static_cast<long long>(s.size()) <= std::min<long long>(h.n, d.total));
        CHECK(s == greedy_multitransversal(h, d));  // deterministic

        int opt = naive_multitransversal(h, d.w);
        Fraction hw = harmonic_fraction(static_cast<int>(d.total));
        CHECK(static_cast<long long>(s.size()) * hw.den <= hw.num * opt);
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("greedy selection replays as maximum usefulness with smallest id") {
    Hypergraph h = gen_random_hypergraph(9, 8, 2, 4, 424242);
    std::vector<int> w(h.m());
    for (int i = 0; i < h.m(); ++i) w[i] = 1 + i % 2;
    DemandVector d = make_demands(h, w);
    std::vector<int> order = greedy_multitransversal(h, d);

    std::vector<int> prefix;
    for (int picked : order) {
        int u_picked = usefulness(h, d, prefix, picked);
        CHECK(u_picked > 0);
        for (int v = 0; v < h.n; ++v) {
            if (std::find(prefix.begin(), prefix.end(), v) != prefix.end()) continue;
            int u = usefulness(h, d, prefix, v);
            CHECK(u <= u_picked);
            if (v < picked) CHECK(u < u_picked);  // ties break toward smaller ids
        }
        prefix.push_back(picked);
    }
    // termination: all residual demands met exactly when the loop stopped
    CHECK(verify_multitransversal(h, d, order));
}

TEST_CASE("infeasible demands are rejected up front") {
    Hypergraph h = validate_hypergraph(3, {{0, 1}});
    DemandVector raw;
    raw.w = {3};
    raw.total = 3;
    CHECK_THROWS_AS(greedy_multitransversal(h, raw), InvalidInput);
}

TEST_CASE("harmonic fractions are exact") {
    CHECK(harmonic_fraction(0).num == 0);
    CHECK(harmonic_fraction(1).num == 1);
    CHECK(harmonic_fraction(1).den == 1);
    CHECK(harmonic_fraction(3).num == 11);
    CHECK(harmonic_fraction(3).den == 6);
    CHECK(harmonic_fraction(8).num == 761);
    CHECK(harmonic_fraction(8).den == 280);
    CHECK(harmonic_sum(8) == doctest::Approx(761.0 / 280.0));
    CHECK_THROWS_AS(harmonic_fraction(41), SizeLimit);
}
