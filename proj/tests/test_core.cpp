#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ccolor/core.hpp"
#include "ccolor/exact.hpp"

using namespace ccolor;

TEST_CASE("validate_hypergraph accepts a minimal instance") {
    Hypergraph h = validate_hypergraph(3, {{0, 1, 2}});
    CHECK(h.n == 3);
    CHECK(h.m() == 1);
    CHECK(h.edges[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("validate_hypergraph deduplicates vertices within an edge") {
    Hypergraph h = validate_hypergraph(3, {{0, 0, 1}});
    CHECK(h.edges[0] == std::vector<int>{0, 1});
    CHECK_THROWS_AS(validate_hypergraph(3, {{0, 0}}), InvalidInput);
}

TEST_CASE("validate_hypergraph rejects out-of-range vertices") {
    CHECK_THROWS_AS(validate_hypergraph(2, {{0, 3}}), InvalidInput);
    CHECK_THROWS_AS(validate_hypergraph(2, {{-1, 0}}), InvalidInput);
}

TEST_CASE("edgeless hypergraphs are legal") {
    Hypergraph h = validate_hypergraph(5, {});
    CHECK(h.m() == 0);
}

TEST_CASE("relaxed_hypergraph permits singletons but not empty edges") {
    Hypergraph h = relaxed_hypergraph(2, {{1}});
    CHECK(h.edges[0].size() == 1);
    CHECK_THROWS_AS(relaxed_hypergraph(2, std::vector<std::vector<int>>{{}}), InvalidInput);
}

TEST_CASE("make_host_tree normalizes and checks shape") {
    HostTree t = make_host_tree(3, {{2, 1}, {1, 0}});
    CHECK(t.lines == std::vector<Line>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(make_host_tree(3, {{0, 0}, {1, 2}}), InvalidInput);    // loop
    CHECK_THROWS_AS(make_host_tree(3, {{0, 1}, {1, 0}}), InvalidInput);    // duplicate
    CHECK_THROWS_AS(make_host_tree(3, {{0, 1}}), InvalidInput);            // count
    CHECK_THROWS_AS(make_host_tree(3, {{0, 1}, {1, 3}}), InvalidInput);    // range
}

TEST_CASE("normalize_coloring relabels by first appearance") {
    CColoring c = normalize_coloring({7, 7, 3, 7, 5});
    CHECK(c.colors == std::vector<int>{1, 1, 2, 1, 3});
    CHECK(c.k == 3);
}

TEST_CASE("normalization is idempotent on random inputs") {
    std::mt19937_64 rng(20240917);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        std::vector<int> raw(n);
        for (int& x : raw) x = static_cast<int>(rng() % 6) - 2;
        CColoring once = normalize_coloring(raw);
        CColoring twice = normalize_coloring(once.colors);
        CHECK(once == twice);
        CHECK(once.k <= n);
        CHECK(decrement_of_coloring(once) >= 0);
    }
}

TEST_CASE("decrement counts lost colors") {
    CHECK(decrement_of_coloring(normalize_coloring({1, 2, 3, 4, 5})) == 0);
    CHECK(decrement_of_coloring(normalize_coloring({1, 1, 1, 1, 1})) == 4);
}

TEST_CASE("verify_c_coloring needs a repeated color inside every edge") {
    Hypergraph h = validate_hypergraph(3, {{0, 1, 2}});
    CHECK(verify_c_coloring(h, normalize_coloring({1, 1, 2})));
    CHECK_FALSE(verify_c_coloring(h, normalize_coloring({1, 2, 3})));
    CHECK_THROWS_AS(verify_c_coloring(h, normalize_coloring({1, 1})), InvalidInput);
}

TEST_CASE("unique optimal coloring of the k=1 tight family") {
    // edges {1,2,3},{2,3,4} in 1-based ids; the pair {2,3} is one class
    Hypergraph h = validate_hypergraph(4, {{0, 1, 2}, {1, 2, 3}});
    CColoring c = normalize_coloring({1, 2, 2, 3});
    CHECK(verify_c_coloring(h, c));
    CHECK(c.k == 3);
    CHECK(decrement_of_coloring(c) == 1);
}

TEST_CASE("verify_host_tree on a path") {
    Hypergraph h = validate_hypergraph(4, {{0, 1, 2}, {1, 2, 3}});
    HostTree path = make_host_tree(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(verify_host_tree(h, path));

    Hypergraph gap = validate_hypergraph(4, {{0, 3}});
    std::string diag;
    CHECK_FALSE(verify_host_tree(gap, path, &diag));
    CHECK(diag.find("edge 1") != std::string::npos);
}

TEST_CASE("verify_host_tree detects cycles") {
    Hypergraph h = validate_hypergraph(4, {});
    HostTree bad = make_host_tree(4, {{0, 1}, {1, 2}, {0, 2}});
    std::string diag;
    CHECK_FALSE(verify_host_tree(h, bad, &diag));
    CHECK(diag.find("cycle") != std::string::npos);
}

TEST_CASE("a star hosts every edge through its center") {
    Hypergraph h = validate_hypergraph(5, {{0, 1, 2}, {0, 3}, {0, 2, 4}});
    HostTree star = make_host_tree(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(verify_host_tree(h, star));
}

TEST_CASE("monochromatic_lines") {
    HostTree path = make_host_tree(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(monochromatic_lines(path, normalize_coloring({1, 2, 3, 4})).empty());
    CHECK(monochromatic_lines(path, normalize_coloring({1, 1, 1, 1})).size() == 3);

    // classes connected in the host tree: count equals the decrement
    CColoring c = normalize_coloring({1, 1, 2, 2});
    CHECK(monochromatic_lines(path, c).size() ==
          static_cast<std::size_t>(decrement_of_coloring(c)));
}

TEST_CASE("hyperstar_center picks the smallest common vertex") {
    CHECK(hyperstar_center(validate_hypergraph(4, {{0, 1, 2}, {0, 2, 3}})) == 0);
    CHECK_FALSE(hyperstar_center(validate_hypergraph(4, {{0, 1}, {2, 3}})).has_value());
    CHECK_THROWS_AS(hyperstar_center(validate_hypergraph(3, {})), InvalidInput);
}

TEST_CASE("upper_chromatic_2uniform counts components") {
    CHECK(upper_chromatic_2uniform(validate_hypergraph(4, {{0, 1}, {2, 3}})) == 2);
    CHECK(upper_chromatic_2uniform(validate_hypergraph(5, {})) == 5);
    Hypergraph path = validate_hypergraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(upper_chromatic_2uniform(path) == 1);
    CHECK(upper_chromatic_2uniform(path) == exact_upper_chromatic(path).chi_bar);
    CHECK_THROWS_AS(upper_chromatic_2uniform(validate_hypergraph(3, {{0, 1, 2}})),
                    InvalidInput);
}

TEST_CASE("verify_multitransversal") {
    Hypergraph h = validate_hypergraph(3, {{0, 1, 2}});
    DemandVector two = make_demands(h, {2});
    CHECK(verify_multitransversal(h, two, {0, 1}));
    CHECK_FALSE(verify_multitransversal(h, two, {0}));

    // k=2 tight family: the union of the pairs {3r+2,3r+3} meets all edges twice
    Hypergraph low = validate_hypergraph(7, {{0, 1, 2}, {1, 2, 3}, {3, 4, 5}, {4, 5, 6}});
    DemandVector d = make_demands(low, {2, 2, 2, 2});
    CHECK(verify_multitransversal(low, d, {1, 2, 4, 5}));
}

TEST_CASE("make_demands validates feasibility") {
    Hypergraph h = validate_hypergraph(3, {{0, 1}});
    CHECK_THROWS_AS(make_demands(h, {3}), InvalidInput);
    CHECK_THROWS_AS(make_demands(h, {0}), InvalidInput);
    CHECK_THROWS_AS(make_demands(h, {1, 1}), InvalidInput);
    CHECK(make_demands(h, {2}).total == 2);
}
