#include "doctest.h"
#include "oracles.hpp"
#include "planar_story/error.hpp"
#include "planar_story/generators.hpp"
#include "planar_story/treewidth.hpp"

using namespace pstory;

namespace {

crossing_graph graph(int n, std::vector<std::pair<int, int>> edges) { return crossing_graph::from_edges(n, edges); }
crossing_graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return graph(n, e);
}
crossing_graph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return graph(leaves + 1, e);
}

const auto p3 = graph(3, {{0, 1}, {1, 2}});

tree_decomposition decompose(const crossing_graph& x) {
    auto d = min_fill_in_decomposition(x, 30, 0);
    REQUIRE(d.td);
    REQUIRE(verify_decomposition(x, *d.td));
    return *d.td;
}

}  // namespace

TEST_CASE("min fill-in widths") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto t = gen_random_tree(25, seed);
        const auto d = min_fill_in_decomposition(t, 12, seed);
        REQUIRE(d.td);
        CHECK(d.width == 1);
        CHECK(verify_decomposition(t, *d.td));
    }
    CHECK(min_fill_in_decomposition(cycle(4)).width == 2);
    std::vector<std::pair<int, int>> k5;
    for (int a = 0; a < 5; ++a) {
        for (int b = a + 1; b < 5; ++b) k5.emplace_back(a, b);
    }
    const auto d = min_fill_in_decomposition(graph(5, k5), 3);
    CHECK(d.cap_exceeded());
    CHECK(d.width == 4);
}

TEST_CASE("verify_decomposition") {
    tree_decomposition ok{{{0, 1}, {1, 2}}, {-1, 0}, 0};
    CHECK(verify_decomposition(p3, ok));
    tree_decomposition missing_edge{{{0}, {1, 2}}, {-1, 0}, 0};
    CHECK_FALSE(verify_decomposition(p3, missing_edge));
    tree_decomposition split{{{0, 1}, {2}, {1, 2}}, {-1, 0, 1}, 0};
    CHECK_FALSE(verify_decomposition(p3, split));
    tree_decomposition uncovered{{{0, 1}}, {-1}, 0};
    CHECK_FALSE(verify_decomposition(p3, uncovered));
}

TEST_CASE("PACE format round trip") {
    rng random(2);
    const auto x = oracle::random_graph(10, 0.3, random);
    const auto td = decompose(x);
    const auto text = format_pace_td(td, x.size());
    CHECK(text.rfind("s td ", 0) == 0);
    const auto back = parse_pace_td(text);
    CHECK(verify_decomposition(x, back));
    CHECK(back.width() == td.width());
    CHECK_THROWS_AS(parse_pace_td("s td 1 2 2\nb 1 1 3\n"), input_error);
}

TEST_CASE("coloring codes") {
    std::vector<bag_color> c{bag_color::red, bag_color::white, bag_color::blue};
    CHECK(encode_coloring(c) == 1 + 0 * 3 + 2 * 9);
    CHECK(decode_coloring(encode_coloring(c), 3) == c);
    for (std::uint32_t i = 0; i < 243; ++i) CHECK(encode_coloring(decode_coloring(i, 5)) == i);
}

TEST_CASE("pareto pairs on small graphs") {
    CHECK(pareto_pairs(p3, decompose(p3)) == pareto_list{{2, 1}, {1, 2}});
    CHECK(oracle::brute_pareto(p3) == pareto_list{{2, 1}, {1, 2}});
    const auto k2 = graph(2, {{0, 1}});
    CHECK(pareto_pairs(k2, decompose(k2)) == pareto_list{{1, 1}});
    CHECK(pareto_pairs(cycle(4), decompose(cycle(4))) == pareto_list{{2, 2}});
    CHECK(pareto_front({{1, 1}, {2, 0}, {0, 2}, {1, 2}, {1, 2}}) == pareto_list{{2, 0}, {1, 2}});
}

TEST_CASE("pareto pairs match brute force, serial and parallel") {
    rng random(99);
    for (int iter = 0; iter < 120; ++iter) {
        const int n = 1 + static_cast<int>(random.below(11));
        const auto x = n == 1 ? crossing_graph(1) : oracle::random_graph(n, 0.15 + 0.5 * random.unit(), random);
        const auto td = decompose(x);
        const auto expected = oracle::brute_pareto(x);
        CHECK(pareto_pairs(x, td, execution::serial) == expected);
        CHECK(pareto_pairs(x, td, execution::parallel) == expected);
    }
}

TEST_CASE("maximum pair witnesses") {
    const auto mp = maximum_pair(p3, decompose(p3));
    CHECK(mp.first == vertex_set{1});
    CHECK(mp.second == vertex_set{0, 2});
    const auto mc = maximum_pair(cycle(4), decompose(cycle(4)));
    CHECK(mc.first.size() == 2);
    CHECK(mc.second.size() == 2);

    for (int k = 1; k <= 6; ++k) {
        const auto s = star(k);
        const auto p = maximum_pair(s, decompose(s));
        CHECK(p.min_size() == oracle::brute_pair_value(s));
        if (k == 2 || k == 3) {
            CHECK(p.first == vertex_set{0});
            CHECK(static_cast<int>(p.second.size()) == k);
        } else if (k >= 4) {
            CHECK(p.min_size() == k / 2);
        }
    }

    rng random(4);
    for (int iter = 0; iter < 100; ++iter) {
        const auto x = oracle::random_graph(2 + static_cast<int>(random.below(11)), 0.3, random);
        const auto td = decompose(x);
        const auto p = maximum_pair(x, td);
        CHECK(is_independent(x, p.first));
        CHECK(is_independent(x, p.second));
        CHECK(p.first.size() <= p.second.size());
        for (int v : p.first) CHECK_FALSE(std::binary_search(p.second.begin(), p.second.end(), v));
        // Max min, then max max among frontier entries.
        const auto front = oracle::brute_pareto(x);
        int best_min = -1, best_max = -1;
        for (auto e : front) {
            const int lo = std::min(e.alpha, e.beta), hi = std::max(e.alpha, e.beta);
            if (lo > best_min || (lo == best_min && hi > best_max)) best_min = lo, best_max = hi;
        }
        CHECK(static_cast<int>(p.first.size()) == best_min);
        CHECK(static_cast<int>(p.second.size()) == best_max);
    }
}

TEST_CASE("degree-2 construction") {
    const auto c = degree2_maximum_pair(cycle(4));
    CHECK(c.pair.first.size() == 2);
    CHECK(c.pair.second.size() == 2);
    CHECK(c.predicted_mu == 1);
    const auto p = degree2_maximum_pair(p3);
    CHECK(p.pair.first.size() == 1);
    CHECK(p.pair.second.size() == 2);
    CHECK(p.predicted_mu == 1);
    const auto c5p2 = disjoint_union(cycle(5), graph(2, {{0, 1}}));
    const auto q = degree2_maximum_pair(c5p2);
    CHECK(q.predicted_mu == q.pair.min_size());
    CHECK(q.predicted_mu == oracle::best_story_mu(c5p2));
    CHECK_THROWS_AS(degree2_maximum_pair(star(3)), input_error);

    rng random(8);
    for (int iter = 0; iter < 200; ++iter) {
        crossing_graph x;
        const int parts = 1 + static_cast<int>(random.below(4));
        for (int i = 0; i < parts; ++i) {
            const bool is_cycle = random.below(2) == 0;
            const int len = is_cycle ? 3 + static_cast<int>(random.below(6)) : 2 + static_cast<int>(random.below(6));
            std::vector<std::pair<int, int>> e;
            for (int j = 0; j + 1 < len; ++j) e.emplace_back(j, j + 1);
            if (is_cycle) e.emplace_back(0, len - 1);
            x = disjoint_union(x, graph(len, e));
        }
        const auto d = degree2_maximum_pair(x);
        CHECK(is_independent(x, d.pair.first));
        CHECK(is_independent(x, d.pair.second));
        CHECK(d.pair.first.size() <= d.pair.second.size());
        CHECK(d.pair.min_size() == maximum_pair(x, decompose(x)).min_size());
    }
}
