#include "doctest.h"
#include "oracles.hpp"
#include "planar_story/bounds.hpp"
#include "planar_story/error.hpp"
#include "planar_story/story.hpp"

using namespace pstory;

namespace {

crossing_graph graph(int n, std::vector<std::pair<int, int>> edges) { return crossing_graph::from_edges(n, edges); }

const auto p3 = graph(3, {{0, 1}, {1, 2}});
const auto k2 = graph(2, {{0, 1}});
const auto c4 = graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});

}  // namespace

TEST_CASE("simulate follows the insertion rule") {
    auto t = simulate(p3, {{0, 2}, {1}});
    CHECK(t.frame_sizes == std::vector<int>{2, 1});
    CHECK(t.mu == 1);
    CHECK(oracle::best_story_mu(p3) == 1);
    CHECK(t.frames[1] == vertex_set{1});
    CHECK(t.removed_at == std::vector<int>{1, never_removed, 1});

    CHECK(simulate(k2, {{0}, {1}}).frame_sizes == std::vector<int>{1, 1});

    auto c = simulate(c4, {{0, 2}, {1, 3}});
    CHECK(c.frame_sizes == std::vector<int>{2, 1, 2});
    CHECK(c.mu == 1);
    CHECK(oracle::best_story_mu(c4) == 1);

    CHECK_THROWS_AS(simulate(p3, {{0, 1}, {2}}), story_error);
    CHECK_THROWS_AS(simulate(p3, {{0, 2}, {}}), story_error);
    CHECK_THROWS_AS(simulate(p3, {{0, 2}, {1, 1}}), story_error);
    CHECK_THROWS_AS(simulate(p3, {{0}, {1, 1}}), story_error);
    CHECK_THROWS_AS(simulate(p3, {{0, 2}, {7}}), story_error);
}

TEST_CASE("trace invariants on random stories") {
    rng random(11);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 2 + static_cast<int>(random.below(12));
        const auto x = oracle::random_graph(n, 0.3, random);
        // Random maximal independent initial frame, random order.
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        random.shuffle(perm);
        planar_story s;
        std::vector<char> blocked(n, 0);
        for (int v : perm) {
            if (blocked[v]) continue;
            s.initial.push_back(v);
            blocked[v] = 1;
            for (int w : x.neighbors(v)) blocked[w] = 1;
        }
        std::sort(s.initial.begin(), s.initial.end());
        for (int v : perm) {
            if (!std::binary_search(s.initial.begin(), s.initial.end(), v)) s.order.push_back(v);
        }
        const auto t = simulate(x, s);
        REQUIRE(validate(x, s).ok());
        CHECK(t.frames.size() == s.order.size() + 1);
        CHECK(t.mu == *std::min_element(t.frame_sizes.begin(), t.frame_sizes.end()));
        // Disjointness of first and last frames.
        for (int v : t.frames.front()) CHECK_FALSE(std::binary_search(t.frames.back().begin(), t.frames.back().end(), v));
        for (std::size_t i = 0; i < t.frames.size(); ++i) {
            CHECK(is_independent(x, t.frames[i]));
            CHECK(static_cast<int>(t.frames[i].size()) == t.frame_sizes[i]);
            if (i > 0) {
                const int v = s.order[i - 1];
                int current_degree = 0;
                for (int w : x.neighbors(v)) current_degree += std::binary_search(t.frames[i - 1].begin(), t.frames[i - 1].end(), w);
                CHECK(t.frame_sizes[i] - t.frame_sizes[i - 1] == 1 - current_degree);
            }
        }
        // Contiguous appearance and monotone removal.
        for (int v = 0; v < n; ++v) {
            int first = -1, last = -1;
            for (int i = 0; i < static_cast<int>(t.frames.size()); ++i) {
                if (std::binary_search(t.frames[i].begin(), t.frames[i].end(), v)) {
                    if (first < 0) first = i;
                    CHECK((last < 0 || last == i - 1));
                    last = i;
                }
            }
            CHECK(first >= 0);
            if (t.removed_at[v] != never_removed) CHECK(t.removed_at[v] == last + 1);
            else CHECK(last == static_cast<int>(t.frames.size()) - 1);
        }
        CHECK(simulate(x, s).frame_sizes == t.frame_sizes);
        CHECK(t.mu <= upper_bounds(x).half_edges);
    }
}

TEST_CASE("validate reports violations") {
    CHECK(validate(p3, {{0, 2}, {1}}).ok());
    auto bad = validate(p3, {{0, 1}, {2}});
    CHECK(bad.has(violation_kind::initial_not_independent));
    auto gap = validate(p3, {{0, 2}, {}});
    CHECK(gap.has(violation_kind::coverage_gap));
    CHECK(gap.violations.front().vertices == std::vector<int>{1});
    CHECK(validate(p3, {{0, 2}, {1, 1}}).has(violation_kind::repeated_vertex));
    CHECK(validate(p3, {{0, 2}, {1, 9}}).has(violation_kind::unknown_vertex));
    CHECK(validate(p3, {{}, {0, 1, 2}}).has(violation_kind::empty_initial));
    CHECK(validate(crossing_graph{}, {}).ok());
}

TEST_CASE("upper bounds") {
    CHECK(upper_bounds(p3).half_edges == 1);
    std::vector<std::pair<int, int>> star_edges;
    for (int i = 1; i <= 5; ++i) star_edges.emplace_back(0, i);
    const auto star = graph(6, star_edges);
    const auto b = upper_bounds(star);
    CHECK(b.half_edges == 3);
    REQUIRE(b.pair_bound);
    // Two leaves on each side: ({1, 2}, {3, 4, 5}).
    CHECK(*b.pair_bound == oracle::brute_pair_value(star));
    CHECK(*b.pair_bound == 2);
    CHECK(oracle::best_story_mu(star) == 1);

    const auto cb = upper_bounds(c4, vertex_set{0, 2});
    REQUIRE(cb.initial_frame_bound);
    CHECK(*cb.initial_frame_bound == 2);
    CHECK_THROWS_AS(upper_bounds(c4, vertex_set{0, 1}), input_error);

    rng random(5);
    for (int iter = 0; iter < 100; ++iter) {
        const auto x = oracle::random_graph(3 + static_cast<int>(random.below(8)), 0.35, random);
        const auto bb = upper_bounds(x);
        REQUIRE(bb.pair_bound);
        CHECK(*bb.pair_bound <= bb.half_edges);
        CHECK(*bb.pair_bound == oracle::brute_pair_value(x));
    }
}

TEST_CASE("free edges shift displayed sizes only") {
    story_trace t;
    t.frame_sizes = {2, 1, 2};
    t.mu = 1;
    auto a = report_with_free_edges(t, 3);
    CHECK(a.display_sizes == std::vector<int>{5, 4, 5});
    t.frame_sizes = {1};
    CHECK(report_with_free_edges(t, 0).display_sizes == std::vector<int>{1});
    t.mu = 1;
    auto b = report_with_free_edges(t, 7);
    CHECK(b.display_mu == 8);
    CHECK(b.core_mu == 1);
}

TEST_CASE("story JSON round trip") {
    planar_story s{{0, 2}, {1}};
    CHECK(story_from_json(story_to_json(s, 42)) == s);
    CHECK(story_to_json(s, 42).find("\"seed\":42") != std::string::npos);
    CHECK_THROWS_AS(story_from_json("{\"initial\": [0]}"), input_error);
    CHECK_THROWS_AS(story_from_json("{\"initial\": [0], \"order\": [\"a\"]}"), input_error);
    CHECK_THROWS_AS(story_from_json("not json"), input_error);
    const auto j = trace_to_json(s, simulate(p3, s), 2);
    CHECK(j.find("\"display_mu\":3") != std::string::npos);
    CHECK(j.find("\"free_edge_count\":2") != std::string::npos);

    const auto empty = simulate(crossing_graph{}, {});
    CHECK(empty.frame_sizes == std::vector<int>{0});
    CHECK(empty.mu == 0);
}
