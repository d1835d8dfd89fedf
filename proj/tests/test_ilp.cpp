#include "doctest.h"
#include "planar_story/error.hpp"
#include "planar_story/exact.hpp"
#include "planar_story/ilp.hpp"

using namespace pstory;

namespace {

crossing_graph graph(int n, std::vector<std::pair<int, int>> edges) { return crossing_graph::from_edges(n, edges); }

// Variable assignment describing a story: x_e_t for frame membership and
// z_e_t at the entry frame.
std::map<std::string, double> encode(const crossing_graph& x, const planar_story& s, int tau) {
    std::map<std::string, double> v;
    const auto t = simulate(x, s);
    for (int e = 0; e < x.size(); ++e) {
        for (int f = 1; f <= tau; ++f) {
            v["x_" + std::to_string(e) + "_" + std::to_string(f)] = 0;
            v["z_" + std::to_string(e) + "_" + std::to_string(f)] = 0;
        }
    }
    for (int f = 1; f <= tau; ++f) {
        const auto& frame = t.frames[std::min<std::size_t>(f - 1, t.frames.size() - 1)];
        for (int e : frame) v["x_" + std::to_string(e) + "_" + std::to_string(f)] = 1;
    }
    for (int e : s.initial) v["z_" + std::to_string(e) + "_1"] = 1;
    for (std::size_t i = 0; i < s.order.size(); ++i) v["z_" + std::to_string(s.order[i]) + "_" + std::to_string(i + 2)] = 1;
    v["y_min"] = t.mu;
    return v;
}

}  // namespace

TEST_CASE("constraint counts") {
    const auto c4 = graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    for (int tau : {1, 3, 4, 6}) {
        ilp_options o;
        o.tau = tau;
        const auto m = build_ilp(c4, o);
        auto g = m.group_counts();
        const int n = 4, e = 4;
        CHECK(g[2] == tau * e);
        CHECK(g[3] == n);
        CHECK(g[5] == n);
        CHECK(g[4] == tau);
        CHECK(g[6] == n * (tau - 1));
        CHECK(g[7] == n);
        CHECK(g[8] == tau - 1);
        CHECK(m.binaries.size() == static_cast<std::size_t>(2 * n * tau));
    }
    CHECK(build_ilp(c4).tau == 4);
    ilp_options shrink;
    shrink.shrink_tau = true;
    CHECK(build_ilp(c4, shrink).tau == 4 - 1 + 1);
}

TEST_CASE("K2 model and empty graph") {
    const auto k2 = graph(2, {{0, 1}});
    ilp_options o;
    o.tau = 2;
    const auto m = build_ilp(k2, o);
    CHECK(m.binaries.size() == 8);
    const auto lp = format_lp(m);
    CHECK(lp.find("Maximize") != std::string::npos);
    CHECK(lp.find(" c2_0_1_2: x_0_2 + x_1_2 <= 1") != std::string::npos);
    CHECK(lp.find(" c6_1_2: z_1_2 + x_1_1 - x_1_2 >= 0") != std::string::npos);
    CHECK(lp.find("Binaries") != std::string::npos);
    CHECK(format_ilp_json(m).find("\"group_counts\"") != std::string::npos);

    const auto empty = build_ilp(crossing_graph{});
    CHECK(empty.group_counts()[2] == 0);
    const auto d = decode_ilp_solution(crossing_graph{}, empty, {{"y_min", 0}});
    CHECK(d.ok);
    CHECK(d.mu == 0);
}

TEST_CASE("decode round trips") {
    const auto k2 = graph(2, {{0, 1}});
    const auto c4 = graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    for (const auto* x : {&k2, &c4}) {
        const auto model = build_ilp(*x);
        const auto best = exact_solve(*x);
        const auto values = encode(*x, best.witness, model.tau);
        const auto d = decode_ilp_solution(*x, model, values);
        REQUIRE(d.ok);
        CHECK(d.story == best.witness);
        CHECK(d.mu == 1);
        CHECK(d.objective == 1);
    }

    // Vertex 3 enters together with vertex 1; everything else stays consistent.
    auto model = build_ilp(c4);
    auto values = encode(c4, {{0, 2}, {1, 3}}, model.tau);
    values["z_3_3"] = 0;
    values["z_3_2"] = 1;
    values["x_3_2"] = 1;
    const auto bad = decode_ilp_solution(c4, model, values);
    CHECK_FALSE(bad.ok);
    CHECK(bad.violated_group == 8);
    CHECK(bad.message.find("(8)") != std::string::npos);

    auto partial = encode(c4, exact_solve(c4).witness, model.tau);
    partial.erase("x_0_1");
    CHECK_FALSE(decode_ilp_solution(c4, model, partial).ok);
}

TEST_CASE("solution parsing") {
    const auto v = parse_ilp_solution("# objective 1\nx_0_1 1\ny_min 1.0\n\nz_0_1 0\n");
    CHECK(v.size() == 3);
    CHECK(v.at("y_min") == 1.0);
    CHECK_THROWS_AS(parse_ilp_solution("x_0_1\n"), input_error);
    CHECK_THROWS_AS(parse_ilp_solution("x_0_1 abc\n"), input_error);
    CHECK_THROWS_AS(parse_ilp_solution("x_0_1 1\nx_0_1 0\n"), input_error);
}
