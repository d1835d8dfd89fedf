#include "planar_story/bounds.hpp"

#include <algorithm>

#include "planar_story/error.hpp"

namespace pstory {

std::optional<int> pair_bound(const crossing_graph& x, int width_cap) {
    if (x.empty()) return 0;
    if (x.max_degree() <= 2) return degree2_maximum_pair(x).pair.min_size();
    auto dec = min_fill_in_decomposition(x, width_cap);
    if (dec.cap_exceeded()) return std::nullopt;
    int best = 0;
    for (const auto& p : pareto_pairs(x, *dec.td)) best = std::max(best, std::min(p.alpha, p.beta));
    return best;
}

namespace {

std::optional<int> independence_number(const crossing_graph& x, const bound_options& options) {
    if (x.size() <= options.exact_mis_vertices && x.size() <= 64) {
        return static_cast<int>(maximum_independent_set(x).size());
    }
    auto dec = min_fill_in_decomposition(x, options.width_cap);
    if (dec.cap_exceeded()) return std::nullopt;
    int best = 0;
    for (const auto& p : pareto_pairs(x, *dec.td)) best = std::max(best, p.alpha);
    return best;
}

}  // namespace

bounds upper_bounds(const crossing_graph& x, const std::optional<vertex_set>& initial, const bound_options& options) {
    bounds b;
    b.half_edges = x.size() / 2;
    b.pair_bound = pair_bound(x, options.width_cap);
    if (!b.pair_bound) b.unavailable = "pair bound: tree decomposition exceeds width cap";

    if (initial) {
        for (int v : *initial) {
            if (v < 0 || v >= x.size()) throw input_error("initial frame vertex out of range");
        }
        if (!is_independent(x, *initial)) throw input_error("initial frame is not an independent set");
        std::vector<char> in_initial(x.size(), 0);
        for (int v : *initial) in_initial[v] = 1;
        vertex_set keep;
        for (int v = 0; v < x.size(); ++v) {
            if (!in_initial[v]) keep.push_back(v);
        }
        auto alpha = independence_number(induced_subgraph(x, keep), options);
        if (alpha) {
            b.initial_frame_bound = std::min(static_cast<int>(initial->size()), *alpha);
        } else {
            if (!b.unavailable.empty()) b.unavailable += "; ";
            b.unavailable += "initial frame bound: tree decomposition exceeds width cap";
        }
    }
    return b;
}

}  // namespace pstory
