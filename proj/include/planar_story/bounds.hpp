#pragma once

#include <optional>
#include <string>

#include "planar_story/crossing_graph.hpp"
#include "planar_story/treewidth.hpp"

namespace pstory {

// Upper bounds on the best minimum frame size.
struct bounds {
    int half_edges = 0;                      // floor(n_X / 2)
    std::optional<int> pair_bound;           // min side of a maximum disjoint independent pair
    std::optional<int> initial_frame_bound;  // min(|F|, alpha(X - F)) for a given initial frame F
    std::string unavailable;                 // why a requested component is missing
};

struct bound_options {
    int width_cap = default_width_cap;
    int exact_mis_vertices = 64;  // above this the DP computes alpha(X - F)
};

// Throws input_error if `initial` is not an independent set of x.
bounds upper_bounds(const crossing_graph& x, const std::optional<vertex_set>& initial = std::nullopt,
                    const bound_options& options = {});

// Size of a maximum pair via the path/cycle construction or the DP; empty
// if the decomposition exceeds the cap.
std::optional<int> pair_bound(const crossing_graph& x, int width_cap = default_width_cap);

// Exact maximum independent set by branch and bound over 64-bit masks.
// Throws input_error above 64 vertices.
vertex_set maximum_independent_set(const crossing_graph& x);

}  // namespace pstory
