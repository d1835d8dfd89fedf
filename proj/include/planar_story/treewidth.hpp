#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planar_story/crossing_graph.hpp"

namespace pstory {

// Rooted tree decomposition. parent[root] == -1.
struct tree_decomposition {
    std::vector<vertex_set> bags;
    std::vector<int> parent;
    int root = -1;

    int width() const;
    std::vector<std::vector<int>> children() const;
};

struct decomposition_result {
    std::optional<tree_decomposition> td;  // empty when the cap was exceeded
    int width = -1;                        // attained width either way

    bool cap_exceeded() const { return !td.has_value(); }
};

constexpr int default_width_cap = 12;

// Elimination by the Minimum Fill-in heuristic: each step eliminates the
// vertex whose neighborhood needs the fewest fill edges, ties broken by
// fewer neighbors and then uniformly under the seed. Disconnected graphs yield
// one tree with the component trees hung under a common root.
decomposition_result min_fill_in_decomposition(const crossing_graph& x, int width_cap = default_width_cap,
                                               std::uint64_t seed = 0);

// Coverage, edge containment and connectivity of every vertex's occurrences.
bool verify_decomposition(const crossing_graph& x, const tree_decomposition& td);

// PACE .td text: "s td <bags> <width+1> <n>", "b <i> <v...>" (1-based), then
// tree edges "i j". The first bag becomes the root on import.
std::string format_pace_td(const tree_decomposition& td, int n);
tree_decomposition parse_pace_td(std::string_view text);

struct pareto_pair {
    int alpha = 0;  // size of the first independent set
    int beta = 0;   // size of the second

    friend bool operator==(const pareto_pair&, const pareto_pair&) = default;
};

// Pareto frontier of (alpha, beta), alpha strictly decreasing and beta
// strictly increasing.
using pareto_list = std::vector<pareto_pair>;

// Reduces an arbitrary list of pairs to its Pareto frontier.
pareto_list pareto_front(std::vector<pareto_pair> pairs);

enum class execution { serial, parallel };

// Pareto frontier of sizes of disjoint independent-set pairs of x, via the
// red/blue/white bag-coloring dynamic program over td.
pareto_list pareto_pairs(const crossing_graph& x, const tree_decomposition& td,
                         execution mode = execution::parallel);

struct independent_pair {
    vertex_set first;   // the smaller side
    vertex_set second;  // the larger side

    int min_size() const { return static_cast<int>(std::min(first.size(), second.size())); }
};

// A Pareto-optimal maximum pair: max min{a, b}, then max max{a, b}; witness
// sets recovered by tracing the table provenance back from the root.
independent_pair maximum_pair(const crossing_graph& x, const tree_decomposition& td,
                              execution mode = execution::parallel);

struct degree2_pair {
    independent_pair pair;
    int predicted_mu = 0;
    // Phase-2 tie rank per vertex: 1 on odd paths whose larger side is in
    // I_1, 0 elsewhere. Even cycles must finish before those paths start.
    std::vector<int> tie_rank;
};

// Linear-time maximum pair for graphs whose components are paths and
// cycles, arranged so Advanced Greedy reaches the optimum. Throws
// input_error if some vertex has degree above two.
degree2_pair degree2_maximum_pair(const crossing_graph& x);

// A bag coloring as a base-3 index over the bag's vertex order; digit 0 is
// white, 1 red, 2 blue.
enum class bag_color : std::uint8_t { white = 0, red = 1, blue = 2 };

std::uint32_t encode_coloring(const std::vector<bag_color>& colors);
std::vector<bag_color> decode_coloring(std::uint32_t index, int bag_size);

}  // namespace pstory
