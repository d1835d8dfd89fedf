#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "planar_story/crossing_graph.hpp"
#include "planar_story/story.hpp"
#include "planar_story/treewidth.hpp"

namespace pstory {

enum class phase1_variant {
    a,              // Pareto-optimal maximum pair (tree-decomposition DP)
    b,              // large I1 up to half the vertices, then maximal I_tau
    c,              // alternate growing I1 and I_tau
    given_pair,     // caller supplies (I1, I_tau)
    given_initial,  // Simple Greedy from a caller-supplied initial frame
    simple,         // Simple Greedy from the default initial frame
};

enum class phase2_variant {
    a,  // uniform over admissible vertices of minimum current degree
    b,  // ... restricted to those whose removed neighbors free the most future vertices
};

struct greedy_config {
    phase1_variant phase1 = phase1_variant::c;
    phase2_variant phase2 = phase2_variant::a;
    std::uint64_t seed = 0;
    std::optional<independent_pair> pair_override;  // with given_pair
    std::optional<vertex_set> initial_override;     // with given_initial
    int width_cap = default_width_cap;              // for variant a
};

// "simple", "ag-1a2a", ..., "ag-1c2b". Throws input_error on unknown names.
greedy_config parse_algorithm(std::string_view name, std::uint64_t seed = 0);
std::string algorithm_name(const greedy_config& cfg);

// Phase 1, variant b. Degrees are taken in the graph still open to the set
// being grown.
independent_pair phase1_variant_b(const crossing_graph& x, std::uint64_t seed);
// Phase 1, variant c; the smaller set is returned first.
independent_pair phase1_variant_c(const crossing_graph& x, std::uint64_t seed);

// Variant-b I1 grown further until it is a maximal independent set.
vertex_set default_initial_frame(const crossing_graph& x, std::uint64_t seed);

// Each step inserts a future vertex of minimum current degree, ties uniform
// under the seed.
planar_story simple_greedy(const crossing_graph& x, const vertex_set& initial, std::uint64_t seed);

// Starts at `initial`; a future vertex is admissible unless it belongs to
// `final_target` and still has a future neighbor. Every vertex of
// final_target is in the last frame. A non-empty tie_rank narrows each tie
// set to its lowest-ranked vertices before the random choice.
planar_story advanced_greedy(const crossing_graph& x, const vertex_set& initial, const vertex_set& final_target,
                             phase2_variant phase2, std::uint64_t seed, std::span<const int> tie_rank = {});

enum class heuristic_status { ok, unavailable };

struct heuristic_result {
    heuristic_status status = heuristic_status::ok;
    std::string message;
    planar_story story;
    story_trace trace;
    independent_pair pair;  // phase-1 output (empty target for Simple Greedy)
    double seconds = 0.0;
};

// Phase 1 dispatch, Phase 2, simulation and wall time. Variant a uses the
// linear-time path/cycle construction, with its tie rank, when every degree
// is at most two and the DP otherwise; a decomposition over the width cap is
// reported as unavailable. Isolated vertices join the initial frame.
heuristic_result run_heuristic(const crossing_graph& x, const greedy_config& cfg);

}  // namespace pstory
