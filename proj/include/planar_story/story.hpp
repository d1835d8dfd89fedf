#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planar_story/crossing_graph.hpp"

namespace pstory {

// A planar story over a crossing graph: the initial frame plus the order in
// which the remaining vertices enter. Every frame is derived from these two.
struct planar_story {
    vertex_set initial;
    std::vector<int> order;

    friend bool operator==(const planar_story&, const planar_story&) = default;
};

constexpr int never_removed = -1;

struct story_trace {
    std::vector<vertex_set> frames;  // empty when simulated without frames
    std::vector<int> frame_sizes;
    int mu = 0;
    // Index of the first frame that no longer contains v, or never_removed.
    std::vector<int> removed_at;
};

// Frame i+1 is frame i minus the neighbors of order[i], plus order[i].
// Throws story_error if the initial frame is not independent or the order is
// not a permutation of the remaining vertices.
story_trace simulate(const crossing_graph& x, const planar_story& s, bool keep_frames = true);

enum class violation_kind {
    unknown_vertex,
    repeated_vertex,
    initial_not_independent,
    empty_initial,
    coverage_gap,
};

struct violation {
    violation_kind kind;
    std::vector<int> vertices;
    std::string message;
};

struct validation_report {
    std::vector<violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(violation_kind k) const;
    std::string summary() const;
};

// Checks the planar-story conditions; never throws on bad stories.
validation_report validate(const crossing_graph& x, const planar_story& s);

// Frame sizes shifted by the crossing-free edges that sit in every frame.
// The core values are what algorithms compare; the shifted ones are for
// display against the original drawing.
struct adjusted_sizes {
    std::vector<int> display_sizes;
    int display_mu = 0;
    int core_mu = 0;
};

adjusted_sizes report_with_free_edges(const story_trace& trace, int free_edge_count);

std::string story_to_json(const planar_story& s, std::optional<std::uint64_t> seed = std::nullopt);
planar_story story_from_json(const std::string& text);
std::string trace_to_json(const planar_story& s, const story_trace& t, int free_edge_count);

// The story of a graph with no crossings: the single empty frame.
inline bool is_trivial(const crossing_graph& x) { return x.empty(); }

}  // namespace pstory
