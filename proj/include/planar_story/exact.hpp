#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "planar_story/crossing_graph.hpp"
#include "planar_story/story.hpp"
#include "planar_story/treewidth.hpp"

namespace pstory {

struct exact_limits {
    int max_vertices = 22;
    double time_budget_seconds = 60.0;
    std::size_t memo_bytes = std::size_t{256} << 20;
    int width_cap = default_width_cap;  // for the pair bound and the 1a lower bound
};

enum class exact_status { optimal, timeout, too_large };

struct exact_result {
    exact_status status = exact_status::optimal;
    int mu_star = 0;        // meaningful when optimal
    planar_story witness;   // optimal story, or the best known one otherwise
    int best_known = 0;     // mu of the witness
    int upper_bound = 0;    // largest m not yet refuted
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

// Largest m with a story of minimum frame size >= m. Targets run from the
// upper bound down to just above the best heuristic value, each decided by
// a memoized search over (past, current) states.
exact_result exact_solve(const crossing_graph& x, const exact_limits& limits = {});

enum class decision_status { feasible, infeasible, timeout, too_large };

struct decision_result {
    decision_status status = decision_status::infeasible;
    std::optional<planar_story> witness;
    std::uint64_t nodes = 0;
};

// Is there a story with every frame of size >= m? With `forced_initial`
// only stories starting from exactly that frame are considered.
decision_result exact_decision(const crossing_graph& x, int m, const exact_limits& limits = {},
                               const std::optional<vertex_set>& forced_initial = std::nullopt);

}  // namespace pstory
