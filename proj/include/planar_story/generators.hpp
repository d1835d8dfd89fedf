#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "planar_story/crossing_graph.hpp"
#include "planar_story/geometry.hpp"
#include "planar_story/story.hpp"

namespace pstory {

// Uniform simple graph with round(d * n) edges, laid out by
// Fruchterman-Reingold (50 sqrt(n) iterations, unit square) with coordinates
// rounded to six decimals. Throws input_error if the edge count is
// infeasible.
geometric_graph gen_random_geometric(int n, double d, std::uint64_t seed);

// Caterpillar on n >= 3 vertices. The number of spine vertices is uniform
// over 1..n-2 unless forced; two leaves sit at the spine ends, the rest on
// uniform spine vertices. Labels are shuffled.
crossing_graph gen_caterpillar(int n, std::uint64_t seed, std::optional<int> spine = std::nullopt);

// Uniform labeled tree from a random Pruefer sequence.
crossing_graph gen_random_tree(int n, std::uint64_t seed);
crossing_graph tree_from_pruefer(int n, const std::vector<int>& sequence);

// Two-terminal series/parallel composition on n vertices, then random
// deletions of non-bridge edges down to round(d * n) edges.
crossing_graph gen_series_parallel(int n, double d, std::uint64_t seed);

// Random stacked triangulation on n vertices, thinned to round(d * n) edges
// by deleting non-bridge edges. Throws input_error above 3n - 6 edges.
crossing_graph gen_planar(int n, double d, std::uint64_t seed);

struct fig3_instance {
    int ell = 0;
    crossing_graph x;
    int mu_truth = 0;             // 3 ell / 2 + 1
    int maximal_start_bound = 0;  // ell + 2
    planar_story witness;         // reaches mu_truth
    std::vector<vertex_set> maximal_frames;  // every maximal independent set
    // Vertex ids: r, u, v, then w_1..w_ell, u_1..u_ell, v_1..v_ell.
    int r = 0, u = 1, v = 2;
    int w(int i) const { return 2 + i; }
    int u_leaf(int i) const { return 2 + ell + i; }
    int v_leaf(int i) const { return 2 + 2 * ell + i; }
};

// Caterpillar on 3 ell + 3 vertices whose optimal stories all start from a
// non-maximal frame. ell >= 4 and even.
fig3_instance gen_fig3_family(int ell);

// h plus a disjoint star with k + 1 leaves; the star's center comes right
// after h's vertices, then the leaves.
crossing_graph gen_star_plus(const crossing_graph& h, int k);

// Literal +i / -i for variable i >= 1.
using nae_clause = std::array<int, 3>;

// Per clause a triangle of its literals (vertices 3j..3j+2); per variable
// with d occurrences a 2d-cycle alternating x / not x (d = 1 gives a single
// edge); each clause vertex joined to the same-labelled vertex of its
// variable's cycle at that occurrence. Throws input_error on repeated
// variables within a clause.
crossing_graph gen_nae3sat(const std::vector<nae_clause>& clauses);
bool nae_satisfiable(const std::vector<nae_clause>& clauses);

bool is_connected(const crossing_graph& x);
bool is_tree(const crossing_graph& x);
bool is_caterpillar(const crossing_graph& x);
// No K4 minor: reduces to nothing by deleting vertices of degree <= 1 and
// suppressing vertices of degree 2.
bool is_series_parallel(const crossing_graph& x);
bool is_planar(const crossing_graph& x);

}  // namespace pstory
