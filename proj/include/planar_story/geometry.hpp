#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "planar_story/crossing_graph.hpp"

namespace pstory {

using rational = boost::multiprecision::cpp_rational;

struct point2d {
    rational x;
    rational y;

    friend bool operator==(const point2d&, const point2d&) = default;
};

// Exact value of a decimal literal such as "-12.5e-3". Throws input_error.
rational parse_decimal(std::string_view text);
// Shortest exact decimal rendering; throws if the value has no finite
// decimal expansion.
std::string to_decimal_string(const rational& value);

// Straight-line drawing: points plus vertex-index pairs.
struct geometric_graph {
    std::vector<point2d> vertices;
    std::vector<std::pair<int, int>> edges;

    // Throws input_error on self-loops, duplicate edges, indices out of
    // range, or two vertices at identical coordinates.
    void validate() const;
};

// True iff the closed segments share a point interior to at least one of
// them: proper crossings, T-contacts and collinear overlaps count, a shared
// endpoint alone does not. Exact; throws input_error on zero-length input.
bool segments_cross(const point2d& a1, const point2d& a2, const point2d& b1, const point2d& b2);

// Crossing graph restricted to edges that cross something; the number of
// crossing-free edges dropped is recorded as free_edge_count. Pairwise test
// over all edge pairs, parallelized with OpenMP.
crossing_graph build_crossing_graph(const geometric_graph& g);
// Single-threaded reference of the same construction.
crossing_graph build_crossing_graph_serial(const geometric_graph& g);

// JSON: {"vertices": [[x, y], ...], "edges": [[u, v], ...]} with coordinates
// given as numbers or decimal strings. Numbers are read from their literal
// text, not through a double.
geometric_graph parse_geometric_graph(std::string_view json_text);
std::string format_geometric_graph(const geometric_graph& g);

}  // namespace pstory
