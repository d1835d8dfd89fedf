#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pstory {

using vertex_set = std::vector<int>;  // sorted, duplicate-free vertex ids

// Simple undirected graph over crossing edges of a drawing. Vertex v of the
// crossing graph stands for edge edge_labels()[v] of the drawing (or of the
// original id space after strip_isolated()).
class crossing_graph {
public:
    crossing_graph() = default;
    explicit crossing_graph(int n) : adj_(n) {}

    // Throws input_error on self-loops, duplicate edges, or ids out of range.
    static crossing_graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int size() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool adjacent(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;

    const std::vector<int>& edge_labels() const { return labels_; }
    void set_edge_labels(std::vector<int> labels) { labels_ = std::move(labels); }
    int free_edge_count() const { return free_edges_; }
    void set_free_edge_count(int count) { free_edges_ = count; }

    bool operator==(const crossing_graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
    std::vector<int> labels_;
    int free_edges_ = 0;
};

// Edge-list text: one "u v" per line, '#' starts a comment, vertex count is
// max id + 1.
crossing_graph parse_crossing_graph(std::string_view text);
std::string format_crossing_graph(const crossing_graph& x);

// Drops isolated vertices, relabels compactly, and adds them to
// free_edge_count. Labels are composed with any existing labels.
crossing_graph strip_isolated(const crossing_graph& x);

crossing_graph induced_subgraph(const crossing_graph& x, const vertex_set& keep);
crossing_graph disjoint_union(const crossing_graph& a, const crossing_graph& b);

bool is_independent(const crossing_graph& x, std::span<const int> set);
std::vector<std::vector<int>> connected_components(const crossing_graph& x);

}  // namespace pstory
