#include "planar_story/crossing_graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "planar_story/error.hpp"

namespace pstory {

crossing_graph crossing_graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw input_error("negative vertex count");
    crossing_graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw input_error("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
        }
        if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = g.adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
            throw input_error("duplicate edge at vertex " + std::to_string(v));
        }
    }
    g.edge_count_ = edges.size();
    return g;
}

int crossing_graph::max_degree() const {
    int best = 0;
    for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
    return best;
}

bool crossing_graph::adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> crossing_graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < size(); ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

crossing_graph parse_crossing_graph(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_line;
    int n = 0;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        int values[2];
        int count = 0;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            if (count == 2) throw input_error("expected exactly two vertex ids", line_no);
            int value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
            if (ec != std::errc{} || value < 0) throw input_error("invalid vertex id", line_no);
            values[count++] = value;
            i = static_cast<std::size_t>(ptr - line.data());
            if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
                throw input_error("invalid vertex id", line_no);
            }
        }
        if (count == 0) continue;
        if (count == 1) throw input_error("expected exactly two vertex ids", line_no);
        if (values[0] == values[1]) throw input_error("self-loop", line_no);
        edges.emplace_back(values[0], values[1]);
        edge_line.push_back(line_no);
        n = std::max({n, values[0] + 1, values[1] + 1});
    }

    // Report duplicates with the line that repeats an earlier edge.
    std::vector<std::pair<std::pair<int, int>, int>> keyed;
    keyed.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        keyed.push_back({{std::min(u, v), std::max(u, v)}, edge_line[i]});
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first == keyed[i - 1].first) throw input_error("duplicate edge", keyed[i].second);
    }
    return crossing_graph::from_edges(n, edges);
}

std::string format_crossing_graph(const crossing_graph& x) {
    std::ostringstream out;
    out << "# crossing graph: " << x.size() << " vertices, " << x.edge_count() << " edges\n";
    for (auto [u, v] : x.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

crossing_graph induced_subgraph(const crossing_graph& x, const vertex_set& keep) {
    std::vector<int> index(x.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : keep) {
        for (int v : x.neighbors(u)) {
            if (u < v && index[v] >= 0) edges.emplace_back(index[u], index[v]);
        }
    }
    auto sub = crossing_graph::from_edges(static_cast<int>(keep.size()), edges);
    std::vector<int> labels(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        labels[i] = x.edge_labels().empty() ? keep[i] : x.edge_labels()[keep[i]];
    }
    sub.set_edge_labels(std::move(labels));
    return sub;
}

crossing_graph strip_isolated(const crossing_graph& x) {
    vertex_set keep;
    for (int v = 0; v < x.size(); ++v) {
        if (x.degree(v) > 0) keep.push_back(v);
    }
    auto out = induced_subgraph(x, keep);
    out.set_free_edge_count(x.free_edge_count() + (x.size() - static_cast<int>(keep.size())));
    return out;
}

crossing_graph disjoint_union(const crossing_graph& a, const crossing_graph& b) {
    auto edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.size(), v + a.size());
    return crossing_graph::from_edges(a.size() + b.size(), edges);
}

bool is_independent(const crossing_graph& x, std::span<const int> set) {
    std::vector<char> in(x.size(), 0);
    for (int v : set) in[v] = 1;
    for (int v : set) {
        for (int w : x.neighbors(v)) {
            if (in[w]) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> connected_components(const crossing_graph& x) {
    std::vector<int> comp(x.size(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < x.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (int w : x.neighbors(members[i])) {
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace pstory
