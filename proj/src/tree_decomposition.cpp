#include "planar_story/treewidth.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "planar_story/error.hpp"
#include "planar_story/rng.hpp"

namespace pstory {

int tree_decomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

std::vector<std::vector<int>> tree_decomposition::children() const {
    std::vector<std::vector<int>> out(bags.size());
    for (std::size_t i = 0; i < parent.size(); ++i) {
        if (parent[i] >= 0) out[parent[i]].push_back(static_cast<int>(i));
    }
    return out;
}

namespace {

class fill_graph {
public:
    explicit fill_graph(const crossing_graph& x) : n_(x.size()), matrix_(static_cast<std::size_t>(n_) * n_, 0), adj_(n_) {
        for (int v = 0; v < n_; ++v) {
            for (int w : x.neighbors(v)) {
                matrix_[index(v, w)] = 1;
                adj_[v].push_back(w);
            }
        }
    }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int fill_count(int v) const {
        const auto& nb = adj_[v];
        int missing = 0;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (!matrix_[index(nb[i], nb[j])]) ++missing;
            }
        }
        return missing;
    }

    // Turns v's neighborhood into a clique and removes v.
    void eliminate(int v) {
        const auto nb = adj_[v];
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const int a = nb[i], b = nb[j];
                if (!matrix_[index(a, b)]) {
                    matrix_[index(a, b)] = matrix_[index(b, a)] = 1;
                    adj_[a].push_back(b);
                    adj_[b].push_back(a);
                }
            }
        }
        for (int w : nb) {
            auto& a = adj_[w];
            a.erase(std::find(a.begin(), a.end(), v));
            matrix_[index(v, w)] = matrix_[index(w, v)] = 0;
        }
        adj_[v].clear();
    }

private:
    std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }

    int n_;
    std::vector<char> matrix_;
    std::vector<std::vector<int>> adj_;
};

}  // namespace

decomposition_result min_fill_in_decomposition(const crossing_graph& x, int width_cap, std::uint64_t seed) {
    const int n = x.size();
    decomposition_result result;
    if (n == 0) {
        result.td = tree_decomposition{};
        return result;
    }

    rng random(seed);
    fill_graph g(x);
    std::vector<int> fill(n);
    for (int v = 0; v < n; ++v) fill[v] = g.fill_count(v);
    std::vector<char> alive(n, 1);
    std::vector<int> position(n, -1);
    std::vector<vertex_set> bag_of(n);
    std::vector<int> ties;
    std::vector<char> dirty(n, 0);

    for (int step = 0; step < n; ++step) {
        ties.clear();
        int best_fill = 0, best_degree = 0;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            const int d = static_cast<int>(g.neighbors(v).size());
            if (ties.empty() || fill[v] < best_fill || (fill[v] == best_fill && d < best_degree)) {
                ties.assign(1, v);
                best_fill = fill[v];
                best_degree = d;
            } else if (fill[v] == best_fill && d == best_degree) {
                ties.push_back(v);
            }
        }
        const int v = ties.size() == 1 ? ties[0] : random.pick(ties);

        vertex_set bag = g.neighbors(v);
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        bag_of[v] = std::move(bag);
        position[v] = step;
        alive[v] = 0;

        std::vector<int> touched;
        for (int w : g.neighbors(v)) {
            if (!dirty[w]) { dirty[w] = 1; touched.push_back(w); }
            for (int u : g.neighbors(w)) {
                if (!dirty[u]) { dirty[u] = 1; touched.push_back(u); }
            }
        }
        g.eliminate(v);
        // Newly added fill edges only join vertices of N(v); their common
        // neighbors are neighbors of N(v) in the old graph, already touched.
        for (int w : touched) {
            dirty[w] = 0;
            if (alive[w]) fill[w] = g.fill_count(w);
        }
    }

    tree_decomposition td;
    td.bags.resize(n);
    td.parent.assign(n, -1);
    std::vector<int> roots;
    for (int v = 0; v < n; ++v) {
        td.bags[v] = bag_of[v];
        int next = -1;
        for (int w : bag_of[v]) {
            if (w != v && (next < 0 || position[w] < position[next])) next = w;
        }
        if (next >= 0) {
            td.parent[v] = next;
        } else {
            roots.push_back(v);
        }
    }
    td.root = roots.back();
    for (int r : roots) {
        if (r != td.root) td.parent[r] = td.root;
    }
    result.width = td.width();
    if (result.width <= width_cap) result.td = std::move(td);
    return result;
}

bool verify_decomposition(const crossing_graph& x, const tree_decomposition& td) {
    const int nodes = static_cast<int>(td.bags.size());
    const int n = x.size();
    if (nodes == 0) return n == 0;
    if (static_cast<int>(td.parent.size()) != nodes || td.root < 0 || td.root >= nodes) return false;
    if (td.parent[td.root] != -1) return false;

    // The parent links must form a single tree rooted at td.root.
    for (int i = 0; i < nodes; ++i) {
        if (i != td.root && (td.parent[i] < 0 || td.parent[i] >= nodes)) return false;
        int steps = 0;
        for (int cur = i; cur != td.root; cur = td.parent[cur]) {
            if (cur < 0 || ++steps > nodes) return false;
        }
    }

    std::vector<std::vector<char>> member(nodes, std::vector<char>(n, 0));
    for (int i = 0; i < nodes; ++i) {
        for (int v : td.bags[i]) {
            if (v < 0 || v >= n) return false;
            member[i][v] = 1;
        }
    }
    // Each vertex must have exactly one topmost occurrence.
    std::vector<int> tops(n, 0);
    for (int i = 0; i < nodes; ++i) {
        for (int v : td.bags[i]) {
            const int p = td.parent[i];
            if (p < 0 || !member[p][v]) ++tops[v];
        }
    }
    for (int v = 0; v < n; ++v) {
        if (tops[v] != 1) return false;
    }
    for (auto [u, v] : x.edges()) {
        bool found = false;
        for (int i = 0; i < nodes && !found; ++i) found = member[i][u] && member[i][v];
        if (!found) return false;
    }
    return true;
}

std::string format_pace_td(const tree_decomposition& td, int n) {
    std::ostringstream out;
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (std::size_t i = 0; i < td.parent.size(); ++i) {
        if (td.parent[i] >= 0) out << td.parent[i] + 1 << ' ' << i + 1 << '\n';
    }
    return out.str();
}

tree_decomposition parse_pace_td(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int bag_count = -1;
    int vertex_count = 0;
    tree_decomposition td;
    std::vector<std::vector<int>> adj;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head == "c") continue;
        if (head == "s") {
            std::string kind;
            int width_plus_one = 0, n = 0;
            if (!(ls >> kind >> bag_count >> width_plus_one >> n) || kind != "td" || bag_count < 0) {
                throw input_error("bad solution line", line_no);
            }
            vertex_count = n;
            td.bags.assign(bag_count, {});
            adj.assign(bag_count, {});
        } else if (head == "b") {
            int id = 0;
            if (bag_count < 0 || !(ls >> id) || id < 1 || id > bag_count) throw input_error("bad bag line", line_no);
            int v;
            while (ls >> v) {
                if (v < 1 || v > vertex_count) throw input_error("bad vertex id", line_no);
                td.bags[id - 1].push_back(v - 1);
            }
            std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
        } else {
            int a = 0, b = 0;
            auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), a);
            if (ec != std::errc{} || !(ls >> b) || bag_count < 0 || a < 1 || b < 1 || a > bag_count || b > bag_count) {
                throw input_error("bad tree edge", line_no);
            }
            adj[a - 1].push_back(b - 1);
            adj[b - 1].push_back(a - 1);
        }
    }
    if (bag_count < 0) throw input_error("missing 's td' line");
    td.parent.assign(bag_count, -1);
    if (bag_count == 0) return td;
    td.root = 0;
    std::vector<char> seen(bag_count, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (int w : adj[queue[i]]) {
            if (!seen[w]) {
                seen[w] = 1;
                td.parent[w] = queue[i];
                queue.push_back(w);
            }
        }
    }
    if (static_cast<int>(queue.size()) != bag_count) throw input_error("decomposition tree is disconnected");
    return td;
}

std::uint32_t encode_coloring(const std::vector<bag_color>& colors) {
    std::uint32_t index = 0;
    for (std::size_t i = colors.size(); i-- > 0;) index = index * 3 + static_cast<std::uint32_t>(colors[i]);
    return index;
}

std::vector<bag_color> decode_coloring(std::uint32_t index, int bag_size) {
    std::vector<bag_color> out(bag_size);
    for (int i = 0; i < bag_size; ++i) {
        out[i] = static_cast<bag_color>(index % 3);
        index /= 3;
    }
    return out;
}

}  // namespace pstory
