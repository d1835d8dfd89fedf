#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <set>

#include "planar_story/generators.hpp"

namespace pstory {

bool is_connected(const crossing_graph& x) { return connected_components(x).size() <= 1; }

bool is_tree(const crossing_graph& x) {
    return x.size() >= 1 && is_connected(x) && static_cast<int>(x.edge_count()) == x.size() - 1;
}

bool is_caterpillar(const crossing_graph& x) {
    if (!is_tree(x)) return false;
    // Spine: non-leaves; each must have at most two non-leaf neighbors.
    for (int v = 0; v < x.size(); ++v) {
        if (x.degree(v) <= 1) continue;
        int inner = 0;
        for (int w : x.neighbors(v)) inner += x.degree(w) > 1;
        if (inner > 2) return false;
    }
    return true;
}

bool is_series_parallel(const crossing_graph& x) {
    const int n = x.size();
    std::vector<std::set<int>> adj(n);
    for (auto [a, b] : x.edges()) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<char> gone(n, 0);
    std::vector<int> work;
    for (int v = 0; v < n; ++v) work.push_back(v);
    int left = n;
    while (!work.empty()) {
        const int v = work.back();
        work.pop_back();
        if (gone[v] || adj[v].size() > 2) continue;
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        for (int w : nb) adj[w].erase(v);
        if (nb.size() == 2) {
            adj[nb[0]].insert(nb[1]);
            adj[nb[1]].insert(nb[0]);
        }
        adj[v].clear();
        gone[v] = 1;
        --left;
        for (int w : nb) work.push_back(w);
    }
    return left == 0;
}

bool is_planar(const crossing_graph& x) {
    using graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    graph g(x.size());
    for (auto [a, b] : x.edges()) boost::add_edge(a, b, g);
    return boost::boyer_myrvold_planarity_test(g);
}

}  // namespace pstory
