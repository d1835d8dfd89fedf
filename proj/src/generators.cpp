#include "planar_story/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

#include "planar_story/error.hpp"
#include "planar_story/rng.hpp"

namespace pstory {

namespace {

using edge_list = std::vector<std::pair<int, int>>;

crossing_graph relabel(int n, const edge_list& edges, rng& random) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    random.shuffle(perm);
    edge_list out;
    out.reserve(edges.size());
    for (auto [a, b] : edges) out.emplace_back(perm[a], perm[b]);
    return crossing_graph::from_edges(n, out);
}

int target_edges(int n, double d) {
    if (!(d >= 0) || !std::isfinite(d)) throw input_error("density must be a finite non-negative number");
    return static_cast<int>(std::llround(d * n));
}

// Deletes uniformly chosen non-bridge edges until `target` remain.
edge_list thin_connected(int n, edge_list edges, int target, rng& random) {
    while (static_cast<int>(edges.size()) > target) {
        std::vector<std::vector<std::pair<int, int>>> adj(n);
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            adj[edges[i].first].emplace_back(edges[i].second, i);
            adj[edges[i].second].emplace_back(edges[i].first, i);
        }
        // Bridges by low-link, iteratively.
        std::vector<int> disc(n, -1), low(n, 0);
        std::vector<char> bridge(edges.size(), 0);
        int timer = 0;
        for (int root = 0; root < n; ++root) {
            if (disc[root] >= 0) continue;
            std::vector<std::tuple<int, int, std::size_t>> stack{{root, -1, 0}};
            disc[root] = low[root] = timer++;
            while (!stack.empty()) {
                auto& [v, via, next] = stack.back();
                if (next < adj[v].size()) {
                    auto [w, id] = adj[v][next++];
                    if (id == via) continue;
                    if (disc[w] < 0) {
                        disc[w] = low[w] = timer++;
                        stack.emplace_back(w, id, 0);
                    } else {
                        low[v] = std::min(low[v], disc[w]);
                    }
                } else {
                    const int done = v, edge = via;
                    stack.pop_back();
                    if (!stack.empty()) {
                        const int parent = std::get<0>(stack.back());
                        low[parent] = std::min(low[parent], low[done]);
                        if (low[done] > disc[parent]) bridge[edge] = 1;
                    }
                }
            }
        }
        std::vector<int> removable;
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            if (!bridge[i]) removable.push_back(i);
        }
        if (removable.empty()) throw input_error("cannot thin further without disconnecting");
        const int drop = removable[random.below(removable.size())];
        edges.erase(edges.begin() + drop);
    }
    return edges;
}

}  // namespace

geometric_graph gen_random_geometric(int n, double d, std::uint64_t seed) {
    if (n < 1) throw input_error("random geometric graph needs n >= 1");
    const int m = target_edges(n, d);
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (m > pairs) throw input_error("density too high: " + std::to_string(m) + " edges on " + std::to_string(n) + " vertices");
    rng random(seed);

    // Partial Fisher-Yates over pair indices.
    std::vector<std::pair<int, int>> all;
    all.reserve(pairs);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
    }
    for (int i = 0; i < m; ++i) std::swap(all[i], all[i + random.below(all.size() - i)]);
    all.resize(m);
    std::sort(all.begin(), all.end());

    std::vector<double> px(n), py(n);
    for (int i = 0; i < n; ++i) {
        px[i] = random.unit();
        py[i] = random.unit();
    }
    const double k = std::sqrt(1.0 / n);
    const int iterations = static_cast<int>(std::ceil(50.0 * std::sqrt(static_cast<double>(n))));
    std::vector<double> dx(n), dy(n);
    for (int it = 0; it < iterations; ++it) {
        const double temperature = 0.1 * (1.0 - static_cast<double>(it) / iterations);
        std::fill(dx.begin(), dx.end(), 0.0);
        std::fill(dy.begin(), dy.end(), 0.0);
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                double ex = px[a] - px[b], ey = py[a] - py[b];
                const double dist = std::max(std::hypot(ex, ey), 1e-9);
                const double f = k * k / dist;
                dx[a] += ex / dist * f;
                dy[a] += ey / dist * f;
                dx[b] -= ex / dist * f;
                dy[b] -= ey / dist * f;
            }
        }
        for (auto [a, b] : all) {
            const double ex = px[a] - px[b], ey = py[a] - py[b];
            const double dist = std::max(std::hypot(ex, ey), 1e-9);
            const double f = dist * dist / k;
            dx[a] -= ex / dist * f;
            dy[a] -= ey / dist * f;
            dx[b] += ex / dist * f;
            dy[b] += ey / dist * f;
        }
        for (int a = 0; a < n; ++a) {
            const double len = std::hypot(dx[a], dy[a]);
            if (len > 0) {
                const double step = std::min(len, temperature);
                px[a] += dx[a] / len * step;
                py[a] += dy[a] / len * step;
            }
            px[a] = std::clamp(px[a], 0.0, 1.0);
            py[a] = std::clamp(py[a], 0.0, 1.0);
        }
    }

    geometric_graph g;
    std::set<std::pair<long long, long long>> used;
    for (int i = 0; i < n; ++i) {
        std::pair<long long, long long> q{std::llround(px[i] * 1e6), std::llround(py[i] * 1e6)};
        while (!used.insert(q).second) ++q.first;
        g.vertices.push_back({rational(q.first, 1000000), rational(q.second, 1000000)});
    }
    g.edges = std::move(all);
    g.validate();
    return g;
}

crossing_graph gen_caterpillar(int n, std::uint64_t seed, std::optional<int> spine) {
    if (n < 3) throw input_error("caterpillar needs n >= 3");
    rng random(seed);
    const int k = spine ? *spine : 1 + static_cast<int>(random.below(n - 2));
    if (k < 1 || k > n - 2) throw input_error("spine length must lie in 1..n-2");
    edge_list edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    int next = k;
    edges.emplace_back(0, next++);
    edges.emplace_back(k - 1, next++);
    while (next < n) edges.emplace_back(static_cast<int>(random.below(k)), next++);
    return relabel(n, edges, random);
}

crossing_graph tree_from_pruefer(int n, const std::vector<int>& sequence) {
    if (n < 2 || static_cast<int>(sequence.size()) != n - 2) throw input_error("Pruefer sequence must have n - 2 entries");
    std::vector<int> degree(n, 1);
    for (int v : sequence) {
        if (v < 0 || v >= n) throw input_error("Pruefer entry out of range");
        ++degree[v];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.push(v);
    }
    edge_list edges;
    for (int v : sequence) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1) leaves.push(v);
    }
    const int a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return crossing_graph::from_edges(n, edges);
}

crossing_graph gen_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw input_error("tree needs n >= 1");
    if (n == 1) return crossing_graph(1);
    rng random(seed);
    std::vector<int> seq(n - 2);
    for (int& v : seq) v = static_cast<int>(random.below(n));
    return tree_from_pruefer(n, seq);
}

crossing_graph gen_series_parallel(int n, double d, std::uint64_t seed) {
    if (n < 2) throw input_error("series-parallel graph needs n >= 2");
    const int m = target_edges(n, d);
    if (m < n - 1 || m > 2 * n - 3) {
        throw input_error("series-parallel edge count must lie in n-1..2n-3");
    }
    rng random(seed);
    // Every parallel step adds one more edge than a series step.
    const int min_parallel = std::max(0, m - n + 1);
    const int parallel = min_parallel + static_cast<int>(random.below(n - 2 - min_parallel + 1));
    std::vector<char> ops(n - 2, 0);
    std::fill(ops.begin(), ops.begin() + parallel, 1);
    random.shuffle(ops);

    edge_list edges{{0, 1}};
    int next = 2;
    for (char op : ops) {
        const int i = static_cast<int>(random.below(edges.size()));
        auto [a, b] = edges[i];
        const int w = next++;
        if (op) {
            edges.emplace_back(a, w);
            edges.emplace_back(w, b);
        } else {
            edges[i] = {a, w};
            edges.emplace_back(w, b);
        }
    }
    edges = thin_connected(n, std::move(edges), m, random);
    return relabel(n, edges, random);
}

crossing_graph gen_planar(int n, double d, std::uint64_t seed) {
    if (n < 1) throw input_error("planar graph needs n >= 1");
    const int m = target_edges(n, d);
    const int max_edges = n >= 3 ? 3 * n - 6 : n - 1;
    if (m > max_edges) throw input_error("planar graph on " + std::to_string(n) + " vertices has at most " + std::to_string(max_edges) + " edges");
    if (m < n - 1) throw input_error("connected graph needs at least n - 1 edges");
    rng random(seed);
    edge_list edges;
    if (n == 2) edges.emplace_back(0, 1);
    if (n >= 3) {
        edges = {{0, 1}, {1, 2}, {0, 2}};
        std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
        for (int v = 3; v < n; ++v) {
            const int i = static_cast<int>(random.below(faces.size()));
            const auto f = faces[i];
            for (int c : f) edges.emplace_back(c, v);
            faces[i] = {f[0], f[1], v};
            faces.push_back({f[1], f[2], v});
            faces.push_back({f[0], f[2], v});
        }
    }
    edges = thin_connected(n, std::move(edges), m, random);
    return relabel(n, edges, random);
}

fig3_instance gen_fig3_family(int ell) {
    if (ell < 4 || ell % 2 != 0) throw input_error("ell must be even and at least 4");
    fig3_instance f;
    f.ell = ell;
    edge_list edges{{f.r, f.u}, {f.r, f.v}};
    for (int i = 1; i <= ell; ++i) {
        edges.emplace_back(f.r, f.w(i));
        edges.emplace_back(f.u, f.u_leaf(i));
        edges.emplace_back(f.v, f.v_leaf(i));
    }
    f.x = crossing_graph::from_edges(3 * ell + 3, edges);
    f.mu_truth = 3 * ell / 2 + 1;
    f.maximal_start_bound = ell + 2;

    for (int i = 1; i <= ell; ++i) f.witness.initial.push_back(f.u_leaf(i));
    f.witness.initial.push_back(f.v);
    for (int i = 1; i <= ell / 2; ++i) f.witness.initial.push_back(f.w(i));
    std::sort(f.witness.initial.begin(), f.witness.initial.end());
    for (int i = 1; i <= ell; ++i) f.witness.order.push_back(f.v_leaf(i));
    f.witness.order.push_back(f.r);
    for (int i = ell / 2 + 1; i <= ell; ++i) f.witness.order.push_back(f.w(i));
    f.witness.order.push_back(f.u);

    auto frame = [&](bool with_r, bool with_u, bool with_v) {
        vertex_set s;
        if (with_r) s.push_back(f.r);
        if (with_u) s.push_back(f.u);
        if (with_v) s.push_back(f.v);
        for (int i = 1; i <= ell; ++i) {
            if (!with_r) s.push_back(f.w(i));
            if (!with_u) s.push_back(f.u_leaf(i));
            if (!with_v) s.push_back(f.v_leaf(i));
        }
        std::sort(s.begin(), s.end());
        return s;
    };
    f.maximal_frames = {frame(true, false, false), frame(false, false, false), frame(false, true, false),
                        frame(false, false, true), frame(false, true, true)};
    return f;
}

crossing_graph gen_star_plus(const crossing_graph& h, int k) {
    if (k < 0) throw input_error("k must be non-negative");
    auto edges = h.edges();
    const int center = h.size();
    for (int i = 1; i <= k + 1; ++i) edges.emplace_back(center, center + i);
    return crossing_graph::from_edges(center + k + 2, edges);
}

crossing_graph gen_nae3sat(const std::vector<nae_clause>& clauses) {
    std::map<int, std::vector<std::pair<int, int>>> occurrences;  // variable -> (clause vertex, sign)
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        const auto& c = clauses[j];
        for (int i = 0; i < 3; ++i) {
            if (c[i] == 0) throw input_error("literal 0 is not a variable", 0, "clauses[" + std::to_string(j) + "]");
            for (int h = 0; h < i; ++h) {
                if (std::abs(c[h]) == std::abs(c[i])) {
                    throw input_error("variable repeated within a clause", 0, "clauses[" + std::to_string(j) + "]");
                }
            }
            occurrences[std::abs(c[i])].emplace_back(static_cast<int>(3 * j + i), c[i] > 0 ? 1 : -1);
        }
    }
    edge_list edges;
    const int p = static_cast<int>(clauses.size());
    for (int j = 0; j < p; ++j) {
        edges.emplace_back(3 * j, 3 * j + 1);
        edges.emplace_back(3 * j + 1, 3 * j + 2);
        edges.emplace_back(3 * j, 3 * j + 2);
    }
    int next = 3 * p;
    for (const auto& [var, occ] : occurrences) {
        const int len = 2 * static_cast<int>(occ.size());
        for (int i = 0; i < len; ++i) {
            if (len == 2 && i == 1) break;
            edges.emplace_back(next + i, next + (i + 1) % len);
        }
        for (std::size_t i = 0; i < occ.size(); ++i) {
            const int positive = next + 2 * static_cast<int>(i);
            edges.emplace_back(occ[i].first, occ[i].second > 0 ? positive : positive + 1);
        }
        next += len;
    }
    return crossing_graph::from_edges(next, edges);
}

bool nae_satisfiable(const std::vector<nae_clause>& clauses) {
    int vars = 0;
    for (const auto& c : clauses) {
        for (int l : c) vars = std::max(vars, std::abs(l));
    }
    if (vars > 24) throw input_error("too many variables for exhaustive NAE check");
    for (std::uint32_t a = 0; a < (1u << vars); ++a) {
        bool ok = true;
        for (const auto& c : clauses) {
            int truths = 0;
            for (int l : c) {
                const bool value = (a >> (std::abs(l) - 1)) & 1u;
                truths += (l > 0) == value;
            }
            if (truths == 0 || truths == 3) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace pstory
