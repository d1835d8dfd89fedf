#include <algorithm>

#include "planar_story/error.hpp"
#include "planar_story/treewidth.hpp"

namespace pstory {

namespace {

struct component {
    std::vector<int> walk;  // consecutive vertices are adjacent
    bool cycle = false;
};

std::vector<component> paths_and_cycles(const crossing_graph& x) {
    const int n = x.size();
    std::vector<char> seen(n, 0);
    std::vector<component> out;
    auto walk_from = [&](int start) {
        component c;
        int prev = -1, v = start;
        while (v >= 0 && !seen[v]) {
            seen[v] = 1;
            c.walk.push_back(v);
            int next = -1;
            for (int w : x.neighbors(v)) {
                if (w != prev && !seen[w]) {
                    next = w;
                    break;
                }
            }
            prev = v;
            v = next;
        }
        return c;
    };
    // Paths first from their endpoints; whatever is left lies on cycles.
    for (int v = 0; v < n; ++v) {
        if (!seen[v] && x.degree(v) <= 1) out.push_back(walk_from(v));
    }
    for (int v = 0; v < n; ++v) {
        if (!seen[v]) {
            out.push_back(walk_from(v));
            out.back().cycle = true;
        }
    }
    return out;
}

}  // namespace

degree2_pair degree2_maximum_pair(const crossing_graph& x) {
    if (x.max_degree() > 2) throw input_error("degree2_maximum_pair needs maximum degree at most 2");

    const auto comps = paths_and_cycles(x);
    int odd_paths = 0;
    bool has_even_cycle = false;
    for (const auto& c : comps) {
        const bool odd = c.walk.size() % 2 == 1;
        if (!c.cycle && odd) ++odd_paths;
        if (c.cycle && !odd) has_even_cycle = true;
    }
    // The first ceil(k/2) odd paths hand their larger alternation to I_tau.
    const int to_tau = (odd_paths + 1) / 2;

    degree2_pair out;
    auto& first = out.pair.first;
    auto& second = out.pair.second;
    out.tie_rank.assign(x.size(), 0);
    int odd_seen = 0;
    for (const auto& c : comps) {
        const int len = static_cast<int>(c.walk.size());
        bool flip = false;
        if (!c.cycle && len % 2 == 1) {
            flip = odd_seen++ < to_tau;
            if (!flip) {
                for (int v : c.walk) out.tie_rank[v] = 1;
            }
        }
        for (int i = 0; i < len; ++i) {
            if (c.cycle && len % 2 == 1 && i == len - 1) break;  // one vertex of each odd cycle is left out
            const bool even_position = i % 2 == 0;
            (even_position != flip ? first : second).push_back(c.walk[i]);
        }
    }
    std::sort(first.begin(), first.end());
    std::sort(second.begin(), second.end());
    out.predicted_mu = out.pair.min_size() - (has_even_cycle && odd_paths == 0 ? 1 : 0);
    return out;
}

}  // namespace pstory
