#include <algorithm>
#include <cstdint>
#include <numeric>

#include "planar_story/error.hpp"
#include "planar_story/treewidth.hpp"

namespace pstory {

namespace {

template <class Tagged>
void prune_tagged(std::vector<Tagged>& items) {
    std::stable_sort(items.begin(), items.end(), [](const Tagged& a, const Tagged& b) {
        return a.pair.alpha != b.pair.alpha ? a.pair.alpha > b.pair.alpha : a.pair.beta > b.pair.beta;
    });
    std::size_t kept = 0;
    int best_beta = -1;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i].pair.beta > best_beta) {
            best_beta = items[i].pair.beta;
            items[kept++] = items[i];
        }
    }
    items.resize(kept);
}

struct plain {
    pareto_pair pair;
};

constexpr int max_bag_size = 15;

std::uint32_t pow3(int k) {
    std::uint32_t p = 1;
    while (k-- > 0) p *= 3;
    return p;
}

// Lists indexed by coloring, stored flat.
template <class T>
struct csr {
    std::vector<std::uint32_t> offset;
    std::vector<T> items;

    std::uint32_t begin(std::uint32_t c) const { return offset[c]; }
    std::uint32_t end(std::uint32_t c) const { return offset[c + 1]; }
    std::uint32_t count(std::uint32_t c) const { return offset[c + 1] - offset[c]; }

    static csr pack(std::vector<std::vector<T>>& lists) {
        csr out;
        out.offset.resize(lists.size() + 1, 0);
        std::size_t total = 0;
        for (std::size_t c = 0; c < lists.size(); ++c) {
            out.offset[c] = static_cast<std::uint32_t>(total);
            total += lists[c].size();
        }
        out.offset[lists.size()] = static_cast<std::uint32_t>(total);
        out.items.reserve(total);
        for (auto& l : lists) {
            out.items.insert(out.items.end(), l.begin(), l.end());
            std::vector<T>().swap(l);
        }
        return out;
    }
};

struct step_link {
    std::uint32_t prev;     // entry index before this child was merged
    std::uint32_t summary;  // entry index in the child's summary list
};

struct summary_link {
    std::uint32_t child_coloring;
    std::uint32_t child_entry;
};

struct node_data {
    std::vector<int> order;  // bag vertices, those shared with the parent last
    int shared = 0;          // how many trailing vertices are shared
    std::vector<csr<step_link>> steps;  // one per child, in child order
    // Child-facing summary: per shared coloring, the merged frontier over all
    // compatible colorings of this node.
    csr<summary_link> summary;
    std::vector<pareto_pair> summary_pairs;
    std::vector<std::uint32_t> shared_position;  // in the parent's order
};

class pareto_dp {
public:
    pareto_dp(const crossing_graph& x, const tree_decomposition& td, execution mode)
        : x_(x), td_(td), mode_(mode), nodes_(td.bags.size()), children_(td.children()) {}

    void run() {
        for (const auto& b : td_.bags) {
            if (static_cast<int>(b.size()) > max_bag_size) throw input_error("bag too large for the pair table");
        }
        order_nodes();
        for (int v : postorder_) compute(v);
    }

    // (pair, root coloring, entry) frontier at the root.
    struct root_entry {
        pareto_pair pair;
        std::uint32_t coloring;
        std::uint32_t entry;
    };

    const std::vector<root_entry>& root_front() const { return root_front_; }

    independent_pair trace(const root_entry& start) const {
        std::vector<char> red(x_.size(), 0), blue(x_.size(), 0);
        struct frame {
            int node;
            std::uint32_t coloring;
            std::uint32_t entry;
        };
        std::vector<frame> stack{{td_.root, start.coloring, start.entry}};
        while (!stack.empty()) {
            auto [node, coloring, entry] = stack.back();
            stack.pop_back();
            const auto& data = nodes_[node];
            const int k = static_cast<int>(data.order.size());
            auto colors = decode_coloring(coloring, k);
            for (int i = 0; i < k; ++i) {
                if (colors[i] == bag_color::red) red[data.order[i]] = 1;
                if (colors[i] == bag_color::blue) blue[data.order[i]] = 1;
            }
            const auto& kids = children_[node];
            for (std::size_t s = kids.size(); s-- > 0;) {
                const auto& link = data.steps[s].items[data.steps[s].begin(coloring) + entry];
                const auto& child = nodes_[kids[s]];
                const std::uint32_t shared_index = project(colors, child);
                const auto& sl = child.summary.items[child.summary.begin(shared_index) + link.summary];
                stack.push_back({kids[s], sl.child_coloring, sl.child_entry});
                entry = link.prev;
            }
        }
        independent_pair out;
        for (int v = 0; v < x_.size(); ++v) {
            if (red[v]) out.first.push_back(v);
            if (blue[v]) out.second.push_back(v);
        }
        return out;
    }

private:
    void order_nodes() {
        std::vector<int> stack{td_.root};
        std::vector<int> pre;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            pre.push_back(v);
            for (int c : children_[v]) stack.push_back(c);
        }
        postorder_.assign(pre.rbegin(), pre.rend());

        for (std::size_t v = 0; v < nodes_.size(); ++v) {
            const auto& bag = td_.bags[v];
            const int p = td_.parent[v];
            std::vector<int> own, shared;
            for (int u : bag) {
                if (p >= 0 && std::binary_search(td_.bags[p].begin(), td_.bags[p].end(), u)) {
                    shared.push_back(u);
                } else {
                    own.push_back(u);
                }
            }
            nodes_[v].order = own;
            nodes_[v].order.insert(nodes_[v].order.end(), shared.begin(), shared.end());
            nodes_[v].shared = static_cast<int>(shared.size());
        }
        for (std::size_t v = 0; v < nodes_.size(); ++v) {
            const int p = td_.parent[v];
            if (p < 0) continue;
            auto& data = nodes_[v];
            const auto& parent_order = nodes_[p].order;
            const int own = static_cast<int>(data.order.size()) - data.shared;
            for (int j = 0; j < data.shared; ++j) {
                const int u = data.order[own + j];
                data.shared_position.push_back(static_cast<std::uint32_t>(
                    std::find(parent_order.begin(), parent_order.end(), u) - parent_order.begin()));
            }
        }
    }

    static std::uint32_t project(const std::vector<bag_color>& parent_colors, const node_data& child) {
        std::uint32_t index = 0;
        for (std::size_t j = child.shared_position.size(); j-- > 0;) {
            index = index * 3 + static_cast<std::uint32_t>(parent_colors[child.shared_position[j]]);
        }
        return index;
    }

    void compute(int node) {
        auto& data = nodes_[node];
        const int k = static_cast<int>(data.order.size());
        const std::uint32_t colorings = pow3(k);

        std::vector<std::uint32_t> local_adj(k, 0);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                if (i != j && x_.adjacent(data.order[i], data.order[j])) local_adj[i] |= 1u << j;
            }
        }

        // Initial lists: the bag's own red/blue counts where both color
        // classes are independent.
        std::vector<std::vector<pareto_pair>> current(colorings);
        const bool par = mode_ == execution::parallel;
#pragma omp parallel for schedule(dynamic, 1024) if (par)
        for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(colorings); ++ci) {
            auto colors = decode_coloring(static_cast<std::uint32_t>(ci), k);
            std::uint32_t red = 0, blue = 0;
            for (int i = 0; i < k; ++i) {
                if (colors[i] == bag_color::red) red |= 1u << i;
                if (colors[i] == bag_color::blue) blue |= 1u << i;
            }
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                if ((red >> i & 1u) && (local_adj[i] & red)) ok = false;
                if ((blue >> i & 1u) && (local_adj[i] & blue)) ok = false;
            }
            if (ok) current[ci].push_back({std::popcount(red), std::popcount(blue)});
        }

        const auto& kids = children_[node];
        data.steps.reserve(kids.size());
        for (int child_id : kids) {
            const auto& child = nodes_[child_id];
            std::vector<std::vector<step_link>> links(colorings);
            std::vector<std::vector<pareto_pair>> next(colorings);
#pragma omp parallel for schedule(dynamic, 1024) if (par)
            for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(colorings); ++ci) {
                const auto& prev = current[ci];
                if (prev.empty()) continue;
                auto colors = decode_coloring(static_cast<std::uint32_t>(ci), k);
                const std::uint32_t s = project(colors, child);
                int shared_red = 0, shared_blue = 0;
                for (auto pos : child.shared_position) {
                    shared_red += colors[pos] == bag_color::red;
                    shared_blue += colors[pos] == bag_color::blue;
                }
                struct tagged {
                    pareto_pair pair;
                    step_link link;
                };
                std::vector<tagged> merged;
                const std::uint32_t lo = child.summary.begin(s), hi = child.summary.end(s);
                merged.reserve(prev.size() * (hi - lo));
                for (std::uint32_t i = 0; i < prev.size(); ++i) {
                    for (std::uint32_t j = lo; j < hi; ++j) {
                        const auto& q = child.summary_pairs[j];
                        merged.push_back({{prev[i].alpha + q.alpha - shared_red, prev[i].beta + q.beta - shared_blue},
                                          {i, j - lo}});
                    }
                }
                prune_tagged(merged);
                auto& out = next[ci];
                auto& out_links = links[ci];
                out.reserve(merged.size());
                out_links.reserve(merged.size());
                for (const auto& t : merged) {
                    out.push_back(t.pair);
                    out_links.push_back(t.link);
                }
            }
            data.steps.push_back(csr<step_link>::pack(links));
            current.swap(next);
        }

        if (td_.parent[node] < 0) {
            for (std::uint32_t c = 0; c < colorings; ++c) {
                for (std::uint32_t i = 0; i < current[c].size(); ++i) root_front_.push_back({current[c][i], c, i});
            }
            prune_root();
            return;
        }

        // Summaries keyed by the coloring of the shared (trailing) vertices.
        const int own = k - data.shared;
        const std::uint32_t own_count = pow3(own);
        const std::uint32_t shared_count = pow3(data.shared);
        struct tagged {
            pareto_pair pair;
            summary_link link;
        };
        std::vector<std::vector<summary_link>> links(shared_count);
        std::vector<std::vector<pareto_pair>> pairs(shared_count);
#pragma omp parallel for schedule(dynamic, 64) if (par)
        for (std::int64_t si = 0; si < static_cast<std::int64_t>(shared_count); ++si) {
            std::vector<tagged> merged;
            for (std::uint32_t f = 0; f < own_count; ++f) {
                const std::uint32_t c = f + static_cast<std::uint32_t>(si) * own_count;
                for (std::uint32_t i = 0; i < current[c].size(); ++i) merged.push_back({current[c][i], {c, i}});
            }
            prune_tagged(merged);
            for (const auto& t : merged) {
                pairs[si].push_back(t.pair);
                links[si].push_back(t.link);
            }
        }
        data.summary = csr<summary_link>::pack(links);
        data.summary_pairs.clear();
        for (auto& p : pairs) data.summary_pairs.insert(data.summary_pairs.end(), p.begin(), p.end());
    }

    void prune_root() {
        std::stable_sort(root_front_.begin(), root_front_.end(), [](const root_entry& a, const root_entry& b) {
            return a.pair.alpha != b.pair.alpha ? a.pair.alpha > b.pair.alpha : a.pair.beta > b.pair.beta;
        });
        std::vector<root_entry> kept;
        int best_beta = -1;
        for (const auto& e : root_front_) {
            if (e.pair.beta > best_beta) {
                best_beta = e.pair.beta;
                kept.push_back(e);
            }
        }
        root_front_ = std::move(kept);
    }

    const crossing_graph& x_;
    const tree_decomposition& td_;
    execution mode_;
    std::vector<node_data> nodes_;
    std::vector<std::vector<int>> children_;
    std::vector<int> postorder_;
    std::vector<root_entry> root_front_;
};

}  // namespace

pareto_list pareto_front(std::vector<pareto_pair> pairs) {
    std::vector<plain> items;
    items.reserve(pairs.size());
    for (const auto& p : pairs) items.push_back({p});
    prune_tagged(items);
    pareto_list out;
    for (const auto& i : items) out.push_back(i.pair);
    return out;
}

pareto_list pareto_pairs(const crossing_graph& x, const tree_decomposition& td, execution mode) {
    if (x.size() == 0) return {{0, 0}};
    pareto_dp dp(x, td, mode);
    dp.run();
    pareto_list out;
    for (const auto& e : dp.root_front()) out.push_back(e.pair);
    return out;
}

independent_pair maximum_pair(const crossing_graph& x, const tree_decomposition& td, execution mode) {
    if (x.size() == 0) return {};
    pareto_dp dp(x, td, mode);
    dp.run();
    const auto& front = dp.root_front();
    std::size_t best = 0;
    for (std::size_t i = 1; i < front.size(); ++i) {
        const auto& p = front[i].pair;
        const auto& q = front[best].pair;
        const int pmin = std::min(p.alpha, p.beta), qmin = std::min(q.alpha, q.beta);
        const int pmax = std::max(p.alpha, p.beta), qmax = std::max(q.alpha, q.beta);
        if (pmin > qmin || (pmin == qmin && pmax > qmax)) best = i;
    }
    auto pair = dp.trace(front[best]);
    if (pair.first.size() > pair.second.size()) std::swap(pair.first, pair.second);
    return pair;
}

}  // namespace pstory
