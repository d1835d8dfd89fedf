#include "planar_story/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <unordered_set>

#include "planar_story/bounds.hpp"
#include "planar_story/error.hpp"
#include "planar_story/greedy.hpp"

namespace pstory {

namespace {

using mask = std::uint64_t;
using clock_type = std::chrono::steady_clock;

struct state_key {
    mask past;
    mask current;
    friend bool operator==(const state_key&, const state_key&) = default;
};

struct state_hash {
    std::size_t operator()(const state_key& k) const {
        std::uint64_t h = k.past * 0x9e3779b97f4a7c15ULL;
        h ^= (k.current + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2)) * 0xbf58476d1ce4e5b9ULL;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

// Failed states in two generations: when the young one fills half the
// budget it becomes the old one and the previous old one is dropped; hits in
// the old generation are promoted.
class failure_memo {
public:
    explicit failure_memo(std::size_t bytes) {
        constexpr std::size_t per_entry = sizeof(state_key) + 3 * sizeof(void*);
        capacity_ = std::max<std::size_t>(1024, bytes / per_entry / 2);
    }

    bool contains(const state_key& k) {
        if (young_.count(k)) return true;
        if (old_.count(k)) {
            insert(k);
            return true;
        }
        return false;
    }

    void insert(const state_key& k) {
        if (young_.size() >= capacity_) {
            old_ = std::move(young_);
            young_ = {};
        }
        young_.insert(k);
    }

private:
    std::unordered_set<state_key, state_hash> young_, old_;
    std::size_t capacity_;
};

struct timed_out {};

class story_search {
public:
    story_search(const crossing_graph& x, const exact_limits& limits, clock_type::time_point deadline)
        : n_(x.size()), nbr_(x.size(), 0), memo_bytes_(limits.memo_bytes), memo_(memo_bytes_), deadline_(deadline) {
        for (int v = 0; v < n_; ++v) {
            for (int w : x.neighbors(v)) nbr_[v] |= mask{1} << w;
        }
        all_ = n_ == 64 ? ~mask{0} : (mask{1} << n_) - 1;
    }

    std::uint64_t nodes() const { return nodes_; }

    // Throws timed_out when the deadline passes.
    std::optional<planar_story> decide(int m, const std::optional<vertex_set>& forced) {
        m_ = m;
        path_.clear();
        memo_ = failure_memo(memo_bytes_);
        if (forced) {
            mask start = 0;
            for (int v : *forced) start |= mask{1} << v;
            if (std::popcount(start) < m_) return std::nullopt;
            if (extend(0, start)) return story_from(start);
            return std::nullopt;
        }
        mask found = 0;
        if (starts(all_, 0, found)) return story_from(found);
        return std::nullopt;
    }

private:
    planar_story story_from(mask start) const {
        planar_story s;
        for (mask r = start; r; r &= r - 1) s.initial.push_back(std::countr_zero(r));
        s.order = path_;
        std::reverse(s.order.begin(), s.order.end());
        return s;
    }

    void tick() {
        if ((++nodes_ & 1023) == 0 && clock_type::now() > deadline_) throw timed_out{};
    }

    // Independent sets of size exactly m as start frames; lowest open vertex
    // taken first.
    bool starts(mask open, mask chosen, mask& found) {
        const int size = std::popcount(chosen);
        if (size == m_) {
            if (extend(0, chosen)) {
                found = chosen;
                return true;
            }
            return false;
        }
        if (size + std::popcount(open) < m_) return false;
        tick();
        const int v = std::countr_zero(open);
        const mask bit = mask{1} << v;
        if (starts(open & ~nbr_[v] & ~bit, chosen | bit, found)) return true;
        return starts(open & ~bit, chosen, found);
    }

    // On success path_ holds the insertions in reverse.
    bool extend(mask past, mask current) {
        const mask future = all_ & ~(past | current);
        if (future == 0) return true;
        const state_key key{past, current};
        if (memo_.contains(key)) return false;
        tick();

        // Candidates that keep the frame at m or above, fewest losses first.
        int count = 0;
        std::pair<int, int> cand[64];
        const int size = std::popcount(current);
        for (mask r = future; r; r &= r - 1) {
            const int v = std::countr_zero(r);
            const int loss = std::popcount(nbr_[v] & current);
            if (size - loss + 1 >= m_) cand[count++] = {loss, v};
        }
        std::sort(cand, cand + count);
        for (int i = 0; i < count; ++i) {
            const int v = cand[i].second;
            const mask hit = nbr_[v] & current;
            if (extend(past | hit, (current & ~hit) | (mask{1} << v))) {
                path_.push_back(v);
                return true;
            }
        }
        memo_.insert(key);
        return false;
    }

    int n_;
    std::vector<mask> nbr_;
    mask all_ = 0;
    int m_ = 0;
    std::size_t memo_bytes_;
    failure_memo memo_;
    clock_type::time_point deadline_;
    std::uint64_t nodes_ = 0;
    std::vector<int> path_;
};

clock_type::time_point deadline_after(double seconds) {
    return clock_type::now() + std::chrono::duration_cast<clock_type::duration>(std::chrono::duration<double>(seconds));
}

planar_story any_story(const crossing_graph& x) {
    if (x.empty()) return {};
    return simple_greedy(x, default_initial_frame(x, 0), 0);
}

// Story on x from a story on the non-isolated part; isolated vertices join
// the initial frame.
planar_story lift(const vertex_set& label, const planar_story& s, const vertex_set& isolated) {
    planar_story out;
    for (int v : s.initial) out.initial.push_back(label[v]);
    out.initial.insert(out.initial.end(), isolated.begin(), isolated.end());
    std::sort(out.initial.begin(), out.initial.end());
    for (int v : s.order) out.order.push_back(label[v]);
    return out;
}

}  // namespace

decision_result exact_decision(const crossing_graph& x, int m, const exact_limits& limits,
                               const std::optional<vertex_set>& forced_initial) {
    decision_result out;
    if (x.size() > limits.max_vertices || x.size() > 64) {
        out.status = decision_status::too_large;
        return out;
    }
    if (forced_initial) {
        for (int v : *forced_initial) {
            if (v < 0 || v >= x.size()) throw input_error("forced initial frame vertex out of range");
        }
        if (!is_independent(x, *forced_initial)) throw input_error("forced initial frame is not independent");
        if (forced_initial->empty() && !x.empty()) throw input_error("forced initial frame is empty");
    }
    if (m <= 0 && !forced_initial) {
        out.status = decision_status::feasible;
        out.witness = any_story(x);
        return out;
    }
    if (x.empty()) {
        out.status = m <= 0 ? decision_status::feasible : decision_status::infeasible;
        if (m <= 0) out.witness = planar_story{};
        return out;
    }

    story_search search(x, limits, deadline_after(limits.time_budget_seconds));
    try {
        out.witness = search.decide(std::max(m, 0), forced_initial);
        out.status = out.witness ? decision_status::feasible : decision_status::infeasible;
    } catch (const timed_out&) {
        out.status = decision_status::timeout;
    }
    out.nodes = search.nodes();
    return out;
}

exact_result exact_solve(const crossing_graph& x, const exact_limits& limits) {
    const auto start = clock_type::now();
    exact_result out;
    auto finish = [&] {
        out.seconds = std::chrono::duration<double>(clock_type::now() - start).count();
        return out;
    };

    if (x.empty()) return finish();

    vertex_set isolated, keep;
    for (int v = 0; v < x.size(); ++v) (x.degree(v) == 0 ? isolated : keep).push_back(v);
    const auto core = induced_subgraph(x, keep);
    const int shift = static_cast<int>(isolated.size());

    // Lower bound from the heuristics.
    planar_story best = any_story(core);
    int lower = core.empty() ? 0 : simulate(core, best, false).mu;
    for (const char* name : {"ag-1a2a", "ag-1b2a", "ag-1c2a", "ag-1c2b", "simple"}) {
        if (core.empty()) break;
        auto cfg = parse_algorithm(name, 0);
        cfg.width_cap = limits.width_cap;
        auto r = run_heuristic(core, cfg);
        if (r.status == heuristic_status::ok && r.trace.mu > lower) {
            lower = r.trace.mu;
            best = r.story;
        }
    }

    int upper = core.size() / 2;
    if (auto pb = pair_bound(core, limits.width_cap)) upper = std::min(upper, *pb);
    upper = std::max(upper, lower);

    out.witness = lift(keep, best, isolated);
    out.best_known = lower + shift;
    out.upper_bound = upper + shift;
    if (x.size() > limits.max_vertices || x.size() > 64) {
        out.status = exact_status::too_large;
        return finish();
    }

    story_search search(core, limits, deadline_after(limits.time_budget_seconds));
    try {
        for (int m = upper; m > lower; --m) {
            out.upper_bound = m + shift;
            if (auto s = search.decide(m, std::nullopt)) {
                lower = m;
                best = *s;
                break;
            }
        }
        out.status = exact_status::optimal;
        out.upper_bound = lower + shift;
    } catch (const timed_out&) {
        out.status = exact_status::timeout;
    }
    out.nodes = search.nodes();
    out.witness = lift(keep, best, isolated);
    out.best_known = lower + shift;
    if (out.status == exact_status::optimal) out.mu_star = out.best_known;
    return finish();
}

}  // namespace pstory
