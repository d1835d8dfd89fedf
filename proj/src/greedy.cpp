#include "planar_story/greedy.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "planar_story/error.hpp"
#include "planar_story/rng.hpp"

namespace pstory {

namespace {

// Vertices bucketed by an integer key with O(1) insert/erase/update and a
// seeded uniform draw from the minimum bucket.
class bucket_queue {
public:
    explicit bucket_queue(int n) : key_(n, -1), pos_(n, -1) {}

    bool contains(int v) const { return key_[v] >= 0; }
    bool empty() const { return size_ == 0; }
    int key(int v) const { return key_[v]; }

    void insert(int v, int key) {
        if (key >= static_cast<int>(buckets_.size())) buckets_.resize(key + 1);
        key_[v] = key;
        pos_[v] = static_cast<int>(buckets_[key].size());
        buckets_[key].push_back(v);
        ++size_;
        if (key < min_) min_ = key;
    }

    void erase(int v) {
        auto& b = buckets_[key_[v]];
        const int last = b.back();
        b[pos_[v]] = last;
        pos_[last] = pos_[v];
        b.pop_back();
        key_[v] = -1;
        pos_[v] = -1;
        --size_;
    }

    void update(int v, int key) {
        erase(v);
        insert(v, key);
    }

    const std::vector<int>& min_bucket() {
        while (buckets_[min_].empty()) ++min_;
        return buckets_[min_];
    }

private:
    std::vector<std::vector<int>> buckets_;
    std::vector<int> key_, pos_;
    int size_ = 0;
    int min_ = 0;
};

// Candidate pool for growing one independent set: vertices keyed by their
// degree inside the pool.
class candidate_pool {
public:
    candidate_pool(const crossing_graph& x, const std::vector<char>& member) : x_(x), in_(member), queue_(x.size()) {
        for (int v = 0; v < x.size(); ++v) {
            if (!in_[v]) continue;
            int d = 0;
            for (int w : x.neighbors(v)) d += in_[w];
            queue_.insert(v, d);
        }
    }

    bool empty() const { return queue_.empty(); }
    bool contains(int v) const { return in_[v]; }

    int pick(rng& random) {
        const auto& bucket = queue_.min_bucket();
        return bucket[random.below(bucket.size())];
    }

    void remove(int v) {
        if (!in_[v]) return;
        in_[v] = 0;
        queue_.erase(v);
        for (int w : x_.neighbors(v)) {
            if (in_[w]) queue_.update(w, queue_.key(w) - 1);
        }
    }

    // v joins the set: it and its neighbors leave the pool.
    void take(int v) {
        remove(v);
        for (int w : x_.neighbors(v)) remove(w);
    }

private:
    const crossing_graph& x_;
    std::vector<char> in_;
    bucket_queue queue_;
};

vertex_set sorted(vertex_set s) {
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

greedy_config parse_algorithm(std::string_view name, std::uint64_t seed) {
    greedy_config cfg;
    cfg.seed = seed;
    if (name == "simple") {
        cfg.phase1 = phase1_variant::simple;
        return cfg;
    }
    if (name.size() == 7 && name.substr(0, 4) == "ag-1" && name[5] == '2') {
        switch (name[4]) {
            case 'a': cfg.phase1 = phase1_variant::a; break;
            case 'b': cfg.phase1 = phase1_variant::b; break;
            case 'c': cfg.phase1 = phase1_variant::c; break;
            default: throw input_error("unknown algorithm '" + std::string(name) + "'");
        }
        switch (name[6]) {
            case 'a': cfg.phase2 = phase2_variant::a; break;
            case 'b': cfg.phase2 = phase2_variant::b; break;
            default: throw input_error("unknown algorithm '" + std::string(name) + "'");
        }
        return cfg;
    }
    throw input_error("unknown algorithm '" + std::string(name) + "'");
}

std::string algorithm_name(const greedy_config& cfg) {
    const char p2 = cfg.phase2 == phase2_variant::a ? 'a' : 'b';
    switch (cfg.phase1) {
        case phase1_variant::a: return std::string("ag-1a2") + p2;
        case phase1_variant::b: return std::string("ag-1b2") + p2;
        case phase1_variant::c: return std::string("ag-1c2") + p2;
        case phase1_variant::given_pair: return std::string("ag-given2") + p2;
        case phase1_variant::given_initial: return "simple-given";
        case phase1_variant::simple: return "simple";
    }
    return "unknown";
}

namespace {

// The first loop of variant b, shared with the default initial frame.
vertex_set grow_first(const crossing_graph& x, rng& random, bool to_maximal) {
    const int n = x.size();
    candidate_pool pool(x, std::vector<char>(n, 1));
    vertex_set first;
    const int bound = n / 2 - 1;
    while (!pool.empty() && (to_maximal || static_cast<int>(first.size()) <= bound)) {
        const int v = pool.pick(random);
        first.push_back(v);
        pool.take(v);
    }
    return first;
}

}  // namespace

independent_pair phase1_variant_b(const crossing_graph& x, std::uint64_t seed) {
    rng random(seed);
    const int n = x.size();
    vertex_set first = grow_first(x, random, false);

    std::vector<char> open(n, 1);
    for (int v : first) open[v] = 0;
    candidate_pool pool(x, open);
    vertex_set last;
    while (!pool.empty()) {
        const int v = pool.pick(random);
        last.push_back(v);
        pool.take(v);
    }
    return {sorted(std::move(first)), sorted(std::move(last))};
}

independent_pair phase1_variant_c(const crossing_graph& x, std::uint64_t seed) {
    rng random(seed);
    const int n = x.size();
    candidate_pool pools[2] = {candidate_pool(x, std::vector<char>(n, 1)), candidate_pool(x, std::vector<char>(n, 1))};
    vertex_set sets[2];
    int side = 0;
    while (!pools[0].empty() || !pools[1].empty()) {
        if (!pools[side].empty()) {
            const int v = pools[side].pick(random);
            sets[side].push_back(v);
            pools[side].take(v);
            pools[1 - side].remove(v);
        }
        side = 1 - side;
    }
    if (sets[0].size() > sets[1].size()) std::swap(sets[0], sets[1]);
    return {sorted(std::move(sets[0])), sorted(std::move(sets[1]))};
}

vertex_set default_initial_frame(const crossing_graph& x, std::uint64_t seed) {
    rng random(seed);
    const int n = x.size();
    vertex_set first = grow_first(x, random, false);
    std::vector<char> open(n, 1);
    for (int v : first) {
        open[v] = 0;
        for (int w : x.neighbors(v)) open[w] = 0;
    }
    candidate_pool pool(x, open);
    while (!pool.empty()) {
        const int v = pool.pick(random);
        first.push_back(v);
        pool.take(v);
    }
    return sorted(std::move(first));
}

planar_story advanced_greedy(const crossing_graph& x, const vertex_set& initial, const vertex_set& final_target,
                             phase2_variant phase2, std::uint64_t seed, std::span<const int> tie_rank) {
    enum : char { future, current, past };
    const int n = x.size();
    rng random(seed);
    std::vector<char> status(n, future);
    std::vector<char> in_final(n, 0);
    for (int v : initial) status[v] = current;
    for (int v : final_target) {
        if (status[v] == current) throw input_error("initial and final frames are not disjoint");
        in_final[v] = 1;
    }
    if (!is_independent(x, initial) || !is_independent(x, final_target)) {
        throw input_error("initial and final frames must be independent sets");
    }

    std::vector<int> current_degree(n, 0), future_degree(n, 0);
    int future_count = 0;
    for (int v = 0; v < n; ++v) {
        for (int w : x.neighbors(v)) {
            if (status[w] == current) ++current_degree[v];
            if (status[w] == future) ++future_degree[v];
        }
        future_count += status[v] == future;
    }

    bucket_queue queue(n);
    auto admissible = [&](int v) { return status[v] == future && (!in_final[v] || future_degree[v] == 0); };
    for (int v = 0; v < n; ++v) {
        if (admissible(v)) queue.insert(v, current_degree[v]);
    }

    planar_story story{sorted(initial), {}};
    story.order.reserve(future_count);
    std::vector<int> stamp(n, -1);
    std::vector<int> best, ranked;
    int round = 0;

    while (future_count > 0) {
        if (queue.empty()) throw std::logic_error("advanced greedy: no admissible vertex left");
        const std::vector<int>* tie_set = &queue.min_bucket();
        if (!tie_rank.empty()) {
            int low = tie_rank[tie_set->front()];
            for (int e : *tie_set) low = std::min(low, tie_rank[e]);
            ranked.clear();
            for (int e : *tie_set) {
                if (tie_rank[e] == low) ranked.push_back(e);
            }
            tie_set = &ranked;
        }
        const auto& ties = *tie_set;
        int v;
        if (phase2 == phase2_variant::a || ties.size() == 1) {
            v = ties[random.below(ties.size())];
        } else {
            // Score: distinct future vertices crossing some current neighbor.
            best.clear();
            int best_score = -1;
            for (int e : ties) {
                ++round;
                stamp[e] = round;
                int score = 0;
                for (int c : x.neighbors(e)) {
                    if (status[c] != current) continue;
                    for (int f : x.neighbors(c)) {
                        if (status[f] == future && stamp[f] != round) {
                            stamp[f] = round;
                            ++score;
                        }
                    }
                }
                if (score > best_score) {
                    best_score = score;
                    best.assign(1, e);
                } else if (score == best_score) {
                    best.push_back(e);
                }
            }
            v = best[random.below(best.size())];
        }

        queue.erase(v);
        status[v] = current;
        --future_count;
        story.order.push_back(v);
        for (int w : x.neighbors(v)) {
            --future_degree[w];
            if (status[w] == future) {
                ++current_degree[w];
                if (queue.contains(w)) {
                    queue.update(w, current_degree[w]);
                } else if (admissible(w)) {
                    queue.insert(w, current_degree[w]);
                }
            } else if (status[w] == current) {
                status[w] = past;
                for (int u : x.neighbors(w)) {
                    if (status[u] != future) continue;
                    --current_degree[u];
                    if (queue.contains(u)) queue.update(u, current_degree[u]);
                }
            }
        }
    }

    for (int v : final_target) {
        if (status[v] != current) throw std::logic_error("advanced greedy: final-frame vertex was removed");
    }
    return story;
}

planar_story simple_greedy(const crossing_graph& x, const vertex_set& initial, std::uint64_t seed) {
    return advanced_greedy(x, initial, {}, phase2_variant::a, seed);
}

heuristic_result run_heuristic(const crossing_graph& x, const greedy_config& cfg) {
    const auto start = std::chrono::steady_clock::now();
    heuristic_result out;
    // Distinct streams for the two phases.
    const std::uint64_t phase2_seed = cfg.seed ^ 0x9e3779b97f4a7c15ULL;
    std::vector<int> tie_rank;

    switch (cfg.phase1) {
        case phase1_variant::a:
            if (x.max_degree() <= 2) {
                auto d2 = degree2_maximum_pair(x);
                out.pair = std::move(d2.pair);
                tie_rank = std::move(d2.tie_rank);
            } else {
                auto dec = min_fill_in_decomposition(x, cfg.width_cap, cfg.seed);
                if (dec.cap_exceeded()) {
                    out.status = heuristic_status::unavailable;
                    out.message = "tree decomposition width " + std::to_string(dec.width) + " exceeds cap " +
                                  std::to_string(cfg.width_cap);
                    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                    return out;
                }
                out.pair = maximum_pair(x, *dec.td);
            }
            break;
        case phase1_variant::b: out.pair = phase1_variant_b(x, cfg.seed); break;
        case phase1_variant::c: out.pair = phase1_variant_c(x, cfg.seed); break;
        case phase1_variant::given_pair:
            if (!cfg.pair_override) throw input_error("given-pair variant needs a pair");
            out.pair = *cfg.pair_override;
            break;
        case phase1_variant::given_initial:
            if (!cfg.initial_override) throw input_error("given-initial variant needs an initial frame");
            out.pair.first = sorted(*cfg.initial_override);
            break;
        case phase1_variant::simple: out.pair.first = default_initial_frame(x, cfg.seed); break;
    }

    if (cfg.phase1 != phase1_variant::given_pair && cfg.phase1 != phase1_variant::given_initial) {
        // Isolated vertices are never crossed, so they belong in every frame.
        for (int v = 0; v < x.size(); ++v) {
            if (x.degree(v) != 0 || std::binary_search(out.pair.first.begin(), out.pair.first.end(), v)) continue;
            std::erase(out.pair.second, v);
            out.pair.first.insert(std::upper_bound(out.pair.first.begin(), out.pair.first.end(), v), v);
        }
    }
    out.story = advanced_greedy(x, out.pair.first, out.pair.second, cfg.phase2, phase2_seed, tie_rank);
    out.trace = simulate(x, out.story, false);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace pstory
