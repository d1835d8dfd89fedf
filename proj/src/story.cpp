#include "planar_story/story.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "planar_story/error.hpp"

namespace pstory {

using json = nlohmann::json;

story_trace simulate(const crossing_graph& x, const planar_story& s, bool keep_frames) {
    const int n = x.size();
    // 0 = future, 1 = current, 2 = past
    std::vector<char> state(n, 0);
    for (int v : s.initial) {
        if (v < 0 || v >= n) throw story_error("initial frame holds unknown vertex " + std::to_string(v));
        if (state[v]) throw story_error("initial frame repeats vertex " + std::to_string(v));
        state[v] = 1;
    }
    for (int v : s.initial) {
        for (int w : x.neighbors(v)) {
            if (state[w] == 1) throw story_error("initial frame is not independent");
        }
    }
    if (static_cast<int>(s.initial.size() + s.order.size()) != n) {
        throw story_error("insertion order is not a permutation of the non-initial vertices");
    }

    story_trace t;
    t.removed_at.assign(n, never_removed);
    int size = static_cast<int>(s.initial.size());
    vertex_set frame;
    if (keep_frames) {
        frame = s.initial;
        std::sort(frame.begin(), frame.end());
        t.frames.push_back(frame);
    }
    t.frame_sizes.push_back(size);

    for (std::size_t i = 0; i < s.order.size(); ++i) {
        const int v = s.order[i];
        if (v < 0 || v >= n || state[v] != 0) {
            throw story_error("insertion order is not a permutation of the non-initial vertices");
        }
        const int frame_index = static_cast<int>(i) + 1;
        for (int w : x.neighbors(v)) {
            if (state[w] == 1) {
                state[w] = 2;
                t.removed_at[w] = frame_index;
                --size;
            }
        }
        state[v] = 1;
        ++size;
        t.frame_sizes.push_back(size);
        if (keep_frames) {
            vertex_set next;
            next.reserve(frame.size() + 1);
            for (int w : frame) {
                if (state[w] == 1) next.push_back(w);
            }
            next.insert(std::upper_bound(next.begin(), next.end(), v), v);
            frame = std::move(next);
            t.frames.push_back(frame);
        }
    }
    t.mu = *std::min_element(t.frame_sizes.begin(), t.frame_sizes.end());
    return t;
}

bool validation_report::has(violation_kind k) const {
    return std::any_of(violations.begin(), violations.end(), [k](const violation& v) { return v.kind == k; });
}

std::string validation_report::summary() const {
    if (ok()) return "valid planar story";
    std::ostringstream out;
    for (const auto& v : violations) out << v.message << '\n';
    return out.str();
}

validation_report validate(const crossing_graph& x, const planar_story& s) {
    validation_report report;
    const int n = x.size();
    auto list = [](const std::vector<int>& vs) {
        std::string out;
        for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + std::to_string(vs[i]);
        return out;
    };

    std::vector<int> seen(n, 0);
    std::vector<int> unknown, repeated;
    auto count = [&](int v) {
        if (v < 0 || v >= n) {
            unknown.push_back(v);
        } else if (seen[v]++ == 1) {
            repeated.push_back(v);
        }
    };
    for (int v : s.initial) count(v);
    for (int v : s.order) count(v);
    if (!unknown.empty()) {
        report.violations.push_back({violation_kind::unknown_vertex, unknown, "unknown vertices: " + list(unknown)});
    }
    if (!repeated.empty()) {
        report.violations.push_back(
            {violation_kind::repeated_vertex, repeated, "vertices listed more than once: " + list(repeated)});
    }

    vertex_set initial;
    for (int v : s.initial) {
        if (v >= 0 && v < n) initial.push_back(v);
    }
    std::sort(initial.begin(), initial.end());
    initial.erase(std::unique(initial.begin(), initial.end()), initial.end());
    if (!is_independent(x, initial)) {
        std::vector<int> bad;
        for (int v : initial) {
            for (int w : x.neighbors(v)) {
                if (v < w && std::binary_search(initial.begin(), initial.end(), w)) {
                    bad.push_back(v);
                    bad.push_back(w);
                }
            }
        }
        report.violations.push_back({violation_kind::initial_not_independent, bad,
                                     "initial frame is not independent; conflicting vertices: " + list(bad)});
    }
    if (n > 0 && s.initial.empty()) {
        report.violations.push_back({violation_kind::empty_initial, {}, "initial frame is empty"});
    }
    std::vector<int> missing;
    for (int v = 0; v < n; ++v) {
        if (seen[v] == 0) missing.push_back(v);
    }
    if (!missing.empty()) {
        report.violations.push_back(
            {violation_kind::coverage_gap, missing, "vertices never shown in any frame: " + list(missing)});
    }
    return report;
}

adjusted_sizes report_with_free_edges(const story_trace& trace, int free_edge_count) {
    adjusted_sizes out;
    out.core_mu = trace.mu;
    out.display_mu = trace.mu + free_edge_count;
    out.display_sizes.reserve(trace.frame_sizes.size());
    for (int s : trace.frame_sizes) out.display_sizes.push_back(s + free_edge_count);
    return out;
}

std::string story_to_json(const planar_story& s, std::optional<std::uint64_t> seed) {
    json doc;
    doc["initial"] = s.initial;
    doc["order"] = s.order;
    if (seed) doc["seed"] = *seed;
    return doc.dump() + "\n";
}

planar_story story_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("malformed story JSON: ") + e.what());
    }
    auto ids = [&doc](const char* key) {
        if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array()) {
            throw input_error("missing integer array", 0, key);
        }
        std::vector<int> out;
        for (std::size_t i = 0; i < doc[key].size(); ++i) {
            const auto& v = doc[key][i];
            if (!v.is_number_integer()) {
                throw input_error("expected integer", 0, std::string(key) + "[" + std::to_string(i) + "]");
            }
            out.push_back(v.get<int>());
        }
        return out;
    };
    return {ids("initial"), ids("order")};
}

std::string trace_to_json(const planar_story& s, const story_trace& t, int free_edge_count) {
    json doc;
    doc["initial"] = s.initial;
    doc["order"] = s.order;
    doc["frame_sizes"] = t.frame_sizes;
    doc["mu"] = t.mu;
    doc["free_edge_count"] = free_edge_count;
    const auto adjusted = report_with_free_edges(t, free_edge_count);
    doc["display_frame_sizes"] = adjusted.display_sizes;
    doc["display_mu"] = adjusted.display_mu;
    return doc.dump() + "\n";
}

}  // namespace pstory
