#include "planar_story/ilp.hpp"

#include <charconv>
#include <cmath>
#include "json.hpp"
#include <sstream>

#include "planar_story/error.hpp"
#include "planar_story/greedy.hpp"

namespace pstory {

namespace {

std::string xv(int e, int t) { return "x_" + std::to_string(e) + "_" + std::to_string(t); }
std::string zv(int e, int t) { return "z_" + std::to_string(e) + "_" + std::to_string(t); }

const char* sense_text(ilp_sense s) {
    switch (s) {
        case ilp_sense::less_equal: return "<=";
        case ilp_sense::greater_equal: return ">=";
        case ilp_sense::equal: return "=";
    }
    return "=";
}

}  // namespace

std::map<int, int> ilp_model::group_counts() const {
    std::map<int, int> counts;
    for (int g = 2; g <= 8; ++g) counts[g] = 0;
    for (const auto& c : constraints) ++counts[c.group];
    return counts;
}

int default_tau(const crossing_graph& x, const ilp_options& options) {
    if (options.tau > 0) return options.tau;
    const int n = x.size();
    if (options.shrink_tau && n > 0) {
        const int lb = run_heuristic(x, parse_algorithm("ag-1c2a", 0)).trace.mu;
        return std::max(1, n - lb + 1);
    }
    return std::max(1, n);
}

ilp_model build_ilp(const crossing_graph& x, const ilp_options& options) {
    ilp_model m;
    const int n = x.size();
    const int tau = default_tau(x, options);
    m.vertices = n;
    m.tau = tau;
    for (int e = 0; e < n; ++e) {
        for (int t = 1; t <= tau; ++t) m.binaries.push_back(xv(e, t));
    }
    for (int e = 0; e < n; ++e) {
        for (int t = 1; t <= tau; ++t) m.binaries.push_back(zv(e, t));
    }

    auto add = [&](std::string name, int group, std::vector<ilp_term> terms, ilp_sense sense, int rhs) {
        m.constraints.push_back({std::move(name), group, std::move(terms), sense, rhs});
    };
    const auto edges = x.edges();
    for (int t = 1; t <= tau; ++t) {
        for (auto [e, f] : edges) {
            add("c2_" + std::to_string(e) + "_" + std::to_string(f) + "_" + std::to_string(t), 2,
                {{1, xv(e, t)}, {1, xv(f, t)}}, ilp_sense::less_equal, 1);
        }
    }
    for (int e = 0; e < n; ++e) {
        std::vector<ilp_term> terms;
        for (int t = 1; t <= tau; ++t) terms.push_back({1, xv(e, t)});
        add("c3_" + std::to_string(e), 3, std::move(terms), ilp_sense::greater_equal, 1);
    }
    for (int t = 1; t <= tau; ++t) {
        std::vector<ilp_term> terms;
        for (int e = 0; e < n; ++e) terms.push_back({1, xv(e, t)});
        terms.push_back({-1, "y_min"});
        add("c4_" + std::to_string(t), 4, std::move(terms), ilp_sense::greater_equal, 0);
    }
    for (int e = 0; e < n; ++e) {
        std::vector<ilp_term> terms;
        for (int t = 1; t <= tau; ++t) terms.push_back({1, zv(e, t)});
        add("c5_" + std::to_string(e), 5, std::move(terms), ilp_sense::equal, 1);
    }
    for (int e = 0; e < n; ++e) {
        for (int t = 2; t <= tau; ++t) {
            add("c6_" + std::to_string(e) + "_" + std::to_string(t), 6,
                {{1, zv(e, t)}, {1, xv(e, t - 1)}, {-1, xv(e, t)}}, ilp_sense::greater_equal, 0);
        }
    }
    for (int e = 0; e < n; ++e) {
        add("c7_" + std::to_string(e), 7, {{1, zv(e, 1)}, {-1, xv(e, 1)}}, ilp_sense::greater_equal, 0);
    }
    for (int t = 2; t <= tau; ++t) {
        std::vector<ilp_term> terms;
        for (int e = 0; e < n; ++e) terms.push_back({1, zv(e, t)});
        add("c8_" + std::to_string(t), 8, std::move(terms), ilp_sense::less_equal, 1);
    }
    return m;
}

std::string format_lp(const ilp_model& model) {
    std::ostringstream out;
    out << "\\ vertices " << model.vertices << " tau " << model.tau << "\n";
    out << "Maximize\n obj: y_min\nSubject To\n";
    for (const auto& c : model.constraints) {
        out << " " << c.name << ":";
        if (c.terms.empty()) out << " 0 y_min";
        for (std::size_t i = 0; i < c.terms.size(); ++i) {
            const auto& term = c.terms[i];
            const int a = term.coefficient;
            if (i == 0) {
                out << (a < 0 ? " -" : " ");
            } else {
                out << (a < 0 ? " - " : " + ");
            }
            if (std::abs(a) != 1) out << std::abs(a) << " ";
            out << term.variable;
        }
        out << " " << sense_text(c.sense) << " " << c.rhs << "\n";
    }
    out << "Bounds\n y_min >= 0\nBinaries\n";
    for (const auto& b : model.binaries) out << " " << b << "\n";
    out << "End\n";
    return out.str();
}

std::string format_ilp_json(const ilp_model& model) {
    nlohmann::ordered_json j;
    j["vertices"] = model.vertices;
    j["tau"] = model.tau;
    j["objective"] = {{"sense", "maximize"}, {"variable", "y_min"}};
    j["binaries"] = model.binaries;
    j["continuous"] = {"y_min"};
    auto& cs = j["constraints"] = nlohmann::ordered_json::array();
    for (const auto& c : model.constraints) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& t : c.terms) terms.push_back({t.coefficient, t.variable});
        cs.push_back({{"name", c.name}, {"group", c.group}, {"terms", terms}, {"sense", sense_text(c.sense)},
                      {"rhs", c.rhs}});
    }
    nlohmann::ordered_json counts;
    for (auto [g, k] : model.group_counts()) counts[std::to_string(g)] = k;
    j["group_counts"] = counts;
    return j.dump(1) + "\n";
}

std::map<std::string, double> parse_ilp_solution(std::string_view text) {
    std::map<std::string, double> values;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string name, value, extra;
        if (!(fields >> name)) continue;
        if (!(fields >> value) || (fields >> extra)) throw input_error("expected 'name value'", number);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc{} || ptr != value.data() + value.size() || !std::isfinite(v)) {
            throw input_error("bad value '" + value + "'", number, name);
        }
        if (!values.emplace(name, v).second) throw input_error("duplicate variable", number, name);
    }
    return values;
}

ilp_decoding decode_ilp_solution(const crossing_graph& x, const ilp_model& model,
                                 const std::map<std::string, double>& values) {
    ilp_decoding out;
    constexpr double tol = 1e-6;
    auto reject = [&](int group, std::string message) {
        out.ok = false;
        out.violated_group = group;
        out.message = std::move(message);
        return out;
    };
    if (model.vertices != x.size()) return reject(0, "model was built for a different graph");

    std::map<std::string, int> rounded;
    for (const auto& b : model.binaries) {
        auto it = values.find(b);
        if (it == values.end()) return reject(0, "missing value for " + b);
        const double r = std::round(it->second);
        if (std::abs(it->second - r) > tol || (r != 0.0 && r != 1.0)) return reject(0, b + " is not binary");
        rounded[b] = static_cast<int>(r);
    }
    auto y = values.find("y_min");
    out.objective = y == values.end() ? 0.0 : y->second;

    for (const auto& c : model.constraints) {
        double lhs = 0.0;
        for (const auto& t : c.terms) {
            lhs += t.coefficient * (t.variable == "y_min" ? out.objective : rounded[t.variable]);
        }
        const bool holds = c.sense == ilp_sense::less_equal      ? lhs <= c.rhs + tol
                           : c.sense == ilp_sense::greater_equal ? lhs >= c.rhs - tol
                                                                 : std::abs(lhs - c.rhs) <= tol;
        if (!holds) return reject(c.group, "constraint (" + std::to_string(c.group) + ") violated: " + c.name);
    }

    const int n = x.size();
    for (int e = 0; e < n; ++e) {
        if (rounded[xv(e, 1)]) out.story.initial.push_back(e);
    }
    for (int t = 2; t <= model.tau; ++t) {
        for (int e = 0; e < n; ++e) {
            if (rounded[zv(e, t)]) out.story.order.push_back(e);
        }
    }
    const auto report = validate(x, out.story);
    if (!report.ok()) return reject(0, "decoded story is invalid: " + report.summary());
    out.mu = simulate(x, out.story, false).mu;
    if (out.mu + tol < out.objective) return reject(0, "decoded story is worse than the objective");
    out.ok = true;
    return out;
}

}  // namespace pstory
