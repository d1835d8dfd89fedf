#include "planar_story/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"
#include "planar_story/error.hpp"
#include "planar_story/greedy.hpp"

namespace pstory {

namespace {

const char* status_name(exact_status s) {
    switch (s) {
        case exact_status::optimal: return "optimal";
        case exact_status::timeout: return "timeout";
        case exact_status::too_large: return "too_large";
    }
    return "unknown";
}

std::vector<bench_row> run_instance(const bench_instance& inst, const run_config& config) {
    exact_limits limits;
    limits.max_vertices = config.max_exact_vertices;
    limits.time_budget_seconds = config.budget_exact;
    limits.width_cap = config.width_cap;
    const auto exact = exact_solve(inst.x, limits);

    std::vector<bench_row> rows;
    for (const auto& name : config.algorithms) {
        bench_row row;
        row.instance_id = inst.id;
        row.family = inst.family;
        row.params = inst.params;
        row.seed = inst.seed;
        row.n_x = inst.x.size();
        row.crossings = static_cast<int>(inst.x.edge_count());
        row.free_edges = inst.x.free_edge_count();
        row.algorithm = name;
        row.exact_status = status_name(exact.status);
        if (exact.status == exact_status::optimal) row.exact_mu = exact.mu_star;
        row.best_known = exact.best_known;
        row.upper_bound = exact.upper_bound;

        auto cfg = parse_algorithm(name, inst.seed);
        cfg.width_cap = config.width_cap;
        const auto r = run_heuristic(inst.x, cfg);
        row.seconds = r.seconds;
        if (r.status == heuristic_status::unavailable) {
            row.status = "unavailable";
        } else if (r.seconds > config.budget_heur) {
            row.status = "over_budget";
        } else {
            row.status = "ok";
            row.mu = r.trace.mu;
        }
        if (row.mu && row.exact_mu) {
            row.ratio = *row.exact_mu == 0 ? 1.0 : static_cast<double>(*row.mu) / *row.exact_mu;
        }
        if (row.upper_bound > 0) {
            row.gap = static_cast<double>(row.upper_bound - row.best_known) / row.upper_bound;
        } else {
            row.gap = 0.0;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line, int number) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted) throw input_error("unterminated quote", number);
    return fields;
}

template <class T>
std::string opt(const std::optional<T>& v) {
    if (!v) return "";
    if constexpr (std::is_same_v<T, double>) {
        return fmt_double(*v);
    } else {
        return std::to_string(*v);
    }
}

}  // namespace

std::vector<bench_row> run_bench(const std::vector<bench_instance>& instances, const run_config& config,
                                 const std::function<void(const std::vector<bench_row>&)>& on_rows) {
    if (config.algorithms.empty()) throw input_error("at least one algorithm is required");
    for (const auto& a : config.algorithms) (void)parse_algorithm(a);
    if (!(config.budget_exact > 0) || !(config.budget_heur > 0)) throw input_error("budgets must be positive");

    std::vector<std::vector<bench_row>> results(instances.size());
    const int count = static_cast<int>(instances.size());
#pragma omp parallel for schedule(dynamic, 1) if (config.parallel)
    for (int i = 0; i < count; ++i) {
        if (config.stop && config.stop->load()) continue;
        results[i] = run_instance(instances[i], config);
        if (on_rows) {
#pragma omp critical(bench_rows)
            on_rows(results[i]);
        }
    }

    std::vector<bench_row> rows;
    for (auto& r : results) {
        for (auto& row : r) rows.push_back(std::move(row));
    }
    std::map<std::string, int> position;
    for (std::size_t i = 0; i < config.algorithms.size(); ++i) position[config.algorithms[i]] = static_cast<int>(i);
    std::stable_sort(rows.begin(), rows.end(), [&](const bench_row& a, const bench_row& b) {
        if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
        return position[a.algorithm] < position[b.algorithm];
    });
    return rows;
}

std::vector<family_summary> summarize(const std::vector<bench_row>& rows) {
    std::map<std::pair<std::string, std::string>, std::vector<const bench_row*>> groups;
    std::vector<std::pair<std::string, std::string>> order;
    for (const auto& r : rows) {
        auto key = std::make_pair(r.family, r.algorithm);
        if (!groups.count(key)) order.push_back(key);
        groups[key].push_back(&r);
    }
    std::sort(order.begin(), order.end());
    std::vector<family_summary> out;
    for (const auto& key : order) {
        const auto& g = groups[key];
        family_summary s;
        s.family = key.first;
        s.algorithm = key.second;
        s.instances = static_cast<int>(g.size());
        std::vector<double> ratios;
        int optimal = 0;
        double seconds = 0.0;
        for (const auto* r : g) {
            seconds += r->seconds;
            if (!r->exact_mu) continue;
            ++s.rated;
            const double ratio = r->ratio.value_or(0.0);
            ratios.push_back(ratio);
            if (r->mu && *r->mu == *r->exact_mu) ++optimal;
        }
        s.mean_seconds = seconds / s.instances;
        if (s.rated > 0) {
            s.optimal_percent = 100.0 * optimal / s.rated;
            double sum = 0.0;
            for (double v : ratios) sum += v;
            const double mean = sum / ratios.size();
            double sq = 0.0;
            for (double v : ratios) sq += (v - mean) * (v - mean);
            s.mean_ratio = mean;
            s.min_ratio = *std::min_element(ratios.begin(), ratios.end());
            s.max_ratio = *std::max_element(ratios.begin(), ratios.end());
            s.sd_ratio = std::sqrt(sq / ratios.size());
        }
        out.push_back(std::move(s));
    }
    return out;
}

const std::vector<std::string> bench_csv_columns = {
    "instance_id", "family",   "params",     "seed",         "n_x",      "crossings",   "free_edges",
    "algorithm",   "status",   "mu",         "display_mu",   "seconds",  "exact_status", "exact_mu",
    "best_known",  "upper_bound", "ratio",   "gap"};

std::string bench_csv_header() {
    std::string out;
    for (std::size_t i = 0; i < bench_csv_columns.size(); ++i) out += (i ? "," : "") + bench_csv_columns[i];
    return out + "\n";
}

std::string bench_csv_line(const bench_row& r) {
    std::optional<int> display;
    if (r.mu) display = *r.mu + r.free_edges;
    std::vector<std::string> f{csv_field(r.instance_id), csv_field(r.family), csv_field(r.params),
                               std::to_string(r.seed), std::to_string(r.n_x), std::to_string(r.crossings),
                               std::to_string(r.free_edges), csv_field(r.algorithm), r.status, opt(r.mu),
                               opt(display), fmt_double(r.seconds), r.exact_status, opt(r.exact_mu),
                               std::to_string(r.best_known), std::to_string(r.upper_bound), opt(r.ratio), opt(r.gap)};
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + f[i];
    return out + "\n";
}

std::string bench_csv(const std::vector<bench_row>& rows) {
    std::string out = bench_csv_header();
    for (const auto& r : rows) out += bench_csv_line(r);
    return out;
}

std::vector<bench_row> parse_bench_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    std::vector<bench_row> rows;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) continue;
        auto f = split_csv_line(line, number);
        if (number == 1) {
            if (f != bench_csv_columns) throw input_error("unexpected bench CSV header", number);
            continue;
        }
        if (f.size() != bench_csv_columns.size()) throw input_error("wrong number of columns", number);
        auto int_of = [&](std::size_t i) -> int {
            try {
                std::size_t used = 0;
                const int v = std::stoi(f[i], &used);
                if (used != f[i].size()) throw std::invalid_argument("trailing");
                return v;
            } catch (const std::exception&) {
                throw input_error("bad integer '" + f[i] + "'", number, bench_csv_columns[i]);
            }
        };
        auto double_of = [&](std::size_t i) -> double {
            try {
                std::size_t used = 0;
                const double v = std::stod(f[i], &used);
                if (used != f[i].size()) throw std::invalid_argument("trailing");
                return v;
            } catch (const std::exception&) {
                throw input_error("bad number '" + f[i] + "'", number, bench_csv_columns[i]);
            }
        };
        bench_row r;
        r.instance_id = f[0];
        r.family = f[1];
        r.params = f[2];
        try {
            r.seed = std::stoull(f[3]);
        } catch (const std::exception&) {
            throw input_error("bad seed '" + f[3] + "'", number, "seed");
        }
        r.n_x = int_of(4);
        r.crossings = int_of(5);
        r.free_edges = int_of(6);
        r.algorithm = f[7];
        r.status = f[8];
        if (!f[9].empty()) r.mu = int_of(9);
        r.seconds = double_of(11);
        r.exact_status = f[12];
        if (!f[13].empty()) r.exact_mu = int_of(13);
        r.best_known = int_of(14);
        r.upper_bound = int_of(15);
        if (!f[16].empty()) r.ratio = double_of(16);
        if (!f[17].empty()) r.gap = double_of(17);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string summary_csv(const std::vector<family_summary>& summary) {
    std::string out =
        "family,algorithm,instances,rated,optimal_percent,mean_ratio,min_ratio,max_ratio,sd_ratio,mean_seconds\n";
    for (const auto& s : summary) {
        out += csv_field(s.family) + "," + csv_field(s.algorithm) + "," + std::to_string(s.instances) + "," +
               std::to_string(s.rated) + "," + fmt_double(s.optimal_percent) + "," + opt(s.mean_ratio) + "," +
               opt(s.min_ratio) + "," + opt(s.max_ratio) + "," + opt(s.sd_ratio) + "," + fmt_double(s.mean_seconds) +
               "\n";
    }
    return out;
}

std::string bench_json(const std::vector<bench_row>& rows, const std::vector<family_summary>& summary) {
    using json = nlohmann::ordered_json;
    auto opt_json = [](const auto& v) { return v ? json(*v) : json(nullptr); };
    json j;
    j["columns"] = bench_csv_columns;
    auto& jr = j["rows"] = json::array();
    for (const auto& r : rows) {
        jr.push_back({{"instance_id", r.instance_id}, {"family", r.family}, {"params", r.params}, {"seed", r.seed},
                      {"n_x", r.n_x}, {"crossings", r.crossings}, {"free_edges", r.free_edges},
                      {"algorithm", r.algorithm}, {"status", r.status}, {"mu", opt_json(r.mu)},
                      {"display_mu", r.mu ? json(*r.mu + r.free_edges) : json(nullptr)}, {"seconds", r.seconds},
                      {"exact_status", r.exact_status}, {"exact_mu", opt_json(r.exact_mu)},
                      {"best_known", r.best_known}, {"upper_bound", r.upper_bound}, {"ratio", opt_json(r.ratio)},
                      {"gap", opt_json(r.gap)}});
    }
    auto& js = j["summary"] = json::array();
    for (const auto& s : summary) {
        js.push_back({{"family", s.family}, {"algorithm", s.algorithm}, {"instances", s.instances},
                      {"rated", s.rated}, {"optimal_percent", s.optimal_percent}, {"mean_ratio", opt_json(s.mean_ratio)},
                      {"min_ratio", opt_json(s.min_ratio)}, {"max_ratio", opt_json(s.max_ratio)},
                      {"sd_ratio", opt_json(s.sd_ratio)}, {"mean_seconds", s.mean_seconds}});
    }
    return j.dump(1) + "\n";
}

}  // namespace pstory
