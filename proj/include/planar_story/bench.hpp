#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planar_story/crossing_graph.hpp"
#include "planar_story/exact.hpp"

namespace pstory {

struct bench_instance {
    std::string id;
    std::string family;
    std::string params;
    std::uint64_t seed = 0;
    crossing_graph x;  // isolated vertices already stripped
};

struct run_config {
    std::vector<std::string> algorithms{"ag-1a2a", "ag-1b2a", "ag-1c2a"};
    double budget_exact = 60.0;
    double budget_heur = 10.0;
    int width_cap = default_width_cap;
    int max_exact_vertices = 22;
    bool parallel = true;
    const std::atomic<bool>* stop = nullptr;  // set from a signal handler to end early
};

// One row per (instance, algorithm). ratio = mu / exact mu when the exact
// solve finished; gap = (upper bound - best known) / upper bound.
struct bench_row {
    std::string instance_id;
    std::string family;
    std::string params;
    std::uint64_t seed = 0;
    int n_x = 0;
    int crossings = 0;
    int free_edges = 0;
    std::string algorithm;
    std::string status;  // ok, unavailable, over_budget
    std::optional<int> mu;
    double seconds = 0.0;
    std::string exact_status;  // optimal, timeout, too_large
    std::optional<int> exact_mu;
    int best_known = 0;
    int upper_bound = 0;
    std::optional<double> ratio;
    std::optional<double> gap;
};

// Completed rows are handed to `on_rows` as soon as an instance finishes.
// The result is sorted by instance id, then by algorithm position.
std::vector<bench_row> run_bench(const std::vector<bench_instance>& instances, const run_config& config,
                                 const std::function<void(const std::vector<bench_row>&)>& on_rows = {});

struct family_summary {
    std::string family;
    std::string algorithm;
    int instances = 0;
    int rated = 0;  // instances with an exact value
    double optimal_percent = 0.0;
    std::optional<double> mean_ratio, min_ratio, max_ratio, sd_ratio;  // population SD
    double mean_seconds = 0.0;
};

std::vector<family_summary> summarize(const std::vector<bench_row>& rows);

extern const std::vector<std::string> bench_csv_columns;
std::string bench_csv_header();
std::string bench_csv_line(const bench_row& row);
std::string bench_csv(const std::vector<bench_row>& rows);
std::vector<bench_row> parse_bench_csv(std::string_view text);
std::string summary_csv(const std::vector<family_summary>& summary);
std::string bench_json(const std::vector<bench_row>& rows, const std::vector<family_summary>& summary);

}  // namespace pstory
