#include <atomic>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "planar_story/bench.hpp"
#include "planar_story/bounds.hpp"
#include "planar_story/error.hpp"
#include "planar_story/exact.hpp"
#include "planar_story/generators.hpp"
#include "planar_story/geometry.hpp"
#include "planar_story/greedy.hpp"
#include "planar_story/ilp.hpp"
#include "planar_story/plot.hpp"

using namespace pstory;
namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

enum exit_code : int { ok = 0, invalid = 1, usage = 2, parse = 3, failure = 4, budget = 5 };

// Raised for bad arguments detected after CLI11 parsing.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    const auto parent = fs::path(path).parent_path();
    if (!parent.empty()) fs::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

bool looks_like_json(const std::string& text) {
    const auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && text[p] == '{';
}

struct loaded_instance {
    crossing_graph x;
    bool geometric = false;
};

// Geometric JSON or crossing-graph edge list, chosen by content.
loaded_instance load_instance(const std::string& path) {
    const auto text = read_file(path);
    loaded_instance out;
    try {
        if (looks_like_json(text)) {
            out.x = build_crossing_graph(parse_geometric_graph(text));
            out.geometric = true;
        } else {
            out.x = parse_crossing_graph(text);
        }
    } catch (const input_error& e) {
        throw input_error(path + ": " + e.what());
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<nae_clause> parse_clauses(const std::string& text) {
    std::vector<nae_clause> out;
    for (const auto& c : split(text, ';')) {
        const auto lits = split(c, ',');
        if (lits.size() != 3) throw usage_error("each clause needs exactly three literals: '" + c + "'");
        nae_clause clause{};
        for (int i = 0; i < 3; ++i) {
            try {
                clause[i] = std::stoi(lits[i]);
            } catch (const std::exception&) {
                throw usage_error("bad literal '" + lits[i] + "'");
            }
        }
        out.push_back(clause);
    }
    if (out.empty()) throw usage_error("no clauses given");
    return out;
}

std::string frame_list(const std::vector<int>& sizes) {
    std::string s;
    for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? " " : "") + std::to_string(sizes[i]);
    return s;
}

std::string summary_text(const std::string& algorithm, const crossing_graph& x, const planar_story& story,
                         const story_trace& trace, const bounds& b, std::uint64_t seed) {
    const auto adjusted = report_with_free_edges(trace, x.free_edge_count());
    std::ostringstream out;
    out << "algorithm: " << algorithm << "\n";
    out << "seed: " << seed << "\n";
    out << "crossing edges: " << x.size() << "\n";
    out << "crossings: " << x.edge_count() << "\n";
    out << "crossing-free edges: " << x.free_edge_count() << "\n";
    out << "mu: " << trace.mu << "\n";
    out << "mu with crossing-free edges: " << adjusted.display_mu << "\n";
    out << "frames: " << trace.frame_sizes.size() << "\n";
    out << "frame sizes: " << frame_list(trace.frame_sizes) << "\n";
    out << "initial frame size: " << story.initial.size() << "\n";
    out << "bound half edges: " << b.half_edges << "\n";
    out << "bound pair: " << (b.pair_bound ? std::to_string(*b.pair_bound) : "unavailable") << "\n";
    return out.str();
}

void emit_story(const std::string& out_dir, const std::string& algorithm, const crossing_graph& x,
                const planar_story& story, std::uint64_t seed, int width_cap, const json& extra) {
    const auto trace = simulate(x, story, false);
    bound_options opts;
    opts.width_cap = width_cap;
    const auto b = upper_bounds(x, std::nullopt, opts);
    const auto summary = summary_text(algorithm, x, story, trace, b, seed);
    auto trace_doc = json::parse(trace_to_json(story, trace, x.free_edge_count()));
    trace_doc["algorithm"] = algorithm;
    trace_doc["seed"] = seed;
    if (!x.edge_labels().empty()) trace_doc["edge_labels"] = x.edge_labels();
    for (auto it = extra.begin(); it != extra.end(); ++it) trace_doc[it.key()] = it.value();
    if (out_dir.empty()) {
        std::cout << summary;
        return;
    }
    fs::create_directories(out_dir);
    write_file((fs::path(out_dir) / "story.json").string(), story_to_json(story, seed));
    write_file((fs::path(out_dir) / "trace.json").string(), trace_doc.dump(1) + "\n");
    write_file((fs::path(out_dir) / "summary.txt").string(), summary);
    std::cout << summary;
}

std::atomic<bool> interrupted{false};

extern "C" void on_interrupt(int) { interrupted.store(true); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar story solver toolkit"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string algo = "ag-1c2a", out, format, instance, story_path, solution_path;
    double budget_exact = 60.0, budget_heur = 10.0;
    int width_cap = default_width_cap, tau = 0, max_vertices = 22;
    bool shrink_tau = false;

    // generate
    auto* gen = app.add_subcommand("generate", "Generate an instance");
    std::string family;
    int n = 10, ell = 4, k = 1;
    double density = 1.2;
    std::optional<int> spine;
    std::string clauses, companion;
    gen->add_option("--family", family, "random-geometric, caterpillar, random-tree, series-parallel, planar, fig3-family, star-plus-graph, nae3sat")->required();
    gen->add_option("--n", n, "Vertex count");
    gen->add_option("--d", density, "Density (edges per vertex)");
    gen->add_option("--ell", ell, "Parameter of the fig3 family");
    gen->add_option("--k", k, "Star-plus parameter");
    gen->add_option("--companion", companion, "Companion crossing graph for star-plus-graph");
    gen->add_option("--spine", spine, "Forced caterpillar spine length");
    gen->add_option("--clauses", clauses, "NAE clauses, e.g. '1,2,-3;1,-2,3'");
    gen->add_option("--seed", seed);
    gen->add_option("--out", out, "Instance file (sidecar written to <out>.meta.json)");

    auto* cross = app.add_subcommand("crossings", "Build the crossing graph of a geometric graph");
    cross->add_option("instance", instance)->required();
    cross->add_option("--out", out);

    auto* solve = app.add_subcommand("solve", "Run a heuristic or the exact solver");
    solve->add_option("instance", instance)->required();
    solve->add_option("--algo", algo, "simple, ag-1a2a ... ag-1c2b, exact");
    solve->add_option("--seed", seed);
    solve->add_option("--budget-exact", budget_exact);
    solve->add_option("--budget-heur", budget_heur);
    solve->add_option("--width-cap", width_cap);
    solve->add_option("--out", out, "Output directory");

    auto* exact = app.add_subcommand("exact", "Exact solve, or decide a single target");
    std::optional<int> target;
    std::string forced;
    exact->add_option("instance", instance)->required();
    exact->add_option("--m", target, "Decide whether mu >= m");
    exact->add_option("--initial", forced, "Forced initial frame, comma separated");
    exact->add_option("--budget-exact", budget_exact);
    exact->add_option("--max-vertices", max_vertices);
    exact->add_option("--width-cap", width_cap);
    exact->add_option("--out", out, "Output directory");

    auto* ilp_export = app.add_subcommand("ilp-export", "Write the ILP model");
    ilp_export->add_option("instance", instance)->required();
    ilp_export->add_option("--tau", tau);
    ilp_export->add_flag("--shrink-tau", shrink_tau);
    ilp_export->add_option("--format", format, "lp or json")->check(CLI::IsMember({"lp", "json"}));
    ilp_export->add_option("--out", out);

    auto* ilp_decode = app.add_subcommand("ilp-decode", "Decode a solver solution into a story");
    ilp_decode->add_option("instance", instance)->required();
    ilp_decode->add_option("solution", solution_path)->required();
    ilp_decode->add_option("--tau", tau);
    ilp_decode->add_flag("--shrink-tau", shrink_tau);
    ilp_decode->add_option("--out", out, "Output directory");

    auto* val = app.add_subcommand("validate", "Check a story against an instance");
    val->add_option("instance", instance)->required();
    val->add_option("story", story_path)->required();

    auto* bench = app.add_subcommand("bench", "Run the benchmark harness");
    std::string families = "random-geometric", ns = "10,15,20", ds = "1.2,1.6";
    int count = 5;
    bool serial = false;
    bench->add_option("--family", families, "Comma separated families");
    bench->add_option("--n", ns, "Comma separated sizes");
    bench->add_option("--d", ds, "Comma separated densities");
    bench->add_option("--count", count, "Instances per (family, n, d)");
    bench->add_option("--seed", seed, "First seed");
    bench->add_option("--algo", algo, "Comma separated heuristics")->default_val("ag-1a2a,ag-1b2a,ag-1c2a");
    bench->add_option("--budget-exact", budget_exact);
    bench->add_option("--budget-heur", budget_heur);
    bench->add_option("--width-cap", width_cap);
    bench->add_option("--max-vertices", max_vertices);
    bench->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    bench->add_option("--out", out, "Output directory")->required();
    bench->add_flag("--serial", serial, "Run instances one at a time");

    auto* plot = app.add_subcommand("plot", "SVG of a trace JSON or a bench CSV");
    plot->add_option("input", instance)->required();
    plot->add_option("--format", format)->check(CLI::IsMember({"svg"}));
    plot->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (gen->parsed()) {
            std::optional<crossing_graph> h;
            if (!companion.empty()) h = parse_crossing_graph(read_file(companion));
            json meta{{"family", family}, {"seed", seed}};
            std::string text;
            try {
                if (family == "random-geometric") {
                    meta["n"] = n;
                    meta["d"] = density;
                    text = format_geometric_graph(gen_random_geometric(n, density, seed));
                } else if (family == "caterpillar") {
                    meta["n"] = n;
                    if (spine) meta["spine"] = *spine;
                    text = format_crossing_graph(gen_caterpillar(n, seed, spine));
                } else if (family == "random-tree") {
                    meta["n"] = n;
                    text = format_crossing_graph(gen_random_tree(n, seed));
                } else if (family == "series-parallel") {
                    meta["n"] = n;
                    meta["d"] = density;
                    text = format_crossing_graph(gen_series_parallel(n, density, seed));
                } else if (family == "planar") {
                    meta["n"] = n;
                    meta["d"] = density;
                    text = format_crossing_graph(gen_planar(n, density, seed));
                } else if (family == "fig3-family") {
                    const auto f = gen_fig3_family(ell);
                    meta["ell"] = ell;
                    meta["ground_truth"] = {{"mu", f.mu_truth},
                                            {"maximal_start_bound", f.maximal_start_bound},
                                            {"witness", json::parse(story_to_json(f.witness))}};
                    text = format_crossing_graph(f.x);
                } else if (family == "star-plus-graph") {
                    if (!h) throw usage_error("star-plus-graph needs --companion");
                    meta["k"] = k;
                    meta["h"] = companion;
                    const int alpha = h->size() <= 64 ? static_cast<int>(maximum_independent_set(*h).size()) : -1;
                    if (alpha >= 0) {
                        meta["ground_truth"] = {{"claim", "mu >= k + 1 iff h has an independent set of size k"},
                                                {"h_independence_number", alpha},
                                                {"mu_at_least_k_plus_1", alpha >= k}};
                    }
                    text = format_crossing_graph(gen_star_plus(*h, k));
                } else if (family == "nae3sat") {
                    const auto cl = parse_clauses(clauses);
                    meta["clauses"] = cl;
                    meta["ground_truth"] = {{"nae_satisfiable", nae_satisfiable(cl)},
                                            {"pair_size_threshold", 4 * static_cast<int>(cl.size())}};
                    text = format_crossing_graph(gen_nae3sat(cl));
                } else {
                    throw usage_error("unknown family '" + family + "'");
                }
            } catch (const input_error& e) {
                throw usage_error(e.what());
            }
            write_file(out, text);
            if (!out.empty() && out != "-") write_file(out + ".meta.json", meta.dump(1) + "\n");
            return ok;
        }

        if (cross->parsed()) {
            const auto g = parse_geometric_graph(read_file(instance));
            const auto x = build_crossing_graph(g);
            write_file(out, format_crossing_graph(x));
            std::cerr << "crossing edges: " << x.size() << ", crossings: " << x.edge_count()
                      << ", crossing-free edges: " << x.free_edge_count() << "\n";
            return ok;
        }

        if (solve->parsed()) {
            const auto inst = load_instance(instance);
            const auto& x = inst.x;
            if (algo == "exact") {
                exact_limits limits;
                limits.time_budget_seconds = budget_exact;
                limits.width_cap = width_cap;
                const auto r = exact_solve(x, limits);
                const char* status = r.status == exact_status::optimal ? "optimal"
                                     : r.status == exact_status::timeout ? "timeout"
                                                                         : "too_large";
                emit_story(out, "exact", x, r.witness, seed, width_cap,
                           {{"exact_status", status}, {"best_known", r.best_known}, {"upper_bound", r.upper_bound},
                            {"nodes", r.nodes}, {"seconds", r.seconds}});
                std::cout << "exact status: " << status << "\n";
                if (r.status == exact_status::timeout) return budget;
                if (r.status == exact_status::too_large) return failure;
                return ok;
            }
            greedy_config cfg;
            try {
                cfg = parse_algorithm(algo, seed);
            } catch (const input_error& e) {
                throw usage_error(e.what());
            }
            cfg.width_cap = width_cap;
            const auto r = run_heuristic(x, cfg);
            if (r.status == heuristic_status::unavailable) {
                std::cerr << "error: " << r.message << "\n";
                return failure;
            }
            emit_story(out, algo, x, r.story, seed, width_cap, {{"seconds", r.seconds}});
            if (r.seconds > budget_heur) {
                std::cerr << "error: heuristic took " << r.seconds << " s, over the budget of " << budget_heur << " s\n";
                return budget;
            }
            return ok;
        }

        if (exact->parsed()) {
            const auto inst = load_instance(instance);
            exact_limits limits;
            limits.time_budget_seconds = budget_exact;
            limits.max_vertices = max_vertices;
            limits.width_cap = width_cap;
            if (target || !forced.empty()) {
                std::optional<vertex_set> initial;
                if (!forced.empty()) {
                    vertex_set s;
                    for (const auto& item : split(forced, ',')) {
                        try {
                            s.push_back(std::stoi(item));
                        } catch (const std::exception&) {
                            throw usage_error("bad vertex id '" + item + "'");
                        }
                    }
                    std::sort(s.begin(), s.end());
                    initial = s;
                }
                if (!target) throw usage_error("--initial needs --m");
                const auto d = exact_decision(inst.x, *target, limits, initial);
                switch (d.status) {
                    case decision_status::feasible:
                        std::cout << "feasible: mu >= " << *target << "\n";
                        if (!out.empty()) emit_story(out, "exact-decision", inst.x, *d.witness, seed, width_cap, json::object());
                        return ok;
                    case decision_status::infeasible: std::cout << "infeasible: mu < " << *target << "\n"; return ok;
                    case decision_status::timeout: std::cout << "timeout\n"; return budget;
                    case decision_status::too_large: std::cout << "too large\n"; return failure;
                }
            }
            const auto r = exact_solve(inst.x, limits);
            const char* status = r.status == exact_status::optimal ? "optimal"
                                 : r.status == exact_status::timeout ? "timeout"
                                                                     : "too_large";
            emit_story(out, "exact", inst.x, r.witness, seed, width_cap,
                       {{"exact_status", status}, {"best_known", r.best_known}, {"upper_bound", r.upper_bound},
                        {"nodes", r.nodes}, {"seconds", r.seconds}});
            std::cout << "exact status: " << status << "\nupper bound: " << r.upper_bound << "\n";
            if (r.status == exact_status::timeout) return budget;
            if (r.status == exact_status::too_large) return failure;
            return ok;
        }

        if (ilp_export->parsed()) {
            const auto inst = load_instance(instance);
            ilp_options opts;
            opts.tau = tau;
            opts.shrink_tau = shrink_tau;
            const auto model = build_ilp(inst.x, opts);
            const bool as_json = format == "json" || (format.empty() && out.size() > 5 && out.ends_with(".json"));
            write_file(out, as_json ? format_ilp_json(model) : format_lp(model));
            return ok;
        }

        if (ilp_decode->parsed()) {
            const auto inst = load_instance(instance);
            ilp_options opts;
            opts.tau = tau;
            opts.shrink_tau = shrink_tau;
            const auto model = build_ilp(inst.x, opts);
            const auto d = decode_ilp_solution(inst.x, model, parse_ilp_solution(read_file(solution_path)));
            if (!d.ok) {
                std::cerr << "rejected: " << d.message << "\n";
                return invalid;
            }
            emit_story(out, "ilp", inst.x, d.story, seed, width_cap, {{"objective", d.objective}});
            return ok;
        }

        if (val->parsed()) {
            const auto inst = load_instance(instance);
            const auto s = story_from_json(read_file(story_path));
            const auto report = validate(inst.x, s);
            std::cout << report.summary() << (report.ok() ? "\n" : "");
            if (report.ok()) std::cout << "mu: " << simulate(inst.x, s, false).mu << "\n";
            return report.ok() ? ok : invalid;
        }

        if (bench->parsed()) {
            run_config config;
            config.algorithms = split(algo, ',');
            for (const auto& a : config.algorithms) {
                try {
                    (void)parse_algorithm(a);
                } catch (const input_error& e) {
                    throw usage_error(e.what());
                }
            }
            config.budget_exact = budget_exact;
            config.budget_heur = budget_heur;
            config.width_cap = width_cap;
            config.max_exact_vertices = max_vertices;
            config.parallel = !serial;
            config.stop = &interrupted;

            std::vector<bench_instance> instances;
            for (const auto& fam : split(families, ',')) {
                for (const auto& n_text : split(ns, ',')) {
                    for (const auto& d_text : split(ds, ',')) {
                        const int nn = std::stoi(n_text);
                        const double dd = std::stod(d_text);
                        for (int i = 0; i < count; ++i) {
                            bench_instance inst;
                            inst.family = fam;
                            inst.seed = seed + i;
                            char params[64];
                            std::snprintf(params, sizeof params, "n=%d d=%g", nn, dd);
                            inst.params = params;
                            char id[160];
                            std::snprintf(id, sizeof id, "%s-n%03d-d%.2f-s%llu", fam.c_str(), nn, dd,
                                          static_cast<unsigned long long>(inst.seed));
                            inst.id = id;
                            if (fam == "random-geometric") {
                                inst.x = build_crossing_graph(gen_random_geometric(nn, dd, inst.seed));
                            } else if (fam == "caterpillar") {
                                inst.params = "n=" + std::to_string(nn);
                                inst.x = gen_caterpillar(nn, inst.seed);
                            } else if (fam == "random-tree") {
                                inst.params = "n=" + std::to_string(nn);
                                inst.x = gen_random_tree(nn, inst.seed);
                            } else if (fam == "series-parallel") {
                                inst.x = gen_series_parallel(nn, dd, inst.seed);
                            } else if (fam == "planar") {
                                inst.x = gen_planar(nn, dd, inst.seed);
                            } else {
                                throw usage_error("bench does not generate family '" + fam + "'");
                            }
                            instances.push_back(std::move(inst));
                        }
                    }
                }
            }
            // Tree families ignore the density; drop the repeats.
            std::sort(instances.begin(), instances.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
            instances.erase(std::unique(instances.begin(), instances.end(),
                                        [](const auto& a, const auto& b) { return a.params == b.params && a.family == b.family && a.seed == b.seed; }),
                            instances.end());

            fs::create_directories(out);
            const auto partial_path = (fs::path(out) / "bench.partial.csv").string();
            std::ofstream partial(partial_path);
            partial << bench_csv_header() << std::flush;
            std::signal(SIGINT, on_interrupt);
            const auto rows = run_bench(instances, config, [&](const std::vector<bench_row>& done) {
                for (const auto& r : done) partial << bench_csv_line(r);
                partial << std::flush;
            });
            const auto summary = summarize(rows);
            write_file((fs::path(out) / "bench.csv").string(), bench_csv(rows));
            write_file((fs::path(out) / "summary.csv").string(), summary_csv(summary));
            write_file((fs::path(out) / "bench.json").string(), bench_json(rows, summary));
            std::cout << (format == "json" ? bench_json(rows, summary) : summary_csv(summary));
            if (interrupted.load()) {
                std::cerr << "interrupted: partial results written to " << out << "\n";
                return budget;
            }
            fs::remove(partial_path);
            return ok;
        }

        if (plot->parsed()) {
            const auto text = read_file(instance);
            std::string svg;
            if (looks_like_json(text)) {
                json doc;
                try {
                    doc = json::parse(text);
                } catch (const json::parse_error& e) {
                    throw input_error(std::string("malformed trace JSON: ") + e.what());
                }
                if (!doc.contains("frame_sizes") || !doc["frame_sizes"].is_array()) {
                    throw input_error("trace has no frame_sizes array", 0, "frame_sizes");
                }
                std::vector<int> sizes;
                for (const auto& v : doc["frame_sizes"]) {
                    if (!v.is_number_integer()) throw input_error("frame size is not an integer", 0, "frame_sizes");
                    sizes.push_back(v.get<int>());
                }
                std::string title = "frame sizes";
                if (doc.contains("algorithm") && doc["algorithm"].is_string()) title += " (" + doc["algorithm"].get<std::string>() + ")";
                svg = plot_frame_sizes(sizes, title);
            } else {
                const auto rows = parse_bench_csv(text);
                std::vector<std::pair<double, double>> points;
                std::string last;
                for (const auto& r : rows) {
                    if (r.instance_id == last || !r.gap) continue;
                    last = r.instance_id;
                    points.emplace_back(r.crossings, *r.gap);
                }
                svg = plot_gap_scatter(points, "optimality gap by crossing count");
            }
            write_file(out, svg);
            return ok;
        }
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const input_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse;
    } catch (const story_error& e) {
        std::cerr << "invalid story: " << e.what() << "\n";
        return invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failure;
    }
    return ok;
}
