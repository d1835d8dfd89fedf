#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planar_story/crossing_graph.hpp"
#include "planar_story/story.hpp"

namespace pstory {

struct ilp_term {
    int coefficient;
    std::string variable;
};

enum class ilp_sense { less_equal, greater_equal, equal };

struct ilp_constraint {
    std::string name;  // "c<group>_..."
    int group;         // 2..8
    std::vector<ilp_term> terms;
    ilp_sense sense;
    int rhs;
};

// maximize y_min over binaries x_e_t (e in frame t) and z_e_t (e enters at
// frame t), e a 0-based crossing-graph vertex and t = 1..tau.
struct ilp_model {
    int vertices = 0;
    int tau = 1;
    std::vector<std::string> binaries;
    std::vector<ilp_constraint> constraints;

    std::map<int, int> group_counts() const;
};

struct ilp_options {
    int tau = 0;              // 0: the number of vertices
    bool shrink_tau = false;  // tau = n - lb + 1 with lb the AG-1c2a value
};

ilp_model build_ilp(const crossing_graph& x, const ilp_options& options = {});
int default_tau(const crossing_graph& x, const ilp_options& options);

std::string format_lp(const ilp_model& model);
std::string format_ilp_json(const ilp_model& model);

// "name value" per line; '#' comments and blank lines skipped.
std::map<std::string, double> parse_ilp_solution(std::string_view text);

struct ilp_decoding {
    bool ok = false;
    int violated_group = 0;  // constraint group cited on rejection, 0 for other faults
    std::string message;
    planar_story story;
    int mu = 0;              // simulated minimum frame size
    double objective = 0.0;  // y_min from the solution
};

// Initial frame {e : x_e_1 = 1}; insertion order from z_e_t = 1, t >= 2, in
// t order.
ilp_decoding decode_ilp_solution(const crossing_graph& x, const ilp_model& model,
                                 const std::map<std::string, double>& values);

}  // namespace pstory
