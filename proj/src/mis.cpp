#include <bit>
#include <cstdint>

#include "planar_story/bounds.hpp"
#include "planar_story/error.hpp"

namespace pstory {

namespace {

using mask = std::uint64_t;

class mis_search {
public:
    explicit mis_search(const crossing_graph& x) : nbr_(x.size(), 0) {
        for (int v = 0; v < x.size(); ++v) {
            for (int w : x.neighbors(v)) nbr_[v] |= mask{1} << w;
        }
    }

    mask run(mask all) {
        best_size_ = -1;
        search(all, 0, 0);
        return best_;
    }

private:
    void search(mask open, mask chosen, int size) {
        if (open == 0) {
            if (size > best_size_) {
                best_size_ = size;
                best_ = chosen;
            }
            return;
        }
        if (size + std::popcount(open) <= best_size_) return;

        int pivot = -1, pivot_degree = -1;
        for (mask rest = open; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int d = std::popcount(nbr_[v] & open);
            if (d <= 1) {
                // Some maximum set contains a vertex of degree at most one.
                search(open & ~nbr_[v] & ~(mask{1} << v), chosen | (mask{1} << v), size + 1);
                return;
            }
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        const mask bit = mask{1} << pivot;
        search(open & ~nbr_[pivot] & ~bit, chosen | bit, size + 1);
        search(open & ~bit, chosen, size);
    }

    std::vector<mask> nbr_;
    mask best_ = 0;
    int best_size_ = -1;
};

}  // namespace

vertex_set maximum_independent_set(const crossing_graph& x) {
    const int n = x.size();
    if (n > 64) throw input_error("exact maximum independent set supports at most 64 vertices");
    if (n == 0) return {};
    const mask all = n == 64 ? ~mask{0} : (mask{1} << n) - 1;
    mask best = mis_search(x).run(all);
    vertex_set out;
    for (; best; best &= best - 1) out.push_back(std::countr_zero(best));
    return out;
}

}  // namespace pstory
