#include "colorsat/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace colorsat {

namespace {

GreedyBound greedy(const Instance& inst, bool use_distances) {
    int n = inst.num_vertices();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (inst.degree(a) != inst.degree(b)) return inst.degree(a) > inst.degree(b);
        return a < b;
    });
    Coloring c(n);
    int H = n > 0 ? 1 : 0;
    for (int v : order) {
        int col = 1;
        for (bool retry = true; retry;) {
            retry = false;
            for (const auto& [w, d] : inst.neighbors(v)) {
                int cw = c.color(w);
                if (cw == 0) continue;
                int need = use_distances ? d : 1;
                if (std::abs(cw - col) < need) {
                    // jump past the blocked band around cw
                    col = cw + need;
                    retry = true;
                    break;
                }
            }
        }
        c.set(v, col);
        H = std::max(H, col);
    }
    return {H, c};
}

}  // namespace

GreedyBound greedy_bcp_upper_bound(const Instance& inst) { return greedy(inst, true); }

GreedyBound greedy_gcp_upper_bound(const Instance& inst) { return greedy(inst, false); }

}  // namespace colorsat
