#pragma once

#include "colorsat/instance.hpp"

namespace colorsat {

struct GreedyBound {
    int H = 0;
    Coloring witness;
};

/// Greedy upper bound for the bandwidth problem: repeatedly take the
/// uncolored vertex of highest degree (ties by lowest label) and give it
/// the smallest color compatible with all colored neighbors.
GreedyBound greedy_bcp_upper_bound(const Instance& inst);

/// Same greedy with all distances treated as 1.
GreedyBound greedy_gcp_upper_bound(const Instance& inst);

}  // namespace colorsat
