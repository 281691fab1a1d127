#pragma once

#include <vector>

#include "colorsat/instance.hpp"

namespace colorsat {

struct OracleResult {
    int optimum = 0;
    Coloring witness;
};

/// Exact chromatic number by backtracking, k ascending, with a canonical
/// new-color restriction. Intended as test ground truth for small graphs.
OracleResult exact_gcp(const Instance& inst, int cap = 12);

/// Exact bandwidth-coloring optimum by branch and bound over colors
/// 1..greedy bound. Test ground truth only.
OracleResult exact_bcp(const Instance& inst, int cap = 8, int dist_cap = 8);

/// Maximum clique by exhaustive subset search (n <= ~24).
std::vector<int> exact_max_clique(const Instance& inst);

}  // namespace colorsat
