#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "colorsat/instance.hpp"

namespace colorsat {

struct DominatedRecord {
    int u;          // removed vertex (original label)
    int dominator;  // N(u) was a subset of N(dominator) at removal time
};

struct LowDegreeRecord {
    int u;
    std::vector<int> neighbors;  // neighbors at removal time, original labels
};

using RemovalRecord = std::variant<DominatedRecord, LowDegreeRecord>;

/// Replayable record of the reductions: the removal stack in order, plus
/// the mapping from reduced labels back to original labels.
struct ReductionLog {
    int original_n = 0;
    std::vector<RemovalRecord> removals;
    std::vector<int> kept;  // kept[r-1] = original label of reduced vertex r

    int removed_count() const { return static_cast<int>(removals.size()); }
};

struct Clique {
    std::vector<int> vertices;  // pairwise adjacent, ascending
    long long cut = 0;          // edges with exactly one endpoint inside

    int size() const { return static_cast<int>(vertices.size()); }
};

/// Remove dominated vertices (open neighborhood subset) and vertices of
/// degree below the lower bound, alternating to a fixed point. Rejects
/// weighted instances: these rules are unsound for bandwidth coloring.
std::pair<Instance, ReductionLog> reduce(const Instance& inst, int lower_bound);

struct CliqueOptions {
    std::uint64_t seed = 1;
    long long iterations = -1;  // default ceil(300*|E|/|V|)
    double time_cap_s = 100.0;
};

/// Randomized clique search: repeated greedy maximal cliques over seeded
/// vertex shuffles (maximal independent sets of the complement). Keeps the
/// largest; ties broken by largest cut, then earliest iteration.
Clique find_clique(const Instance& inst, const CliqueOptions& opts = {});

long long clique_cut(const Instance& inst, const std::vector<int>& clique);

/// Extend a valid coloring of the reduced instance to the original one by
/// replaying the removal stack backwards. Dominated vertices copy their
/// dominator; low-degree vertices take the smallest free color.
Coloring lift_coloring(const ReductionLog& log, const Coloring& reduced_coloring);

}  // namespace colorsat
