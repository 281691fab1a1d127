#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colorsat/encoding.hpp"
#include "colorsat/instance.hpp"
#include "colorsat/solve.hpp"

namespace colorsat {

enum class Problem { Gcp, Bcp };

std::string to_string(Problem p);

struct KQuery {
    int k;
    SolveStatus decision;
    double seconds;
};

struct SolveReport {
    std::string instance_name;
    Problem problem = Problem::Gcp;
    EncodingKind encoder = EncodingKind::PopS;
    int lb = 1;
    int ub = 0;
    bool optimal = false;
    bool has_witness = false;
    Coloring witness;
    std::vector<KQuery> per_k;
    int preprocess_removed = 0;
    int clique_size = 0;
    double total_seconds = 0.0;
    std::string error;
};

enum class Backend { Internal, External };

struct SearchOptions {
    Backend backend = Backend::Internal;
    std::string solver_cmd;  // external backend command
    double budget_s = 3600.0;
    std::uint64_t seed = 1;
    bool symmetry = true;
    bool degree_order = false;  // order non-clique vertices by descending degree
};

/// Ascending linear search for the chromatic number: preprocessing
/// reductions, clique precoloring as the lower bound, then k-colorability
/// queries from the bound upward until the first satisfiable k.
SolveReport solve_gcp(const Instance& inst, EncodingKind kind, const SearchOptions& opts = {});

/// Descending linear search for the bandwidth optimum: the greedy upper
/// bound supplies a free witness at H, then k = H-1, H-2, ... until the
/// first unsatisfiable k. No preprocessing (unsound for bandwidth).
SolveReport solve_bcp(const Instance& inst, EncodingKind kind, const SearchOptions& opts = {});

struct Violation {
    int u, v;
};

/// Independent edge-by-edge validity check; shared by tests and drivers,
/// deliberately ignorant of any encoder.
std::vector<Violation> verify(const Instance& inst, const Coloring& c, Problem problem);

}  // namespace colorsat
