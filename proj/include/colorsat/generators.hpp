#pragma once

#include <cstdint>

#include "colorsat/instance.hpp"

namespace colorsat {

// standard graph families, 1-based labels
Instance complete_graph(int n);
Instance cycle_graph(int n);
Instance path_graph(int n);
Instance star_graph(int leaves);  // center 1, leaves 2..leaves+1
Instance petersen_graph();

/// n-queens graph: N*N board squares, edges between squares sharing a
/// row, column, or diagonal. Vertex of square (r,c) is r*N + c + 1.
Instance queen_graph(int N);

/// Mycielskian M(G): doubles the vertex count plus one apex, preserves
/// triangle-freeness, increases the chromatic number by one.
Instance mycielskian(const Instance& g);

/// Tower of Mycielskians over K2; level 3 is the Grotzsch graph
/// (11 vertices, 20 edges, chromatic number 4).
Instance mycielski_tower(int level);

/// Seeded G(n,p); identical output across platforms for a given seed.
Instance random_gnp(int n, double p, std::uint64_t seed);

/// Seeded G(n,p) with uniform random edge distances in 1..max_d.
Instance random_weighted(int n, double p, int max_d, std::uint64_t seed);

/// Seeded random graph with exactly m edges, all distances = d.
Instance random_gnm_uniform_d(int n, int m, int d, std::uint64_t seed);

}  // namespace colorsat
