#pragma once

#include "colorsat/encoding.hpp"

namespace colorsat {

/// Assignment encoding for bandwidth-k feasibility: one clause per edge
/// per ordered color pair closer than the edge distance. No symmetry
/// clauses: bandwidth colorings are not invariant under color swaps.
Encoding encode_ass_s_b(const Instance& inst, int k);

/// Partial-ordering bandwidth encoding: one clause per edge per color,
/// out-of-range ladder literals resolved at build time.
Encoding encode_pop_s_b(const Instance& inst, int k);

/// Hybrid bandwidth encoding: channeled assignment literal on the lower
/// endpoint, ladder window on the other.
Encoding encode_poph_s_b(const Instance& inst, int k);

}  // namespace colorsat
