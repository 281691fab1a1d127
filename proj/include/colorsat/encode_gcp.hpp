#pragma once

#include "colorsat/encoding.hpp"

namespace colorsat {

/// Assignment encoding: one-hot color variables with a sequential
/// at-most-one counter per vertex and positional symmetry clauses.
Encoding encode_ass_s(const Instance& inst, int k, const EncodeOptions& opts = {});

/// Partial-ordering encoding: ladder variables Y(v,i) ("color i is below
/// v"), one clause per edge per color, positional symmetry clauses.
Encoding encode_pop_s(const Instance& inst, int k, const EncodeOptions& opts = {});

/// Hybrid: ladder variables channeled to assignment variables so edge
/// conflicts use the two-literal assignment form.
Encoding encode_poph_s(const Instance& inst, int k, const EncodeOptions& opts = {});

}  // namespace colorsat
