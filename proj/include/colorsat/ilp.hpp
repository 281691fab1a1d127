#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "colorsat/instance.hpp"

namespace colorsat {

enum class IlpKind { AssI, PopI, PophI, AssIB, PopIB, PophIB };

bool is_bandwidth_ilp(IlpKind kind);
std::string to_string(IlpKind kind);

struct IlpSize {
    long long nvars = 0;
    long long nconstraints = 0;
    std::map<std::string, long long> row_groups;
};

/// Render the model as CPLEX-style LP text (objective, subject-to rows,
/// binaries section). H is the color bound dimensioning the model.
std::string emit_model(IlpKind kind, const Instance& inst, int H);

/// Variable/row counts from the same row generator, without rendering.
IlpSize count_model_size(IlpKind kind, const Instance& inst, int H);

/// Closed-form size of the assignment bandwidth model:
/// H|V|+1 variables, (H+1)|V| + H|E|(2 d_avg - 1) - sum(d(e)^2 - d(e)) rows.
std::pair<long long, long long> count_ass_i_b_closed_form(const Instance& inst, int H);

struct LpStructure {
    long long objective_terms = 0;
    long long rows = 0;
    long long binaries = 0;
    bool has_objective_constant = false;
};

/// Minimal LP grammar check used by tests; throws on malformed text.
LpStructure parse_lp_structure(const std::string& lp_text);

}  // namespace colorsat
