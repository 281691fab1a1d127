#pragma once

#include <string>
#include <vector>

#include "colorsat/cnf.hpp"

namespace colorsat {

enum class SolveStatus { Sat, Unsat, Timeout, Error };

std::string to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::Error;
    std::vector<bool> assignment;  // index 1..nvars when Sat
    double seconds = 0.0;
    std::string message;  // captured diagnostics on Error
};

/// Built-in DPLL with two watched literals and unit propagation.
/// Deterministic: branches on the lowest-index unassigned variable, true
/// first. Returned models are checked against the formula before return.
SolveResult solve_internal(const Cnf& f, double timeout_s = 1e18);

/// Run an external solver process on a temp DIMACS file. The command is
/// whitespace-split; the CNF path is appended as the last argument.
/// Exit codes 10/20 and `s`/`v` output lines are both honored; models are
/// checked before being trusted. The child is killed on timeout.
SolveResult solve_external(const Cnf& f, const std::string& solver_cmd, double timeout_s = 1e18);

}  // namespace colorsat
