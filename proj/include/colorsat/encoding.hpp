#pragma once

#include <string>
#include <utility>
#include <vector>

#include "colorsat/cnf.hpp"
#include "colorsat/instance.hpp"

namespace colorsat {

enum class EncodingKind { AssS, PopS, PophS, AssSB, PopSB, PophSB };

bool is_bandwidth_kind(EncodingKind kind);
std::string to_string(EncodingKind kind);

struct EncodeOptions {
    bool symmetry = true;                       // coloring kinds only
    std::vector<int> vertex_order;              // empty = input label order
    std::vector<std::pair<int, int>> precolor;  // (vertex, color) pairs
};

/// A k-colorability (or bandwidth-k feasibility) query rendered to CNF,
/// with enough metadata to decode a model back into a coloring.
struct Encoding {
    Cnf cnf;
    EncodingKind kind;
    int k = 0;
    int n = 0;
    std::vector<int> vertex_order;  // vertex_order[pos-1] = vertex
    std::vector<int> position;      // position[v], 1-based
    std::vector<std::pair<int, int>> precolored;
    bool symmetry_applied = false;

    struct Counts {
        long long vars_total = 0;
        long long clauses_total = 0;
        // pre/post unit simplification of the core clause groups
        long long base_vars = 0;
        long long base_clauses = 0;
        long long post_vars = 0;
        long long post_base_clauses = 0;
    };
    Counts counts() const;
};

// clause group tags used by the encoders
namespace group {
inline constexpr const char* at_least_one = "at_least_one";
inline constexpr const char* edge_conflict = "edge_conflict";
inline constexpr const char* seq_amo = "seq_amo";
inline constexpr const char* sym_position = "sym_position";
inline constexpr const char* sym_ladder = "sym_ladder";
inline constexpr const char* order_top = "order_top";
inline constexpr const char* order_chain = "order_chain";
inline constexpr const char* edge_first_color = "edge_first_color";
inline constexpr const char* edge_order = "edge_order";
inline constexpr const char* channel = "channel";
inline constexpr const char* bandwidth_edge = "bandwidth_edge";
inline constexpr const char* precolor = "precolor";
}  // namespace group

/// Read a model back into vertex colors: assignment kinds take the unique
/// true X(v,i); partial-order kinds count true Y(v,i) ladder variables.
Coloring decode(const std::vector<bool>& assignment, const Encoding& enc);

}  // namespace colorsat
