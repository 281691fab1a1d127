#include "colorsat/encoding.hpp"

#include <set>
#include <stdexcept>

namespace colorsat {

bool is_bandwidth_kind(EncodingKind kind) {
    return kind == EncodingKind::AssSB || kind == EncodingKind::PopSB || kind == EncodingKind::PophSB;
}

std::string to_string(EncodingKind kind) {
    switch (kind) {
        case EncodingKind::AssS: return "ass-s";
        case EncodingKind::PopS: return "pop-s";
        case EncodingKind::PophS: return "poph-s";
        case EncodingKind::AssSB: return "ass-s-b";
        case EncodingKind::PopSB: return "pop-s-b";
        case EncodingKind::PophSB: return "poph-s-b";
    }
    return "?";
}

Encoding::Counts Encoding::counts() const {
    Counts c;
    c.vars_total = cnf.nvars();
    c.clauses_total = cnf.clause_count();

    std::set<std::string> base;
    switch (kind) {
        case EncodingKind::AssS:
            base = {group::at_least_one, group::edge_conflict, group::seq_amo};
            break;
        case EncodingKind::PopS:
            base = {group::order_top, group::order_chain, group::edge_first_color, group::edge_order};
            break;
        case EncodingKind::PophS:
            base = {group::order_top, group::order_chain, group::edge_conflict, group::channel};
            break;
        case EncodingKind::AssSB:
            base = {group::at_least_one, group::seq_amo, group::bandwidth_edge};
            break;
        case EncodingKind::PopSB:
            base = {group::order_top, group::order_chain, group::bandwidth_edge};
            break;
        case EncodingKind::PophSB:
            base = {group::order_top, group::order_chain, group::channel, group::bandwidth_edge};
            break;
    }
    long long base_units = 0;
    for (const auto& [name, gc] : cnf.groups()) {
        if (base.count(name)) {
            c.base_clauses += gc.clauses + gc.units;
            base_units += gc.units;
        }
    }
    c.base_vars = c.vars_total;
    c.post_vars = c.vars_total - static_cast<long long>(cnf.units().size());
    c.post_base_clauses = c.base_clauses - base_units;
    return c;
}

Coloring decode(const std::vector<bool>& assignment, const Encoding& enc) {
    if (assignment.size() < static_cast<size_t>(enc.cnf.nvars()) + 1)
        throw std::runtime_error("decode: assignment too short");
    Coloring c(enc.n);
    const bool assignment_kind = (enc.kind == EncodingKind::AssS || enc.kind == EncodingKind::AssSB);
    for (int v = 1; v <= enc.n; ++v) {
        if (assignment_kind) {
            int col = 0;
            for (int i = 1; i <= enc.k; ++i) {
                if (assignment[static_cast<size_t>(enc.cnf.var({VarKind::X, v, i}))]) {
                    if (col != 0) throw std::runtime_error("decode: vertex with two colors (not a model)");
                    col = i;
                }
            }
            if (col == 0) throw std::runtime_error("decode: uncolored vertex (not a model)");
            c.set(v, col);
        } else {
            int below = 0;
            for (int i = 1; i <= enc.k; ++i)
                if (assignment[static_cast<size_t>(enc.cnf.var({VarKind::Y, v, i}))]) ++below;
            c.set(v, 1 + below);
        }
    }
    return c;
}

}  // namespace colorsat
