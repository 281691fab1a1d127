#pragma once

// shared builders for the SAT encoders; not installed

#include <numeric>
#include <stdexcept>
#include <vector>

#include "colorsat/encoding.hpp"

namespace colorsat::detail {

struct OrderInfo {
    std::vector<int> order;     // order[pos-1] = vertex
    std::vector<int> position;  // position[v], index 0 unused
};

inline OrderInfo make_order(const Instance& inst, const EncodeOptions& opts) {
    int n = inst.num_vertices();
    OrderInfo info;
    if (opts.vertex_order.empty()) {
        info.order.resize(n);
        std::iota(info.order.begin(), info.order.end(), 1);
    } else {
        if (static_cast<int>(opts.vertex_order.size()) != n)
            throw std::runtime_error("encode: vertex order has wrong length");
        info.order = opts.vertex_order;
    }
    info.position.assign(n + 1, 0);
    for (int p = 1; p <= n; ++p) {
        int v = info.order[p - 1];
        if (v < 1 || v > n || info.position[v] != 0)
            throw std::runtime_error("encode: vertex order is not a permutation");
        info.position[v] = p;
    }
    return info;
}

// symmetry clauses assume the precolored vertices sit on positions 1..m
// with color = position; anything else gets symmetry dropped instead
inline bool precolor_fits_symmetry(const std::vector<std::pair<int, int>>& precolor,
                                   const std::vector<int>& position) {
    std::vector<char> pos_seen(position.size() + 1, 0);
    for (auto [v, c] : precolor) {
        if (position[v] != c) return false;
        if (c >= static_cast<int>(pos_seen.size())) return false;
        pos_seen[c] = 1;
    }
    for (int p = 1; p <= static_cast<int>(precolor.size()); ++p)
        if (!pos_seen[p]) return false;
    return true;
}

inline void check_precolor(const Instance& inst, int k,
                           const std::vector<std::pair<int, int>>& precolor) {
    for (auto [v, c] : precolor) {
        if (v < 1 || v > inst.num_vertices()) throw std::runtime_error("precolor: vertex out of range");
        if (c < 1 || c > k) throw std::runtime_error("precolor: color out of range 1..k");
    }
}

// sequential at-most-one counter over X(v,1..k); k-1 auxiliaries, 3k-4 clauses
inline void add_seq_amo(Cnf& f, int v, int k) {
    if (k < 2) return;
    std::vector<int> s(k);  // s[i] = S(v,i), i in 1..k-1
    for (int i = 1; i <= k - 1; ++i) s[i] = f.new_var({VarKind::S, v, i});
    auto x = [&](int i) { return f.var({VarKind::X, v, i}); };
    for (int i = 1; i <= k - 1; ++i) f.add_clause({-x(i), s[i]}, group::seq_amo);
    for (int i = 2; i <= k - 1; ++i) {
        f.add_clause({-s[i - 1], s[i]}, group::seq_amo);
        f.add_clause({-x(i), -s[i - 1]}, group::seq_amo);
    }
    f.add_clause({-x(k), -s[k - 1]}, group::seq_amo);
}

// channeling X(v,i) <-> (Y(v,i-1) and not Y(v,i)), with Y(v,0) = true
inline void add_channel(Cnf& f, int v, int k) {
    auto x = [&](int i) { return f.var({VarKind::X, v, i}); };
    auto y = [&](int i) { return f.var({VarKind::Y, v, i}); };
    f.add_clause({x(1), y(1)}, group::channel);
    f.add_clause({-x(1), -y(1)}, group::channel);
    for (int i = 2; i <= k; ++i) {
        f.add_clause({-x(i), y(i - 1)}, group::channel);
        f.add_clause({-x(i), -y(i)}, group::channel);
        f.add_clause({x(i), -y(i - 1), y(i)}, group::channel);
    }
}

inline void add_pop_precolor_units(Cnf& f, int v, int c, int k) {
    for (int i = 1; i <= k; ++i) {
        int y = f.var({VarKind::Y, v, i});
        f.add_unit(i < c ? y : -y, group::precolor);
    }
}

}  // namespace colorsat::detail
