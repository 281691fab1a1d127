#include "colorsat/encode_gcp.hpp"

#include <algorithm>
#include <stdexcept>

#include "encode_internal.hpp"

namespace colorsat {

using detail::add_channel;
using detail::add_pop_precolor_units;
using detail::add_seq_amo;
using detail::check_precolor;
using detail::make_order;
using detail::precolor_fits_symmetry;

namespace {

struct Prepared {
    int k;
    detail::OrderInfo ord;
    bool symmetry;
};

Prepared prepare(const Instance& inst, int k, const EncodeOptions& opts) {
    if (k < 1) throw std::runtime_error("encode: k must be >= 1");
    if (inst.weighted()) throw std::runtime_error("encode: weighted instance needs a bandwidth encoder");
    check_precolor(inst, k, opts.precolor);
    auto ord = make_order(inst, opts);
    bool symmetry = opts.symmetry && precolor_fits_symmetry(opts.precolor, ord.position);
    return {k, std::move(ord), symmetry};
}

void finish(Encoding& enc, const Instance& inst, const Prepared& p,
            const EncodeOptions& opts, EncodingKind kind) {
    enc.kind = kind;
    enc.k = p.k;
    enc.n = inst.num_vertices();
    enc.vertex_order = p.ord.order;
    enc.position = p.ord.position;
    enc.precolored = opts.precolor;
    enc.symmetry_applied = p.symmetry;
}

// color labels above the vertex position are forbidden
void add_position_clauses_x(Cnf& f, const Prepared& p, int n) {
    for (int pos = 1; pos <= std::min(p.k, n); ++pos) {
        int v = p.ord.order[pos - 1];
        for (int i = pos + 1; i <= p.k; ++i)
            f.add_clause({-f.var({VarKind::X, v, i})}, group::sym_position);
    }
}

// a vertex may open color i only if some earlier vertex has color i-1
void add_ladder_clauses_x(Cnf& f, const Prepared& p, int n) {
    for (int pos = 2; pos <= n - 1; ++pos) {
        int v = p.ord.order[pos - 1];
        for (int i = 2; i <= p.k; ++i) {
            std::vector<int> lits{-f.var({VarKind::X, v, i})};
            for (int u = i - 1; u <= pos - 1; ++u)
                lits.push_back(f.var({VarKind::X, p.ord.order[u - 1], i - 1}));
            f.add_clause(std::move(lits), group::sym_ladder);
        }
    }
}

void add_position_clauses_y(Cnf& f, const Prepared& p, int n) {
    for (int pos = 1; pos <= std::min(p.k, n); ++pos) {
        int v = p.ord.order[pos - 1];
        f.add_clause({-f.var({VarKind::Y, v, pos})}, group::sym_position);
    }
}

void add_ladder_clauses_y(Cnf& f, const Prepared& p, int n) {
    for (int pos = 2; pos <= n - 1; ++pos) {
        int v = p.ord.order[pos - 1];
        for (int i = 2; i <= p.k; ++i) {
            std::vector<int> lits{-f.var({VarKind::Y, v, i})};
            for (int u = i - 1; u <= pos - 1; ++u)
                lits.push_back(f.var({VarKind::Y, p.ord.order[u - 1], i - 1}));
            f.add_clause(std::move(lits), group::sym_ladder);
        }
    }
}

void add_order_chain(Cnf& f, int n, int k) {
    for (int v = 1; v <= n; ++v)
        for (int i = 1; i <= k - 1; ++i)
            f.add_clause({f.var({VarKind::Y, v, i}), -f.var({VarKind::Y, v, i + 1})}, group::order_chain);
}

void add_order_top_units(Cnf& f, int n, int k) {
    for (int v = 1; v <= n; ++v) f.add_unit(-f.var({VarKind::Y, v, k}), group::order_top);
}

}  // namespace

Encoding encode_ass_s(const Instance& inst, int k, const EncodeOptions& opts) {
    Prepared p = prepare(inst, k, opts);
    int n = inst.num_vertices();
    Encoding enc;
    Cnf& f = enc.cnf;

    for (int v = 1; v <= n; ++v)
        for (int i = 1; i <= p.k; ++i) f.new_var({VarKind::X, v, i});

    for (int v = 1; v <= n; ++v) {
        std::vector<int> lits;
        for (int i = 1; i <= p.k; ++i) lits.push_back(f.var({VarKind::X, v, i}));
        f.add_clause(std::move(lits), group::at_least_one);
    }
    for (const Edge& e : inst.edges())
        for (int i = 1; i <= p.k; ++i)
            f.add_clause({-f.var({VarKind::X, e.u, i}), -f.var({VarKind::X, e.v, i})},
                         group::edge_conflict);
    for (int v = 1; v <= n; ++v) add_seq_amo(f, v, p.k);

    if (p.symmetry) {
        add_position_clauses_x(f, p, n);
        add_ladder_clauses_x(f, p, n);
    }
    for (auto [v, c] : opts.precolor) f.add_unit(f.var({VarKind::X, v, c}), group::precolor);

    finish(enc, inst, p, opts, EncodingKind::AssS);
    return enc;
}

Encoding encode_pop_s(const Instance& inst, int k, const EncodeOptions& opts) {
    Prepared p = prepare(inst, k, opts);
    int n = inst.num_vertices();
    Encoding enc;
    Cnf& f = enc.cnf;

    for (int v = 1; v <= n; ++v)
        for (int i = 1; i <= p.k; ++i) f.new_var({VarKind::Y, v, i});

    add_order_top_units(f, n, p.k);
    add_order_chain(f, n, p.k);
    for (const Edge& e : inst.edges()) {
        f.add_clause({f.var({VarKind::Y, e.u, 1}), f.var({VarKind::Y, e.v, 1})},
                     group::edge_first_color);
        for (int i = 2; i <= p.k; ++i)
            f.add_clause({-f.var({VarKind::Y, e.u, i - 1}), f.var({VarKind::Y, e.u, i}),
                          -f.var({VarKind::Y, e.v, i - 1}), f.var({VarKind::Y, e.v, i})},
                         group::edge_order);
    }

    if (p.symmetry) {
        add_position_clauses_y(f, p, n);
        add_ladder_clauses_y(f, p, n);
    }
    for (auto [v, c] : opts.precolor) add_pop_precolor_units(f, v, c, p.k);

    finish(enc, inst, p, opts, EncodingKind::PopS);
    return enc;
}

Encoding encode_poph_s(const Instance& inst, int k, const EncodeOptions& opts) {
    Prepared p = prepare(inst, k, opts);
    int n = inst.num_vertices();
    Encoding enc;
    Cnf& f = enc.cnf;

    for (int v = 1; v <= n; ++v)
        for (int i = 1; i <= p.k; ++i) f.new_var({VarKind::X, v, i});
    for (int v = 1; v <= n; ++v)
        for (int i = 1; i <= p.k; ++i) f.new_var({VarKind::Y, v, i});

    add_order_top_units(f, n, p.k);
    add_order_chain(f, n, p.k);
    for (const Edge& e : inst.edges())
        for (int i = 1; i <= p.k; ++i)
            f.add_clause({-f.var({VarKind::X, e.u, i}), -f.var({VarKind::X, e.v, i})},
                         group::edge_conflict);
    for (int v = 1; v <= n; ++v) add_channel(f, v, p.k);

    if (p.symmetry) {
        add_position_clauses_y(f, p, n);
        add_ladder_clauses_x(f, p, n);
    }
    for (auto [v, c] : opts.precolor) {
        f.add_unit(f.var({VarKind::X, v, c}), group::precolor);
        add_pop_precolor_units(f, v, c, p.k);
    }

    finish(enc, inst, p, opts, EncodingKind::PophS);
    return enc;
}

}  // namespace colorsat
