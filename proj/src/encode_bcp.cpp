#include "colorsat/encode_bcp.hpp"

#include <stdexcept>

#include "encode_internal.hpp"

namespace colorsat {

using detail::add_channel;
using detail::add_seq_amo;

namespace {

void prepare(const Instance&, int k) {
    if (k < 1) throw std::runtime_error("encode: k must be >= 1");
}

void finish(Encoding& enc, const Instance& inst, int k, EncodingKind kind) {
    enc.kind = kind;
    enc.k = k;
    enc.n = inst.num_vertices();
    enc.vertex_order.resize(inst.num_vertices());
    for (int v = 1; v <= inst.num_vertices(); ++v) enc.vertex_order[v - 1] = v;
    enc.position = enc.vertex_order;
    enc.position.insert(enc.position.begin(), 0);
    enc.symmetry_applied = false;
}

// ladder literal with the out-of-range convention Y(v,i) = true for i < 1
// and false for i > k, applied while the clause is built: a constant-true
// literal kills the clause, a constant-false literal is dropped.
struct ClauseBuilder {
    Cnf& f;
    int k;
    std::vector<int> lits;
    bool satisfied = false;

    void pos_y(int v, int i) {
        if (i < 1)
            satisfied = true;
        else if (i <= k)
            lits.push_back(f.var({VarKind::Y, v, i}));
        // i > k: constant false, dropped
    }
    void neg_y(int v, int i) {
        if (i > k)
            satisfied = true;
        else if (i >= 1)
            lits.push_back(-f.var({VarKind::Y, v, i}));
        // i < 1: negation of constant true, dropped
    }
    void neg_x(int v, int i) { lits.push_back(-f.var({VarKind::X, v, i})); }

    void emit(const char* group) {
        if (!satisfied) f.add_clause(std::move(lits), group);
        lits.clear();
        satisfied = false;
    }
};

void add_order_chain(Cnf& f, int n, int k) {
    for (int v = 1; v <= n; ++v)
        for (int i = 1; i <= k - 1; ++i)
            f.add_clause({f.var({VarKind::Y, v, i}), -f.var({VarKind::Y, v, i + 1})}, group::order_chain);
}

void add_order_top_units(Cnf& f, int n, int k) {
    for (int v = 1; v <= n; ++v) f.add_unit(-f.var({VarKind::Y, v, k}), group::order_top);
}

}  // namespace

Encoding encode_ass_s_b(const Instance& inst, int k) {
    prepare(inst, k);
    int n = inst.num_vertices();
    Encoding enc;
    Cnf& f = enc.cnf;

    for (int v = 1; v <= n; ++v)
        for (int i = 1; i <= k; ++i) f.new_var({VarKind::X, v, i});

    for (int v = 1; v <= n; ++v) {
        std::vector<int> lits;
        for (int i = 1; i <= k; ++i) lits.push_back(f.var({VarKind::X, v, i}));
        f.add_clause(std::move(lits), group::at_least_one);
    }
    for (int v = 1; v <= n; ++v) add_seq_amo(f, v, k);

    // one clause per ordered color pair closer than the edge distance
    for (const Edge& e : inst.edges())
        for (int i = 1; i <= k; ++i)
            for (int j = std::max(1, i - e.d + 1); j <= std::min(k, i + e.d - 1); ++j)
                f.add_clause({-f.var({VarKind::X, e.u, i}), -f.var({VarKind::X, e.v, j})},
                             group::bandwidth_edge);

    finish(enc, inst, k, EncodingKind::AssSB);
    return enc;
}

Encoding encode_pop_s_b(const Instance& inst, int k) {
    prepare(inst, k);
    int n = inst.num_vertices();
    Encoding enc;
    Cnf& f = enc.cnf;

    for (int v = 1; v <= n; ++v)
        for (int i = 1; i <= k; ++i) f.new_var({VarKind::Y, v, i});

    add_order_top_units(f, n, k);
    add_order_chain(f, n, k);

    // color of u equal to i forces the color of v out of the distance window
    ClauseBuilder cb{f, k, {}, false};
    for (const Edge& e : inst.edges()) {
        for (int i = 1; i <= k; ++i) {
            cb.neg_y(e.u, i - 1);
            cb.pos_y(e.u, i);
            cb.neg_y(e.v, i - e.d);
            cb.pos_y(e.v, i + e.d - 1);
            cb.emit(group::bandwidth_edge);
        }
    }

    finish(enc, inst, k, EncodingKind::PopSB);
    return enc;
}

Encoding encode_poph_s_b(const Instance& inst, int k) {
    prepare(inst, k);
    int n = inst.num_vertices();
    Encoding enc;
    Cnf& f = enc.cnf;

    for (int v = 1; v <= n; ++v)
        for (int i = 1; i <= k; ++i) f.new_var({VarKind::X, v, i});
    for (int v = 1; v <= n; ++v)
        for (int i = 1; i <= k; ++i) f.new_var({VarKind::Y, v, i});

    add_order_top_units(f, n, k);
    add_order_chain(f, n, k);
    for (int v = 1; v <= n; ++v) add_channel(f, v, k);

    ClauseBuilder cb{f, k, {}, false};
    for (const Edge& e : inst.edges()) {
        for (int i = 1; i <= k; ++i) {
            cb.neg_x(e.u, i);
            cb.neg_y(e.v, i - e.d);
            cb.pos_y(e.v, i + e.d - 1);
            cb.emit(group::bandwidth_edge);
        }
    }

    finish(enc, inst, k, EncodingKind::PophSB);
    return enc;
}

}  // namespace colorsat
