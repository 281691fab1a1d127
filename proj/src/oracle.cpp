#include "colorsat/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "colorsat/bounds.hpp"

namespace colorsat {

namespace {

std::vector<int> degree_descending_order(const Instance& inst) {
    std::vector<int> order(inst.num_vertices());
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (inst.degree(a) != inst.degree(b)) return inst.degree(a) > inst.degree(b);
        return a < b;
    });
    return order;
}

bool color_with_k(const Instance& inst, const std::vector<int>& order, size_t pos, int k,
                  int used, Coloring& c) {
    if (pos == order.size()) return true;
    int v = order[pos];
    int limit = std::min(k, used + 1);  // first use of a new color may as well be the next one
    for (int col = 1; col <= limit; ++col) {
        bool ok = true;
        for (const auto& [w, d] : inst.neighbors(v)) {
            (void)d;
            if (c.color(w) == col) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        c.set(v, col);
        if (color_with_k(inst, order, pos + 1, k, std::max(used, col), c)) return true;
        c.set(v, 0);
    }
    return false;
}

struct BcpSearch {
    const Instance& inst;
    const std::vector<int>& order;
    Coloring current;
    Coloring best;
    int best_max;

    void go(size_t pos, int cur_max) {
        if (cur_max >= best_max) return;
        if (pos == order.size()) {
            best = current;
            best_max = cur_max;
            return;
        }
        int v = order[pos];
        for (int col = 1; col < best_max; ++col) {
            if (std::max(cur_max, col) >= best_max) break;
            bool ok = true;
            for (const auto& [w, d] : inst.neighbors(v)) {
                int cw = current.color(w);
                if (cw != 0 && std::abs(cw - col) < d) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            current.set(v, col);
            go(pos + 1, std::max(cur_max, col));
            current.set(v, 0);
        }
    }
};

}  // namespace

OracleResult exact_gcp(const Instance& inst, int cap) {
    int n = inst.num_vertices();
    if (n > cap) throw std::runtime_error("exact_gcp: instance above oracle cap");
    if (inst.weighted()) throw std::runtime_error("exact_gcp: weighted instance");
    if (n == 0) return {0, Coloring(0)};
    auto order = degree_descending_order(inst);
    for (int k = 1; k <= n; ++k) {
        Coloring c(n);
        if (color_with_k(inst, order, 0, k, 0, c)) return {k, c};
    }
    throw std::runtime_error("exact_gcp: unreachable");
}

OracleResult exact_bcp(const Instance& inst, int cap, int dist_cap) {
    int n = inst.num_vertices();
    if (n > cap) throw std::runtime_error("exact_bcp: instance above oracle cap");
    if (inst.max_distance() > dist_cap) throw std::runtime_error("exact_bcp: distance above oracle cap");
    if (n == 0) return {0, Coloring(0)};
    auto greedy = greedy_bcp_upper_bound(inst);
    auto order = degree_descending_order(inst);
    // greedy witness is feasible at H; search only strictly better assignments
    BcpSearch s{inst, order, Coloring(n), greedy.witness, greedy.H};
    s.go(0, 0);
    return {s.best_max, s.best};
}

std::vector<int> exact_max_clique(const Instance& inst) {
    int n = inst.num_vertices();
    if (n > 24) throw std::runtime_error("exact_max_clique: too large");
    std::vector<int> best;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        if (static_cast<int>(__builtin_popcountl(mask)) <= static_cast<int>(best.size())) continue;
        std::vector<int> verts;
        for (int v = 1; v <= n; ++v)
            if (mask & (1ul << (v - 1))) verts.push_back(v);
        bool clique = true;
        for (size_t i = 0; i < verts.size() && clique; ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (!inst.adjacent(verts[i], verts[j])) {
                    clique = false;
                    break;
                }
        if (clique) best = verts;
    }
    return best;
}

}  // namespace colorsat
