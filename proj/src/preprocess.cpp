#include "colorsat/preprocess.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace colorsat {

namespace {

using Clock = std::chrono::steady_clock;

// live adjacency sets during reduction, original labels
struct WorkGraph {
    std::vector<std::set<int>> adj;  // index 1..n
    std::set<int> live;

    explicit WorkGraph(const Instance& inst) : adj(inst.num_vertices() + 1) {
        for (const Edge& e : inst.edges()) {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        for (int v = 1; v <= inst.num_vertices(); ++v) live.insert(v);
    }

    void remove(int u) {
        for (int w : adj[u]) adj[w].erase(u);
        adj[u].clear();
        live.erase(u);
    }
};

// one pass of the domination rule; returns true if something was removed.
// a found domination stays valid under unrelated removals (neighborhoods
// only shrink), so the pass keeps scanning instead of restarting.
bool dominated_pass(WorkGraph& g, std::vector<RemovalRecord>& out) {
    bool removed_any = false;
    std::vector<int> snapshot(g.live.begin(), g.live.end());
    for (int u : snapshot) {
        if (!g.live.count(u)) continue;
        for (int v : snapshot) {
            if (u == v || !g.live.count(v)) continue;
            const auto& nu = g.adj[u];
            const auto& nv = g.adj[v];
            if (nu.size() > nv.size()) continue;
            if (!std::includes(nv.begin(), nv.end(), nu.begin(), nu.end())) continue;
            // mutual domination (equal neighborhoods): drop the higher label
            int removed = u, keeper = v;
            if (nu.size() == nv.size() && u < v) {
                removed = v;
                keeper = u;
            }
            out.push_back(DominatedRecord{removed, keeper});
            g.remove(removed);
            removed_any = true;
            if (removed == u) break;
        }
    }
    return removed_any;
}

bool low_degree_pass(WorkGraph& g, int lower_bound, std::vector<RemovalRecord>& out) {
    bool removed_any = false;
    std::vector<int> snapshot(g.live.begin(), g.live.end());
    for (int u : snapshot) {
        if (!g.live.count(u)) continue;
        if (static_cast<int>(g.adj[u].size()) < lower_bound) {
            out.push_back(LowDegreeRecord{u, {g.adj[u].begin(), g.adj[u].end()}});
            g.remove(u);
            removed_any = true;
        }
    }
    return removed_any;
}

}  // namespace

std::pair<Instance, ReductionLog> reduce(const Instance& inst, int lower_bound) {
    if (lower_bound < 1) throw std::runtime_error("reduce: lower bound must be >= 1");
    if (inst.weighted())
        throw std::runtime_error("reduce: reductions are unsound for weighted (bandwidth) instances");

    WorkGraph g(inst);
    ReductionLog log;
    log.original_n = inst.num_vertices();
    for (bool changed = true; changed;) {
        changed = false;
        while (dominated_pass(g, log.removals)) changed = true;
        while (low_degree_pass(g, lower_bound, log.removals)) changed = true;
    }

    // relabel survivors 1..n' in ascending original order
    log.kept.assign(g.live.begin(), g.live.end());
    std::vector<int> reduced_label(inst.num_vertices() + 1, 0);
    for (size_t r = 0; r < log.kept.size(); ++r) reduced_label[log.kept[r]] = static_cast<int>(r) + 1;
    std::vector<Edge> edges;
    for (const Edge& e : inst.edges())
        if (reduced_label[e.u] && reduced_label[e.v])
            edges.push_back({reduced_label[e.u], reduced_label[e.v], e.d});
    Instance reduced(static_cast<int>(log.kept.size()), std::move(edges), inst.name());
    return {std::move(reduced), std::move(log)};
}

long long clique_cut(const Instance& inst, const std::vector<int>& clique) {
    std::vector<char> in(inst.num_vertices() + 1, 0);
    for (int v : clique) in[v] = 1;
    long long cut = 0;
    for (const Edge& e : inst.edges())
        if (in[e.u] != in[e.v]) ++cut;
    return cut;
}

Clique find_clique(const Instance& inst, const CliqueOptions& opts) {
    int n = inst.num_vertices();
    if (n == 0) throw std::runtime_error("find_clique: empty instance");
    long long iterations = opts.iterations;
    if (iterations < 0)
        iterations = (300LL * inst.num_edges() + n - 1) / n;
    iterations = std::max<long long>(iterations, 1);

    std::mt19937_64 rng(opts.seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);

    Clique best;
    auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(opts.time_cap_s));
    for (long long it = 0; it < iterations; ++it) {
        if (it > 0 && Clock::now() >= deadline) break;
        // seeded Fisher-Yates, independent of std::shuffle internals
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(perm[i], perm[j]);
        }
        // greedy maximal clique = maximal independent set in the complement
        std::vector<int> q;
        for (int v : perm) {
            bool ok = true;
            for (int w : q)
                if (!inst.adjacent(v, w)) {
                    ok = false;
                    break;
                }
            if (ok) q.push_back(v);
        }
        if (static_cast<int>(q.size()) < best.size()) continue;
        long long cut = clique_cut(inst, q);
        if (static_cast<int>(q.size()) > best.size() || cut > best.cut) {
            std::sort(q.begin(), q.end());
            best.vertices = std::move(q);
            best.cut = cut;
        }
    }
    return best;
}

Coloring lift_coloring(const ReductionLog& log, const Coloring& reduced_coloring) {
    Coloring full(log.original_n);
    for (size_t r = 0; r < log.kept.size(); ++r) {
        int c = reduced_coloring.color(static_cast<int>(r) + 1);
        if (c < 1) throw std::runtime_error("lift_coloring: reduced coloring is not total");
        full.set(log.kept[r], c);
    }
    // restore in reverse removal order; a record's neighbors/dominator were
    // still present when it was removed, so they are colored by now
    for (auto it = log.removals.rbegin(); it != log.removals.rend(); ++it) {
        if (const auto* dom = std::get_if<DominatedRecord>(&*it)) {
            int c = full.color(dom->dominator);
            if (c < 1) throw std::runtime_error("lift_coloring: dominator uncolored (corrupt log)");
            full.set(dom->u, c);
        } else {
            const auto& rec = std::get<LowDegreeRecord>(*it);
            std::set<int> used;
            for (int w : rec.neighbors) {
                int c = full.color(w);
                if (c < 1) throw std::runtime_error("lift_coloring: neighbor uncolored (corrupt log)");
                used.insert(c);
            }
            int c = 1;
            while (used.count(c)) ++c;
            full.set(rec.u, c);
        }
    }
    return full;
}

}  // namespace colorsat
