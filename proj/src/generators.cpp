#include "colorsat/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace colorsat {

namespace {

double next_unit(std::mt19937_64& rng) {
    // top 53 bits -> [0,1); avoids distribution objects for portability
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

}  // namespace

Instance complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.push_back({u, v, 1});
    return Instance(n, std::move(edges), "K" + std::to_string(n));
}

Instance cycle_graph(int n) {
    if (n < 3) throw std::runtime_error("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v, v + 1, 1});
    edges.push_back({1, n, 1});
    return Instance(n, std::move(edges), "C" + std::to_string(n));
}

Instance path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v, v + 1, 1});
    return Instance(n, std::move(edges), "P" + std::to_string(n));
}

Instance star_graph(int leaves) {
    std::vector<Edge> edges;
    for (int v = 2; v <= leaves + 1; ++v) edges.push_back({1, v, 1});
    return Instance(leaves + 1, std::move(edges), "star" + std::to_string(leaves));
}

Instance petersen_graph() {
    // outer C5 on 1..5, inner 5-star polygon on 6..10, spokes i -- i+5
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i + 1, (i + 1) % 5 + 1, 1});
        edges.push_back({i + 6, (i + 2) % 5 + 6, 1});
        edges.push_back({i + 1, i + 6, 1});
    }
    return Instance(10, std::move(edges), "petersen");
}

Instance queen_graph(int N) {
    auto id = [N](int r, int c) { return r * N + c + 1; };
    std::vector<Edge> edges;
    for (int r1 = 0; r1 < N; ++r1)
        for (int c1 = 0; c1 < N; ++c1)
            for (int r2 = 0; r2 < N; ++r2)
                for (int c2 = 0; c2 < N; ++c2) {
                    int a = id(r1, c1), b = id(r2, c2);
                    if (a >= b) continue;
                    if (r1 == r2 || c1 == c2 || r1 - c1 == r2 - c2 || r1 + c1 == r2 + c2)
                        edges.push_back({a, b, 1});
                }
    return Instance(N * N, std::move(edges), "queen" + std::to_string(N) + "_" + std::to_string(N));
}

Instance mycielskian(const Instance& g) {
    int n = g.num_vertices();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        edges.push_back({e.u, e.v, 1});
        edges.push_back({n + e.u, e.v, 1});
        edges.push_back({e.u, n + e.v, 1});
    }
    int apex = 2 * n + 1;
    for (int v = 1; v <= n; ++v) edges.push_back({n + v, apex, 1});
    return Instance(2 * n + 1, std::move(edges), "M(" + g.name() + ")");
}

Instance mycielski_tower(int level) {
    if (level < 1) throw std::runtime_error("mycielski tower starts at level 1 (K2)");
    Instance g(2, {{1, 2, 1}}, "myciel1");
    for (int t = 2; t <= level; ++t) {
        g = mycielskian(g);
        g = Instance(g.num_vertices(), g.edges(), "myciel" + std::to_string(t));
    }
    return g;
}

Instance random_gnp(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (next_unit(rng) < p) edges.push_back({u, v, 1});
    return Instance(n, std::move(edges), "gnp_" + std::to_string(n) + "_" + std::to_string(seed));
}

Instance random_weighted(int n, double p, int max_d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (next_unit(rng) < p) {
                int d = 1 + static_cast<int>(next_below(rng, static_cast<std::uint64_t>(max_d)));
                edges.push_back({u, v, d});
            }
    return Instance(n, std::move(edges), "gnpw_" + std::to_string(n) + "_" + std::to_string(seed));
}

Instance random_gnm_uniform_d(int n, int m, int d, std::uint64_t seed) {
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (m > pairs) throw std::runtime_error("too many edges requested");
    std::mt19937_64 rng(seed);
    // sample distinct pairs by index into the triangular enumeration
    std::vector<long long> all(pairs);
    for (long long i = 0; i < pairs; ++i) all[i] = i;
    for (long long i = pairs - 1; i > 0; --i) {
        long long j = static_cast<long long>(next_below(rng, static_cast<std::uint64_t>(i + 1)));
        std::swap(all[i], all[j]);
    }
    std::vector<Edge> edges;
    for (int t = 0; t < m; ++t) {
        long long idx = all[t];
        // invert idx -> (u,v), u < v
        int u = 1;
        long long row = n - 1;
        while (idx >= row) {
            idx -= row;
            --row;
            ++u;
        }
        int v = u + 1 + static_cast<int>(idx);
        edges.push_back({u, v, d});
    }
    return Instance(n, std::move(edges),
                    "gnm_" + std::to_string(n) + "_" + std::to_string(m) + "_d" + std::to_string(d));
}

}  // namespace colorsat
