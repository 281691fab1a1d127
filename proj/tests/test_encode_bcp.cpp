#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "colorsat/bounds.hpp"
#include "colorsat/encode_bcp.hpp"
#include "colorsat/generators.hpp"
#include "colorsat/oracle.hpp"
#include "colorsat/search.hpp"
#include "colorsat/solve.hpp"

using namespace colorsat;

namespace {

Encoding build(EncodingKind kind, const Instance& g, int k) {
    switch (kind) {
        case EncodingKind::AssSB: return encode_ass_s_b(g, k);
        case EncodingKind::PopSB: return encode_pop_s_b(g, k);
        default: return encode_poph_s_b(g, k);
    }
}

// descending feasibility search used as a small driver for encoder tests
int optimum_via(EncodingKind kind, const Instance& g) {
    int H = greedy_bcp_upper_bound(g).H;
    int best = H;
    for (int k = H - 1; k >= 1; --k) {
        auto res = solve_internal(build(kind, g, k).cnf);
        REQUIRE(res.status != SolveStatus::Error);
        if (res.status == SolveStatus::Unsat) break;
        best = k;
    }
    return best;
}

}  // namespace

TEST_CASE("distance 1 reduces to plain coloring") {
    Instance e1(2, {{1, 2, 1}});
    Encoding enc = encode_ass_s_b(e1, 2);
    // edge clauses only for the equal pairs (1,1) and (2,2)
    CHECK(enc.cnf.group_clauses(group::bandwidth_edge) == 2);
    auto res = solve_internal(enc.cnf);
    REQUIRE(res.status == SolveStatus::Sat);
    Coloring c = decode(res.assignment, enc);
    CHECK(c.color(1) != c.color(2));
}

TEST_CASE("assignment edge clause count for one edge, d=2, k=3") {
    Instance e(2, {{1, 2, 2}});
    Encoding enc = encode_ass_s_b(e, 3);
    CHECK(enc.cnf.group_clauses(group::bandwidth_edge) == 7);
}

TEST_CASE("single heavy edge: assignment encoding brackets the optimum") {
    Instance e(2, {{1, 2, 3}});
    CHECK(solve_internal(encode_ass_s_b(e, 3).cnf).status == SolveStatus::Unsat);
    CHECK(solve_internal(encode_ass_s_b(e, 4).cnf).status == SolveStatus::Sat);
}

TEST_CASE("ladder boundary: edge d=2, k=4, first color clause") {
    Instance e(2, {{1, 2, 2}});
    Encoding enc = encode_pop_s_b(e, 4);
    // at i=1 both negative literals hit the out-of-range convention,
    // leaving exactly (y_u_1 or y_v_2)
    int yu1 = enc.cnf.var({VarKind::Y, 1, 1});
    int yv2 = enc.cnf.var({VarKind::Y, 2, 2});
    bool found = false;
    for (const auto& cl : enc.cnf.clauses())
        if (cl.size() == 2 && ((cl[0] == yu1 && cl[1] == yv2) || (cl[0] == yv2 && cl[1] == yu1)))
            found = true;
    CHECK(found);
}

TEST_CASE("ladder bandwidth clauses with d=1 mirror the coloring clause shapes") {
    Instance e(2, {{1, 2, 1}});
    Encoding enc = encode_pop_s_b(e, 3);
    // i=1 gives the two-literal first-color clause, i>=2 the four-literal shape
    std::vector<size_t> sizes;
    for (const auto& cl : enc.cnf.clauses())
        sizes.push_back(cl.size());
    CHECK(std::count(sizes.begin(), sizes.end(), 2) >= 1);   // (y_u_1 or y_v_1)
    CHECK(enc.cnf.group_clauses(group::bandwidth_edge) == 3);
}

TEST_CASE("hybrid clause at d=1 forbids equal colors") {
    Instance e(2, {{1, 2, 1}});
    Encoding enc = encode_poph_s_b(e, 3);
    for (int k = 2; k >= 1; --k) {
        auto res = solve_internal(build(EncodingKind::PophSB, e, k).cnf);
        CHECK((res.status == SolveStatus::Sat) == (k >= 2));
    }
    auto res = solve_internal(enc.cnf);
    REQUIRE(res.status == SolveStatus::Sat);
    Coloring c = decode(res.assignment, enc);
    CHECK(c.color(1) != c.color(2));
}

TEST_CASE("distance-2 triangle: all encoders bracket the optimum at 5") {
    Instance tri(3, {{1, 2, 2}, {1, 3, 2}, {2, 3, 2}});
    for (EncodingKind kind : {EncodingKind::AssSB, EncodingKind::PopSB, EncodingKind::PophSB}) {
        CHECK(solve_internal(build(kind, tri, 4).cnf).status == SolveStatus::Unsat);
        Encoding enc5 = build(kind, tri, 5);
        auto res = solve_internal(enc5.cnf);
        REQUIRE(res.status == SolveStatus::Sat);
        CHECK(verify(tri, decode(res.assignment, enc5), Problem::Bcp).empty());
    }
}

TEST_CASE("single-orientation sufficiency, exhaustive over d <= 4 and k <= 8") {
    // for every violating color pair, some emitted clause must be falsified
    for (int d = 1; d <= 4; ++d) {
        Instance e(2, {{1, 2, d}});
        for (int k = 1; k <= 8; ++k) {
            for (EncodingKind kind : {EncodingKind::PopSB, EncodingKind::PophSB}) {
                Encoding enc = build(kind, e, k);
                for (int a = 1; a <= k; ++a)
                    for (int b = 1; b <= k; ++b) {
                        if (std::abs(a - b) >= d) continue;
                        // encode the assignment c(1)=a, c(2)=b into the variables
                        std::vector<bool> assign(enc.cnf.nvars() + 1, false);
                        for (int i = 1; i <= k; ++i) {
                            if (i < a) assign[enc.cnf.var({VarKind::Y, 1, i})] = true;
                            if (i < b) assign[enc.cnf.var({VarKind::Y, 2, i})] = true;
                        }
                        if (kind == EncodingKind::PophSB) {
                            assign[enc.cnf.var({VarKind::X, 1, a})] = true;
                            assign[enc.cnf.var({VarKind::X, 2, b})] = true;
                        }
                        CHECK_FALSE(satisfies(enc.cnf, assign));
                    }
            }
        }
    }
}

TEST_CASE("equioptimality with the oracle on random weighted graphs") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Instance g = random_weighted(3 + seed % 4, 0.55, 4, 1000 + seed);
        int expected = exact_bcp(g).optimum;
        for (EncodingKind kind : {EncodingKind::AssSB, EncodingKind::PopSB, EncodingKind::PophSB})
            CHECK(optimum_via(kind, g) == expected);
    }
}

TEST_CASE("assignment bandwidth edge clauses match the closed pair count") {
    // per edge: k(2d-1) - (d^2-d) ordered pairs when k >= d
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Instance g = random_weighted(6, 0.5, 4, 1050 + seed);
        int k = std::max(greedy_bcp_upper_bound(g).H, g.max_distance());
        Encoding enc = encode_ass_s_b(g, k);
        long long expected = 0;
        for (const Edge& e : g.edges())
            expected += static_cast<long long>(k) * (2 * e.d - 1) -
                        (static_cast<long long>(e.d) * e.d - e.d);
        CHECK(enc.cnf.group_clauses(group::bandwidth_edge) == expected);
    }
}

TEST_CASE("ladder bandwidth clause count never exceeds k(|V|+|E|)") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Instance g = random_weighted(6, 0.5, 4, 1100 + seed);
        int k = greedy_bcp_upper_bound(g).H;
        Encoding enc = encode_pop_s_b(g, k);
        CHECK(enc.counts().base_clauses <=
              static_cast<long long>(k) * (g.num_vertices() + g.num_edges()));
    }
}
