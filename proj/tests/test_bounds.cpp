#include <doctest.h>

#include "colorsat/bounds.hpp"
#include "colorsat/generators.hpp"
#include "colorsat/oracle.hpp"
#include "colorsat/search.hpp"

using namespace colorsat;

TEST_CASE("bandwidth greedy on a single heavy edge") {
    auto gb = greedy_bcp_upper_bound(Instance(2, {{1, 2, 3}}));
    CHECK(gb.H == 4);
    CHECK(gb.witness.color(1) == 1);
    CHECK(gb.witness.color(2) == 4);
}

TEST_CASE("bandwidth greedy on a distance-2 triangle") {
    Instance tri(3, {{1, 2, 2}, {1, 3, 2}, {2, 3, 2}});
    auto gb = greedy_bcp_upper_bound(tri);
    CHECK(gb.H == 5);
    CHECK(gb.witness.color(1) == 1);
    CHECK(gb.witness.color(2) == 3);
    CHECK(gb.witness.color(3) == 5);
}

TEST_CASE("isolated vertices need one color") {
    CHECK(greedy_bcp_upper_bound(Instance(4, {})).H == 1);
    CHECK(greedy_gcp_upper_bound(Instance(5, {})).H == 1);
}

TEST_CASE("coloring greedy on known graphs") {
    CHECK(greedy_gcp_upper_bound(complete_graph(4)).H == 4);
    CHECK(greedy_gcp_upper_bound(cycle_graph(5)).H == 3);
}

TEST_CASE("greedy witnesses are valid and never beat the oracle") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Instance g = random_weighted(3 + seed % 5, 0.5, 4, 300 + seed);
        auto gb = greedy_bcp_upper_bound(g);
        CHECK(verify(g, gb.witness, Problem::Bcp).empty());
        CHECK(gb.witness.max_color() == gb.H);
        CHECK(gb.H >= exact_bcp(g).optimum);
    }
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Instance g = random_gnp(4 + seed % 6, 0.5, 400 + seed);
        auto gb = greedy_gcp_upper_bound(g);
        CHECK(verify(g, gb.witness, Problem::Gcp).empty());
        CHECK(gb.H >= exact_gcp(g).optimum);
    }
}
