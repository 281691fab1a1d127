#include <doctest.h>

#include "colorsat/generators.hpp"
#include "colorsat/oracle.hpp"
#include "colorsat/search.hpp"

using namespace colorsat;

TEST_CASE("chromatic numbers of known graphs") {
    CHECK(exact_gcp(cycle_graph(5)).optimum == 3);
    CHECK(exact_gcp(cycle_graph(6)).optimum == 2);
    CHECK(exact_gcp(complete_graph(4)).optimum == 4);
    CHECK(exact_gcp(petersen_graph()).optimum == 3);
    CHECK(exact_gcp(mycielski_tower(3), 12).optimum == 4);
    CHECK(exact_gcp(star_graph(5)).optimum == 2);
    CHECK(exact_gcp(Instance(5, {})).optimum == 1);
}

TEST_CASE("oracle witnesses verify") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Instance g = random_gnp(4 + seed % 5, 0.5, seed);
        auto res = exact_gcp(g);
        CHECK(verify(g, res.witness, Problem::Gcp).empty());
        CHECK(res.witness.max_color() == res.optimum);
    }
}

TEST_CASE("bandwidth optima of small instances") {
    CHECK(exact_bcp(Instance(1, {})).optimum == 1);
    CHECK(exact_bcp(Instance(2, {{1, 2, 3}})).optimum == 4);
    Instance triangle2(3, {{1, 2, 2}, {1, 3, 2}, {2, 3, 2}});
    CHECK(exact_bcp(triangle2).optimum == 5);
}

TEST_CASE("bandwidth oracle equals coloring oracle when all distances are 1") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Instance g = random_gnp(3 + seed % 5, 0.5, 100 + seed);
        CHECK(exact_bcp(g).optimum == exact_gcp(g).optimum);
    }
}

TEST_CASE("bandwidth witnesses verify") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Instance g = random_weighted(3 + seed % 5, 0.5, 4, 200 + seed);
        auto res = exact_bcp(g);
        CHECK(verify(g, res.witness, Problem::Bcp).empty());
        CHECK(res.witness.max_color() == res.optimum);
    }
}

TEST_CASE("exact max clique") {
    CHECK(exact_max_clique(complete_graph(5)).size() == 5);
    CHECK(exact_max_clique(cycle_graph(5)).size() == 2);
    CHECK(exact_max_clique(petersen_graph()).size() == 2);
    CHECK(exact_max_clique(queen_graph(3)).size() == 5);
}

TEST_CASE("oracle caps are enforced") {
    CHECK_THROWS(exact_gcp(random_gnp(13, 0.5, 1)));
    CHECK_THROWS(exact_bcp(random_gnp(9, 0.5, 1)));
}
