#include <doctest.h>

#include <stdexcept>

#include "colorsat/generators.hpp"
#include "colorsat/instance.hpp"

using namespace colorsat;

TEST_CASE("parse minimal path") {
    Instance inst = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3");
    CHECK(inst.num_vertices() == 3);
    CHECK(inst.num_edges() == 2);
    CHECK(inst.distance(1, 2) == 1);
    CHECK(inst.distance(2, 3) == 1);
    CHECK(inst.distance(1, 3) == 0);
    CHECK_FALSE(inst.weighted());
}

TEST_CASE("parse weighted edge") {
    Instance inst = parse_dimacs("p edge 2 1\ne 1 2 3");
    CHECK(inst.num_vertices() == 2);
    CHECK(inst.distance(1, 2) == 3);
    CHECK(inst.weighted());
    CHECK(inst.avg_distance() == doctest::Approx(3.0));
}

TEST_CASE("parse accepts comments, n-lines, and 'edges' keyword") {
    Instance inst = parse_dimacs("c a comment\np edges 3 1\nn 1 5\ne 1 3\n");
    CHECK(inst.num_vertices() == 3);
    CHECK(inst.num_edges() == 1);
    CHECK(inst.adjacent(1, 3));
}

TEST_CASE("duplicate edges keep the maximum distance") {
    Instance inst = parse_dimacs("p edge 2 2\ne 1 2 2\ne 2 1 5");
    CHECK(inst.num_edges() == 1);
    CHECK(inst.distance(1, 2) == 5);
}

TEST_CASE("edge count mismatch is a warning, not an error") {
    std::vector<std::string> warnings;
    Instance inst = parse_dimacs("p edge 2 7\ne 1 2", &warnings);
    CHECK(inst.num_edges() == 1);
    REQUIRE(warnings.size() == 1);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_dimacs("e 1 2"), std::runtime_error);              // edge before header
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3"), std::runtime_error);  // out of range
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 1"), std::runtime_error);  // self loop
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 2 0"), std::runtime_error);  // d <= 0
    CHECK_THROWS_AS(parse_dimacs("p foo 2 1"), std::runtime_error);
    CHECK_THROWS_AS(parse_dimacs(""), std::runtime_error);
}

TEST_CASE("write emits canonical text") {
    CHECK(write_dimacs(Instance(2, {{1, 2, 1}})) == "p edge 2 1\ne 1 2\n");
    CHECK(write_dimacs(Instance(2, {{1, 2, 3}})) == "p edge 2 1\ne 1 2 3\n");
}

TEST_CASE("round trip is the identity on canonical instances") {
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
        Instance inst = random_weighted(9, 0.4, 4, seed);
        Instance back = parse_dimacs(write_dimacs(inst));
        REQUIRE(back.num_vertices() == inst.num_vertices());
        REQUIRE(back.num_edges() == inst.num_edges());
        for (int i = 0; i < inst.num_edges(); ++i) {
            CHECK(back.edges()[i].u == inst.edges()[i].u);
            CHECK(back.edges()[i].v == inst.edges()[i].v);
            CHECK(back.edges()[i].d == inst.edges()[i].d);
        }
    }
}

TEST_CASE("coloring helpers") {
    Coloring c(3);
    CHECK_FALSE(c.total());
    c.set(1, 2);
    c.set(2, 1);
    c.set(3, 4);
    CHECK(c.total());
    CHECK(c.max_color() == 4);
}
