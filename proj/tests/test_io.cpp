// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "sparsekit/atlas.hpp"
#include "sparsekit/graph.hpp"

using namespace sparsekit;

TEST_SUITE("io") {

TEST_CASE("bi-adjacency text round trip is bit exact") {
    std::mt19937_64 rng(808);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + static_cast<int>(rng() % 8);
        BitMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.set(i, j, rng() & 1);
        std::string text = m.to_text();
        CHECK(BitMatrix::parse_text(text) == m);
        CHECK(BitMatrix::parse_text(text).to_text() == text);
    }
}

TEST_CASE("bi-adjacency parse errors carry positions") {
    CHECK_THROWS_WITH_AS(BitMatrix::parse_text("x\n"), doctest::Contains("line 1"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(BitMatrix::parse_text("2\n10\n1x\n"), doctest::Contains("line 3"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(BitMatrix::parse_text("2\n101\n01\n"), doctest::Contains("line 2"),
                         std::invalid_argument);
}

TEST_CASE("graph6 with part-size header") {
    // single edge on 2 vertices: standard graph6 string "A_"
    BipartiteGraph k2 = parse_graph6_headered("n=1\nA_\n");
    CHECK(k2.part_size() == 1);
    CHECK(k2.e() == 1);
    CHECK(is_named(k2, NamedKind::K2));

    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + static_cast<int>(rng() % 6);
        BitMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.set(i, j, rng() & 1);
        BipartiteGraph g(m);
        CHECK(parse_graph6_headered(write_graph6_headered(g)) == g);
    }

    CHECK_THROWS(parse_graph6_headered("A_\n"));        // missing header
    CHECK_THROWS(parse_graph6_headered("n=2\nA_\n"));   // header disagrees with size
    // an edge inside one side violates the bipartition: triangle on 4 vertices
    CHECK_THROWS(parse_graph6_headered("n=2\nCV\n"));
}

TEST_CASE("round trip through the named atlas graphs") {
    for (const char* id : {"c6", "j", "heawood"}) {
        BipartiteGraph g = atlas_make(id).graph;
        CHECK(parse_graph6_headered(write_graph6_headered(g)) == g);
    }
}

}  // TEST_SUITE
