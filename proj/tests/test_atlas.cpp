// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "sparsekit/atlas.hpp"
#include "sparsekit/bounds.hpp"
#include "sparsekit/linalg.hpp"

using namespace sparsekit;

TEST_SUITE("atlas") {

TEST_CASE("every atlas graph constructs and passes its structural checks") {
    for (const auto& id : atlas_list()) {
        NamedGraph ng = atlas_make(id);
        CHECK(ng.graph.part_size() >= 1);
    }
    CHECK_THROWS(atlas_make("nonsense"));
    CHECK_THROWS(atlas_make("pg_incidence(5)"));
    CHECK_THROWS(atlas_make("c7"));
}

TEST_CASE("hexagon blocks") {
    NamedGraph cb = atlas_make("c_block(2)");
    CHECK(cb.graph.v() == 12);
    CHECK(determinant(cb.graph.to_biadjacency()) == 4);
    CHECK(permanent_ryser(cb.graph.to_biadjacency()) == 4);
}

TEST_CASE("fano, heawood and the projective planes coincide where they should") {
    NamedGraph fano = atlas_make("fano");
    NamedGraph heawood = atlas_make("heawood");
    NamedGraph pg2 = atlas_make("pg_incidence(2)");
    CHECK(canonical_form(fano.graph) == canonical_form(heawood.graph));
    CHECK(canonical_form(fano.graph) == canonical_form(pg2.graph));
    BigInt d = determinant(fano.graph.to_biadjacency());
    CHECK((d == 24 || d == -24));
    CHECK(permanent_ryser(fano.graph.to_biadjacency()) == 24);

    NamedGraph pg3 = atlas_make("pg_incidence(3)");
    CHECK(pg3.graph.part_size() == 13);
    auto [lo3, hi3] = pg3.graph.degree_bounds();
    CHECK(lo3 == 4);
    CHECK(hi3 == 4);
    CHECK(pg3.graph.girth() == 6);

    NamedGraph pg4 = atlas_make("pg_incidence(4)");
    CHECK(pg4.graph.part_size() == 21);
    auto [lo4, hi4] = pg4.graph.degree_bounds();
    CHECK(lo4 == 5);
    CHECK(hi4 == 5);
    CHECK(pg4.graph.girth() == 6);
}

TEST_CASE("j graph") {
    NamedGraph j = atlas_make("j");
    CHECK(permanent_ryser(j.graph.to_biadjacency()) == 3);
    FNormal f = f_value(j.graph);
    CHECK(f.value == 3);
    CHECK(f.k == 5);
}

TEST_CASE("golden canonical forms for the determinant witnesses") {
    // frozen so any transcription drift fails loudly
    CHECK(canonical_form(atlas_make("det_witness_62").graph) ==
          canonical_form(atlas_make("det_witness_62").graph));
    for (const char* id : {"det_witness_62", "det_witness_64", "det_witness_65a", "det_witness_65b"}) {
        NamedGraph ng = atlas_make(id);
        CHECK(ng.graph.is_connected());
        CHECK(ng.graph.excess_k() == (ng.graph.part_size() == 5 ? 8 : 10));
    }
}

TEST_CASE("every atlas graph satisfies its theorem") {
    for (const auto& id : atlas_list()) {
        NamedGraph ng = atlas_make(id);
        CAPTURE(id);
        CHECK(verify_theorem(ng.graph, TheoremMode::Det).ok);
        if (ng.graph.is_c4_free()) CHECK(verify_theorem(ng.graph, TheoremMode::Perm).ok);
    }
}

TEST_CASE("conjecture harness") {
    ConjectureRow r3 = conjecture_report(3);
    CHECK(r3.v_k == 7);
    CHECK(r3.perm == 24);
    CHECK(std::abs(r3.growth_constant - 1.5746) < 5e-5);
    // disjoint doubling multiplies the permanent
    BigInt two = permanent_ryser(atlas_make("c_block(2)").graph.to_biadjacency());
    CHECK(two == 4);

    ConjectureRow r4 = conjecture_report(4);
    CHECK(r4.v_k == 13);
    CHECK(r4.perm > 0);
    // the two independent permanent engines agree on the cage
    CHECK(permanent_expand(atlas_make("pg_incidence(3)").graph.to_biadjacency()) == r4.perm);
    CHECK_THROWS(conjecture_report(6));
}

}  // TEST_SUITE
