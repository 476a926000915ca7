// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "sparsekit/atlas.hpp"
#include "sparsekit/audit.hpp"
#include "sparsekit/bounds.hpp"
#include "sparsekit/linalg.hpp"

using namespace sparsekit;

TEST_SUITE("audit") {

TEST_CASE("cofactor expansion identity") {
    auto c6 = audit_cofactor(atlas_make("c6").graph, 0);
    CHECK(c6.ok);
    CHECK(c6.total == 2);
    REQUIRE(c6.subvalues.size() == 2);
    CHECK(c6.subvalues[0] == 1);
    CHECK(c6.subvalues[1] == 1);

    // J along a degree-3 vertex
    BipartiteGraph j = atlas_make("j").graph;
    int deg3 = -1;
    for (int v = 0; v < j.v(); ++v)
        if (j.degree(v) == 3) deg3 = v;
    auto ja = audit_cofactor(j, deg3);
    CHECK(ja.ok);
    CHECK(ja.total == 3);

    // Heawood: vertex-transitively 24 = 8 + 8 + 8
    BipartiteGraph hw = atlas_make("heawood").graph;
    for (int v = 0; v < hw.v(); ++v) {
        auto a = audit_cofactor(hw, v);
        CHECK(a.ok);
        CHECK(a.total == 24);
        for (const auto& s : a.subvalues) CHECK(s == 8);
    }

    // empty-product convention at the recursion floor
    auto k2 = audit_cofactor(atlas_make("k2").graph, 0);
    CHECK(k2.ok);
    CHECK(k2.total == 1);
    CHECK(k2.subvalues == std::vector<BigInt>{1});
}

TEST_CASE("cofactor identity fuzz") {
    std::mt19937_64 rng(1234);
    for (int t = 0; t < 10000; ++t) {
        int n = 1 + static_cast<int>(rng() % 6);
        BitMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.set(i, j, rng() & 1);
        BipartiteGraph g(m);
        int u = static_cast<int>(rng() % (2 * n));
        if (g.degree(u) < 1) continue;
        CHECK(audit_cofactor(g, u).ok);
    }
}

TEST_CASE("type I expansion audits") {
    NamedGraph fig2 = atlas_make("fig2");
    auto a = audit_type1(fig2.graph, fig2.marks.at("x"));
    CHECK(a.ok);
    CHECK(alpha_compare(a.lhs, a.rhs) == Order::EQ);  // the relation is an equality

    NamedGraph fig4 = atlas_make("fig4");
    CHECK(audit_type1(fig4.graph, fig4.marks.at("z")).ok);

    CHECK_THROWS(audit_type1(atlas_make("c6").graph, 0));
}

TEST_CASE("type II expansion audits") {
    NamedGraph fig3 = atlas_make("fig3");
    auto a = audit_type2(fig3.graph, fig3.marks.at("x"));
    CHECK(a.ok);
    CHECK(alpha_compare(a.lhs, a.rhs) == Order::EQ);

    NamedGraph fig11 = atlas_make("fig11");
    auto b = audit_type2(fig11.graph, fig11.marks.at("x2"));
    CHECK(b.ok);
    // the chain bound from the even/even analysis
    AlphaExpr chain = AlphaExpr::alpha_pow(-5) + AlphaExpr::alpha_pow(-6) + AlphaExpr::alpha_pow(-7);
    CHECK(compare_f(f_value(fig11.graph), chain) != Order::GT);
    CHECK(alpha_compare(chain, alpha_c1()) != Order::GT);

    NamedGraph fig12a = atlas_make("fig12a");
    auto c = audit_type2(fig12a.graph, fig12a.marks.at("x"));
    CHECK(c.ok);
    CHECK(c.min_deg_caveat);  // the 4-deletion keeps minimum degree 3

    CHECK_THROWS(audit_type2(atlas_make("c8").graph, 0));
}

TEST_CASE("degree-2 path audits") {
    NamedGraph fig2 = atlas_make("fig2");
    // r2-r3-r4 run: u = r2 (left 1), v1 = r3 (right 1), u1 = r4 (left 2)
    auto a = audit_deg2_path3(fig2.graph, 1, 5 + 1, 2);
    CHECK(a.ok);
    CHECK(a.value == a.part1 + a.part2);

    // cycles violate the far-degree hypothesis
    CHECK_THROWS(audit_deg2_path3(atlas_make("c8").graph, 0, 4, 1));
}

TEST_CASE("disconnection audits over the gadget hosts") {
    struct Row {
        const char* claim;
        const char* gadget;
        const char* a;
        const char* b;
    };
    const Row rows[] = {
        {"claim-type1-disc", "fig5", "x", "y1"},
        {"claim-type1-disc", "fig6", "x", "y1"},
        {"claim-type2-disc1", "fig7", "x", "y1"},
        {"claim-1st-step-disc", "fig13", "u", "v1"},
        {"claim-g1disconnected", "fig14", "u", "v1"},
        {"claim-g2disconnected", "fig15", "u", "v1"},
        {"claim-g2disconnected", "fig16", "u", "v1"},
        {"claim-d5g1disconnected", "fig17", "u", "v1"},
        {"claim-d5g2disconnected", "fig18", "u", "v1"},
    };
    for (const auto& row : rows) {
        CAPTURE(row.claim);
        CAPTURE(row.gadget);
        NamedGraph ng = atlas_make(row.gadget);
        auto a = audit_disconnection(ng.graph, {ng.marks.at(row.a), ng.marks.at(row.b)}, row.claim);
        CHECK(a.ok);
        CHECK(compare_f(a.exact, a.claim_bound) != Order::GT);
    }

    // the 4-deletion cases pass the full deleted set
    for (const char* gadget : {"fig8", "fig9", "fig11"}) {
        CAPTURE(gadget);
        NamedGraph ng = atlas_make(gadget);
        auto cls = classify_vertex(ng.graph, ng.marks.at("x"));
        REQUIRE(cls.kind == VertexClassKind::TypeII);
        auto a = audit_disconnection(ng.graph, {ng.marks.at("x"), cls.x1, cls.y1, cls.y2},
                                     "claim-type2-disc2");
        CHECK(a.ok);
    }

    CHECK_THROWS(audit_disconnection(atlas_make("c6").graph, {0, 3}, "claim-type1-disc"));
    CHECK_THROWS(audit_disconnection(atlas_make("fig5").graph, {0, 5}, "claim-bogus"));
}

TEST_CASE("forced edges detected in the odd branch") {
    NamedGraph fig5 = atlas_make("fig5");
    auto a = audit_disconnection(fig5.graph, {fig5.marks.at("x"), fig5.marks.at("y1")},
                                 "claim-type1-disc");
    CHECK(a.ok);
    CHECK_FALSE(a.forbidden.empty());  // some edge is excluded from every matching
}

TEST_CASE("determinant C4 reduction") {
    BipartiteGraph k22(BitMatrix::from_rows({"11", "11"}));
    auto a = audit_det_c4(k22, 0, 2, 1, 3);
    CHECK(a.ok);
    CHECK(a.det_before == 0);

    NamedGraph fig19 = atlas_make("fig19");
    auto b = audit_det_c4(fig19.graph, fig19.marks.at("x"), fig19.marks.at("y2"),
                          fig19.marks.at("u1"), fig19.marks.at("y1"));
    CHECK(b.ok);

    // random C4-bearing instances vs the determinant oracle
    std::mt19937_64 rng(321);
    int found = 0;
    while (found < 30) {
        BitMatrix m(8);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) m.set(i, j, (rng() % 10) < 3);
        BipartiteGraph g(m);
        bool done = false;
        for (int u = 0; u < g.v() && !done; ++u) {
            if (g.degree(u) != 2) continue;
            auto nb = g.neighbors(u);
            for (int u1 = 0; u1 < g.v() && !done; ++u1) {
                if (u1 == u || g.is_left(u1) != g.is_left(u)) continue;
                if (g.has_edge(u1, nb[0]) && g.has_edge(u1, nb[1])) {
                    CHECK(audit_det_c4(g, u, nb[0], u1, nb[1]).ok);
                    ++found;
                    done = true;
                }
            }
        }
    }

    CHECK_THROWS(audit_det_c4(atlas_make("c6").graph, 0, 3, 1, 4));
}

TEST_CASE("determinant witness table") {
    auto rows = audit_det_witnesses();
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].det_abs == 5);
    CHECK(rows[1].det_abs == 4);
    CHECK(rows[2].det_abs == 5);
    CHECK(rows[3].det_abs == 6);
    for (const auto& r : rows) {
        CAPTURE(r.id);
        CHECK(r.value_ok);
        CHECK(r.below_c1);
    }
}

TEST_CASE("claim registry runs clean") {
    for (const auto& info : claim_registry()) {
        CAPTURE(info.id);
        auto res = run_claim_audit(info.id);
        CHECK(res.ok);
    }
    CHECK_THROWS(run_claim_audit("claim-nope"));
}

}  // TEST_SUITE
