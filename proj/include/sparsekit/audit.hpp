// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "sparsekit/alpha.hpp"
#include "sparsekit/graph.hpp"

namespace sparsekit {

struct CofactorAudit {
    bool ok = false;
    BigInt total;
    std::vector<BigInt> subvalues;
};

// perm(G) = sum over neighbors v_i of u of perm(G - {u, v_i}), verified
// by computing all t+1 permanents.
CofactorAudit audit_cofactor(const BipartiteGraph& g, int u);

struct ExpansionAudit {
    bool ok = false;
    BigInt value;                 // perm(H)
    std::vector<BigInt> parts;    // sub-permanents of the expansion
    AlphaExpr lhs, rhs;           // the f-form relation, exact
    bool min_deg_caveat = false;  // Type II only: 4-deletion has min degree >= 3
};

// perm(H) = perm(H-{x,y1}) + perm(H-{x,y2}); f(H) = (f1+f2)/2.
ExpansionAudit audit_type1(const BipartiteGraph& h, int x);
// perm(H) = perm(H-{x,y1}) + perm(H-{x,x1,y1,y2});
// f(H) = alpha^-2 f(...) + alpha^-5 f(...).
ExpansionAudit audit_type2(const BipartiteGraph& h, int x);

struct Deg2Path3Audit {
    bool ok = false;
    BigInt value;
    BigInt part1, part2;          // the two forced 4-deletions
    bool tight_branch = false;    // d(v3) >= 3: 2 alpha^(k-4) also holds
};

// Three consecutive degree-2 vertices u1-v1-u with u's other neighbor of
// degree >= 3: perm(H) <= alpha^(k-3) + alpha^(k-5), verified exactly.
Deg2Path3Audit audit_deg2_path3(const BipartiteGraph& h, int u, int v1, int u1);

struct DisconnectionAudit {
    bool ok = false;
    std::string case_id;
    std::string branch;                            // mechanism description
    std::vector<std::pair<int, int>> forbidden;    // edges in no perfect matching
    AlphaExpr engine_bound;                        // exact derived bound on f
    AlphaExpr claim_bound;                         // the case's stated bound
    FNormal exact;
    std::vector<std::string> failures;
};

// Verify a disconnection case: identify the parity branch, the excluded
// edges, the value identity perm(h) = perm(h - excluded), and the stated
// bound. Known case ids: claim-type1-disc, claim-type2-disc1,
// claim-type2-disc2, claim-1st-step-disc, claim-g1disconnected,
// claim-g2disconnected, claim-d5g1disconnected, claim-d5g2disconnected.
DisconnectionAudit audit_disconnection(const BipartiteGraph& h, const std::vector<int>& deleted,
                                       const std::string& case_id);

struct DetC4Audit {
    bool ok = false;
    BigInt det_before, det_after;  // signed; must be equal
};

// det(G) = det(G - {u1 v1, u1 v2}) when u, v1, u1, v2 form a C4 with
// d(u) = 2 (row subtraction).
DetC4Audit audit_det_c4(const BipartiteGraph& g, int u, int v1, int u1, int v2);

struct DetWitnessRow {
    std::string id;
    BigInt det_abs;
    long long k = 0;
    bool value_ok = false;   // |det| matches the transcribed figure
    bool below_c1 = false;   // |det| * alpha^-k < c1, exact
};

std::vector<DetWitnessRow> audit_det_witnesses();

// Claim registry for the CLI: ids mirror the statement labels.
struct ClaimInfo {
    std::string id;
    std::string statement;   // the bound formula, ASCII alpha notation
    std::vector<std::string> gadgets;
};
const std::vector<ClaimInfo>& claim_registry();

struct ClaimRunResult {
    std::string id;
    bool ok = false;
    std::vector<std::string> lines;
};
// Run the named claim audit over its atlas gadgets (or a supplied graph).
ClaimRunResult run_claim_audit(const std::string& id);

}  // namespace sparsekit
