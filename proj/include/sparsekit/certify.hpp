// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sparsekit/alpha.hpp"
#include "sparsekit/bounds.hpp"
#include "sparsekit/graph.hpp"

namespace sparsekit {

// Which proof case fired at a node. Leaves carry LeafKind as well.
enum class CaseTag {
    Leaf,
    Degree1Expand,
    Cycle,
    Deg2Path3,
    TypeI,
    TypeII,
    TypeIIMinDeg4,
    Deg2Heavy,
    Disconnected,
    DisconnectionParity,
    LineSplit6,
    MinDeg4,
    ThreeRegular,
    MaxDeg4,
    MaxDeg5,
    DetC4Reduce,
    DetWitness,
};

// Structural shape of a node; the tag is the report label, the kind
// drives verification.
enum class NodeKind { Leaf, Product, Expand, EdgeDelete, LineSplit, DetC4 };

enum class LeafKind { None, Empty, Zero, K2, C6, J, CycleLeaf, Small };

struct CertNode {
    BipartiteGraph graph;
    NodeKind kind = NodeKind::Leaf;
    CaseTag tag = CaseTag::Leaf;
    LeafKind leaf = LeafKind::None;
    // Expand: {pivot}; EdgeDelete: {a, b}; LineSplit: {line vertex};
    // DetC4: {u, v1, u1, v2}
    std::vector<int> pivots;
    // per-child f-exponent: f(node) relates to children via
    // sum_i alpha^{-weights[i]} f(child_i) (Expand/EdgeDelete/LineSplit/DetC4)
    // or the plain product (Disconnected).
    std::vector<long long> weights;
    FNormal exact;     // exact (perm or |det|, k) of this node's graph
    AlphaExpr bound;   // certified upper bound on f(node)
    std::vector<std::unique_ptr<CertNode>> children;

    int subtree_size() const;
};

struct Certificate {
    TheoremMode mode = TheoremMode::Perm;
    std::unique_ptr<CertNode> root;
    bool ok = false;  // root bound <= 1, i.e. value <= alpha^k certified
};

std::string case_tag_name(CaseTag t);

// Replay the proof's case analysis on g and return the certificate.
// mode == Perm requires a C4-free graph. Throws "no-case-applies" with the
// stuck graph's text if the driver jams (impossible for valid inputs).
Certificate certify(const BipartiteGraph& g, TheoremMode mode);

// Independent checker: recomputes every node from its graph alone.
struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
};
CheckReport verify_certificate(const Certificate& cert);

std::string certificate_to_json(const Certificate& cert);

}  // namespace sparsekit
