// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "sparsekit/bigint.hpp"
#include "sparsekit/graph.hpp"

namespace sparsekit {

struct NamedGraph {
    std::string id;
    BipartiteGraph graph;
    std::string note;
    // special vertices referenced by the audits (e.g. "x", "y1", "u")
    std::map<std::string, int> marks;
};

// Known ids: k2, c<2n> (cycles, e.g. c6/c8/c10), j, c_block(t), fano,
// heawood, pg_incidence(q) for q in {2,3,4}, det_witness_62/64/65a/65b,
// and the case gadgets fig2..fig18. Throws unknown-id / bad-parameter.
NamedGraph atlas_make(const std::string& id);
std::vector<std::string> atlas_list();

struct ConjectureRow {
    int k = 0;
    int v_k = 0;              // half the cage order
    std::string graph_id;
    BigInt perm;              // exact permanent of the cage
    double growth_constant;   // perm^(1/v_k)
};

// Smallest known k-regular girth-6 bipartite graphs for k = 3, 4, 5 and
// the conjectured per-vertex growth constant.
ConjectureRow conjecture_report(int k);

}  // namespace sparsekit
