// SPDX-License-Identifier: Apache-2.0
//
// Parity and forcing engine. An edge is "forbidden" when no perfect
// matching uses it; the structural witness is that deleting its endpoints
// and then repeatedly removing forced degree-1 pairs leaves a component
// with unequal sides. Forbidden-edge deletion and forced-pair deletion
// both preserve the permanent (and |det|) exactly.
#pragma once

#include <optional>
#include <vector>

#include "sparsekit/graph.hpp"

namespace sparsekit {

struct ParityWitness {
    // forced degree-1 pairs applied during the closure, in order
    std::vector<std::pair<int, int>> forced;
    // the side-unbalanced component that ends the closure
    std::vector<int> component;
};

// Witness that edge (a, b) of g lies in no perfect matching, if the
// parity closure can certify it.
std::optional<ParityWitness> forbidden_edge_witness(const BipartiteGraph& g, int a, int b);

// Lexicographically least forbidden edge of g, if any.
std::optional<std::pair<int, int>> find_forbidden_edge(const BipartiteGraph& g);

struct ReductionStep {
    enum class Kind { ForbiddenEdge, ForcedPair } kind;
    int a = -1, b = -1;     // edge / (degree-1 vertex, its neighbor)
    long long weight = 0;   // f-exponent drop: 1 for edges, deg(b)-1 for pairs
};

struct Reduction {
    std::vector<ReductionStep> steps;
    long long weight = 0;   // sum of step weights
    bool zero = false;      // permanent provably 0
    BipartiteGraph result;  // the reduced graph (meaningless when zero)
};

// Apply forced pairs and forbidden-edge deletions to a fixpoint:
// perm(g) = alpha^{-weight} * perm(result) in f-normalization, exactly.
Reduction reduce_graph(const BipartiteGraph& g);

}  // namespace sparsekit
