// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sparsekit/bounds.hpp"
#include "sparsekit/graph.hpp"

namespace sparsekit {

struct EnumFilter {
    int n = 1;
    long long edge_min = 0;
    long long edge_max = -1;  // -1 means n*n
    bool require_c4_free = false;
    bool require_connected = false;
    int delta_min = 0, delta_max = 1 << 20;  // minimum-degree range
    int Delta_min = 0, Delta_max = 1 << 20;  // maximum-degree range
};

// Exactly one representative per isomorphism class (sides swappable),
// in deterministic order: a candidate is emitted iff it equals its own
// canonical matrix. Columns are grown in nondecreasing bit-vector order,
// which is the shape canonical matrices have. Hard cap n <= 7.
//
// Sharding partitions classes by the first column's bit pattern; the
// shard outputs concatenated in first-column order reproduce the
// single-shard stream exactly. checkpoint_dir, when nonempty, records the
// last completed first-column prefix per shard and resumes after it.
void enumerate_graphs(const EnumFilter& filter,
                      const std::function<void(const BipartiteGraph&)>& emit, int shards = 1,
                      int shard = -1, const std::string& checkpoint_dir = "");

std::vector<BipartiteGraph> enumerate_all(const EnumFilter& filter);

struct ExtremalResult {
    BigInt max_value = -1;
    std::vector<std::string> witnesses;  // canonical forms of all maximizers
    long long class_count = 0;
};

ExtremalResult extremal_search(const EnumFilter& filter, TheoremMode objective);

struct ExhaustiveCell {
    int n = 0;
    long long k = 0;
    long long classes = 0;
    BigInt max_value = 0;
    AlphaExpr min_slack;          // smallest alpha^k - value over the cell
    long long equality_classes = 0;
};

struct ExhaustiveReport {
    std::string mode;
    int n_max = 0;
    long long classes = 0;
    long long violations = 0;
    long long certified = 0;       // certificates built and re-verified
    long long cert_failures = 0;
    bool equality_witnesses_ok = true;  // perm equality holders are C6/K2 unions
    std::vector<ExhaustiveCell> cells;
};

// Theorem verification over every class with part size <= n_max
// (mode=perm restricts to C4-free classes), plus a certificate for every
// class, plus the equality-witness census.
ExhaustiveReport exhaustive_verify(int n_max, TheoremMode mode, int threads = 1);

}  // namespace sparsekit
