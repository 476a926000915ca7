// SPDX-License-Identifier: Apache-2.0
#include "sparsekit/enumerate.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sparsekit/certify.hpp"
#include "sparsekit/linalg.hpp"

namespace sparsekit {

namespace {

struct Dfs {
    const EnumFilter& f;
    int n;
    long long edge_max;
    std::vector<uint32_t> cols;     // chosen column patterns, row 0 = MSB
    std::vector<int> row_deg;
    long long edges = 0;
    const std::function<void(const BipartiteGraph&)>* emit;

    bool c4_ok(uint32_t cand) const {
        if (!f.require_c4_free) return true;
        for (uint32_t c : cols)
            if (std::popcount(c & cand) >= 2) return false;
        return true;
    }

    void run(int depth, uint32_t lo) {
        if (depth == n) {
            finish();
            return;
        }
        int maxcol = std::min(n, f.Delta_max);
        for (uint32_t cand = lo; cand < (1u << n); ++cand) {
            int pc = std::popcount(cand);
            if (pc > maxcol) continue;
            if (edges + pc > edge_max) continue;
            // even all-full remaining columns cannot reach edge_min
            if (edges + pc + static_cast<long long>(n - depth - 1) * maxcol < f.edge_min) continue;
            if (!c4_ok(cand)) continue;
            bool deg_ok = true;
            for (int i = 0; i < n && deg_ok; ++i)
                if ((cand >> (n - 1 - i)) & 1)
                    if (row_deg[i] + 1 > f.Delta_max) deg_ok = false;
            if (!deg_ok) continue;
            for (int i = 0; i < n; ++i)
                if ((cand >> (n - 1 - i)) & 1) ++row_deg[i];
            cols.push_back(cand);
            edges += pc;
            run(depth + 1, cand);
            edges -= pc;
            cols.pop_back();
            for (int i = 0; i < n; ++i)
                if ((cand >> (n - 1 - i)) & 1) --row_deg[i];
        }
    }

    void finish() {
        if (edges < f.edge_min || edges > edge_max) return;
        BitMatrix m(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                if ((cols[j] >> (n - 1 - i)) & 1) m.set(i, j, true);
        BipartiteGraph g(m);
        auto [lo, hi] = g.degree_bounds();
        if (lo < f.delta_min || lo > f.delta_max) return;
        if (hi < f.Delta_min || hi > f.Delta_max) return;
        if (f.require_connected && !g.is_connected()) return;
        if (!(canonical_matrix(m) == m)) return;  // not the class representative
        (*emit)(g);
    }
};

std::string checkpoint_path(const std::string& dir, const EnumFilter& f, int shards, int shard) {
    return dir + "/enum_n" + std::to_string(f.n) + "_c4" + (f.require_c4_free ? "1" : "0") +
           "_s" + std::to_string(shards) + "_" + std::to_string(shard) + ".ckpt";
}

}  // namespace

void enumerate_graphs(const EnumFilter& filter, const std::function<void(const BipartiteGraph&)>& emit,
                      int shards, int shard, const std::string& checkpoint_dir) {
    if (filter.n < 1 || filter.n > 7)
        throw std::invalid_argument("enumerate: cap-exceeded (part size must be 1..7)");
    if (filter.edge_min > (filter.edge_max < 0 ? filter.n * filter.n : filter.edge_max))
        throw std::invalid_argument("enumerate: empty edge range");
    if (shards < 1) throw std::invalid_argument("enumerate: shards must be positive");

    EnumFilter f = filter;
    const int n = f.n;
    long long edge_max = f.edge_max < 0 ? static_cast<long long>(n) * n : f.edge_max;

    uint32_t resume_after = 0;
    bool have_resume = false;
    if (!checkpoint_dir.empty() && shard >= 0) {
        std::ifstream in(checkpoint_path(checkpoint_dir, f, shards, shard));
        uint32_t v;
        if (in >> v) {
            resume_after = v;
            have_resume = true;
        }
    }

    // first column = the class prefix; a class belongs to exactly one shard
    for (uint32_t c0 = 0; c0 < (1u << n); ++c0) {
        if (shard >= 0 && static_cast<int>(c0 % static_cast<uint32_t>(shards)) != shard) continue;
        if (have_resume && c0 <= resume_after) continue;
        Dfs dfs{f, n, edge_max, {}, std::vector<int>(n, 0), 0, &emit};
        int pc = std::popcount(c0);
        if (pc <= std::min(n, f.Delta_max) && pc <= edge_max && dfs.c4_ok(c0)) {
            for (int i = 0; i < n; ++i)
                if ((c0 >> (n - 1 - i)) & 1) ++dfs.row_deg[i];
            dfs.cols.push_back(c0);
            dfs.edges = pc;
            dfs.run(1, c0);
        }
        if (!checkpoint_dir.empty() && shard >= 0) {
            std::ofstream out(checkpoint_path(checkpoint_dir, f, shards, shard));
            out << c0 << "\n";
        }
    }
}

std::vector<BipartiteGraph> enumerate_all(const EnumFilter& filter) {
    std::vector<BipartiteGraph> out;
    enumerate_graphs(filter, [&](const BipartiteGraph& g) { out.push_back(g); });
    return out;
}

ExtremalResult extremal_search(const EnumFilter& filter, TheoremMode objective) {
    ExtremalResult res;
    enumerate_graphs(filter, [&](const BipartiteGraph& g) {
        ++res.class_count;
        BigInt v;
        if (objective == TheoremMode::Det) {
            v = determinant(g.to_biadjacency());
            if (v < 0) v = -v;
        } else {
            v = permanent_ryser(g.to_biadjacency());
        }
        if (v > res.max_value) {
            res.max_value = v;
            res.witnesses.clear();
        }
        if (v == res.max_value) res.witnesses.push_back(canonical_form(g));
    });
    return res;
}

namespace {

bool is_c6_k2_union(const BipartiteGraph& g) {
    for (const auto& comp : g.components()) {
        if (comp.size() == 2) continue;  // K2 (an edge; isolated pairs cannot appear here)
        if (comp.size() != 6) return false;
        for (int v : comp)
            if (g.degree(v) != 2) return false;
    }
    return true;
}

}  // namespace

ExhaustiveReport exhaustive_verify(int n_max, TheoremMode mode, int threads) {
    ExhaustiveReport rep;
    rep.mode = mode == TheoremMode::Perm ? "perm" : "det";
    rep.n_max = n_max;
    std::map<std::pair<int, long long>, ExhaustiveCell> cells;

    for (int n = 1; n <= n_max; ++n) {
        EnumFilter f;
        f.n = n;
        f.require_c4_free = mode == TheoremMode::Perm;

        std::mutex mu;
        auto handle = [&](const BipartiteGraph& g) {
            TheoremReport t = verify_theorem(g, mode);
            Certificate cert = certify(g, mode);
            CheckReport chk = verify_certificate(cert);
            bool cert_ok = cert.ok && chk.ok;
            bool equality = t.ok && t.slack.is_zero();
            bool eq_shape_ok = !equality || mode == TheoremMode::Det || is_c6_k2_union(g);

            std::lock_guard<std::mutex> lock(mu);
            ++rep.classes;
            if (!t.ok) ++rep.violations;
            if (cert_ok)
                ++rep.certified;
            else
                ++rep.cert_failures;
            if (!eq_shape_ok) rep.equality_witnesses_ok = false;
            auto& cell = cells[{n, t.k}];
            cell.n = n;
            cell.k = t.k;
            if (cell.classes == 0 || alpha_compare(t.slack, cell.min_slack) == Order::LT)
                cell.min_slack = t.slack;
            ++cell.classes;
            if (t.value > cell.max_value) cell.max_value = t.value;
            if (equality) ++cell.equality_classes;
        };

        if (threads <= 1) {
            enumerate_graphs(f, handle);
        } else {
            std::vector<std::thread> pool;
            for (int s = 0; s < threads; ++s)
                pool.emplace_back([&, s]() { enumerate_graphs(f, handle, threads, s); });
            for (auto& t : pool) t.join();
        }
    }
    for (auto& [key, cell] : cells) rep.cells.push_back(cell);
    return rep;
}

}  // namespace sparsekit
