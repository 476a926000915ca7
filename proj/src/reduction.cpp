// SPDX-License-Identifier: Apache-2.0
#include "sparsekit/reduction.hpp"

#include <deque>

namespace sparsekit {

namespace {

// Mutable view over a graph: dead vertices keep their ids but lose all
// edges, so recorded step ids stay valid in the original id space.
struct WorkGraph {
    int n;
    BitMatrix m;
    std::vector<char> alive;

    explicit WorkGraph(const BipartiteGraph& g)
        : n(g.part_size()), m(g.to_biadjacency()), alive(2 * g.part_size(), 1) {}

    bool is_left(int v) const { return v < n; }

    int degree(int v) const {
        if (!alive[v]) return 0;
        return v < n ? m.row_popcount(v) : m.col_popcount(v - n);
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        if (v < n) {
            for (int j = 0; j < n; ++j)
                if (m.get(v, j)) out.push_back(n + j);
        } else {
            for (int i = 0; i < n; ++i)
                if (m.get(i, v - n)) out.push_back(i);
        }
        return out;
    }

    void kill(int v) {
        alive[v] = 0;
        if (v < n) {
            for (int j = 0; j < n; ++j) m.set(v, j, false);
        } else {
            for (int i = 0; i < n; ++i) m.set(i, v - n, false);
        }
    }

    void remove_edge(int a, int b) {
        int l = is_left(a) ? a : b;
        int r = (is_left(a) ? b : a) - n;
        m.set(l, r, false);
    }

    bool has_edge(int a, int b) const {
        if (is_left(a) == is_left(b)) return false;
        int l = is_left(a) ? a : b;
        int r = (is_left(a) ? b : a) - n;
        return m.get(l, r);
    }

    // components over alive vertices; returns the first side-unbalanced one
    // if any, else nullopt
    std::optional<std::vector<int>> unbalanced_component() const {
        std::vector<char> seen(2 * n, 0);
        for (int s = 0; s < 2 * n; ++s) {
            if (!alive[s] || seen[s]) continue;
            std::vector<int> comp;
            std::deque<int> queue{s};
            seen[s] = 1;
            int left = 0, right = 0;
            while (!queue.empty()) {
                int x = queue.front();
                queue.pop_front();
                comp.push_back(x);
                (is_left(x) ? left : right)++;
                for (int y : neighbors(x))
                    if (!seen[y]) {
                        seen[y] = 1;
                        queue.push_back(y);
                    }
            }
            if (left != right) return comp;
        }
        return std::nullopt;
    }

    int first_degree1() const {
        for (int v = 0; v < 2 * n; ++v)
            if (alive[v] && degree(v) == 1) return v;
        return -1;
    }

    BipartiteGraph materialize() const {
        std::vector<int> drop_rows, drop_cols;
        for (int v = 0; v < 2 * n; ++v)
            if (!alive[v]) (v < n ? drop_rows : drop_cols).push_back(v < n ? v : v - n);
        return BipartiteGraph(m.without(drop_rows, drop_cols));
    }
};

std::optional<ParityWitness> witness_on(WorkGraph w, int a, int b) {
    ParityWitness out;
    w.kill(a);
    w.kill(b);
    while (true) {
        if (auto comp = w.unbalanced_component()) {
            out.component = *comp;
            return out;
        }
        int v = w.first_degree1();
        if (v < 0) return std::nullopt;
        int nb = w.neighbors(v)[0];
        out.forced.push_back({v, nb});
        w.kill(v);
        w.kill(nb);
    }
}

}  // namespace

std::optional<ParityWitness> forbidden_edge_witness(const BipartiteGraph& g, int a, int b) {
    if (!g.has_edge(a, b)) return std::nullopt;
    return witness_on(WorkGraph(g), a, b);
}

std::optional<std::pair<int, int>> find_forbidden_edge(const BipartiteGraph& g) {
    WorkGraph w(g);
    int n = g.part_size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (w.m.get(i, j) && witness_on(w, i, n + j)) return std::make_pair(i, n + j);
    return std::nullopt;
}

Reduction reduce_graph(const BipartiteGraph& g) {
    Reduction red;
    WorkGraph w(g);
    while (true) {
        if (w.unbalanced_component()) {
            red.zero = true;
            return red;
        }
        int v = w.first_degree1();
        if (v >= 0) {
            int nb = w.neighbors(v)[0];
            ReductionStep step;
            step.kind = ReductionStep::Kind::ForcedPair;
            step.a = v;
            step.b = nb;
            step.weight = w.degree(nb) - 1;
            red.steps.push_back(step);
            red.weight += step.weight;
            w.kill(v);
            w.kill(nb);
            continue;
        }
        bool removed = false;
        for (int i = 0; i < w.n && !removed; ++i)
            for (int j = 0; j < w.n && !removed; ++j) {
                if (!w.m.get(i, j)) continue;
                if (witness_on(w, i, w.n + j)) {
                    ReductionStep step;
                    step.kind = ReductionStep::Kind::ForbiddenEdge;
                    step.a = i;
                    step.b = w.n + j;
                    step.weight = 1;
                    red.steps.push_back(step);
                    red.weight += 1;
                    w.remove_edge(i, w.n + j);
                    removed = true;
                }
            }
        if (!removed) break;
    }
    red.result = w.materialize();
    return red;
}

}  // namespace sparsekit
