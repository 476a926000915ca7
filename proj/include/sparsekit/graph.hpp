// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sparsekit/bitmatrix.hpp"

namespace sparsekit {

// Balanced bipartite graph over the bi-adjacency matrix: left vertex i is
// row i, right vertex j is column j. Vertex ids: 0..n-1 left, n..2n-1 right.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    explicit BipartiteGraph(BitMatrix adj) : adj_(std::move(adj)) {}
    // Edges as (left index, right index) pairs.
    BipartiteGraph(int n, const std::vector<std::pair<int, int>>& edges);

    static BipartiteGraph from_biadjacency(const BitMatrix& m) { return BipartiteGraph(m); }
    const BitMatrix& to_biadjacency() const { return adj_; }

    int part_size() const { return adj_.n(); }
    int v() const { return 2 * adj_.n(); }
    long long e() const { return adj_.ones_count(); }
    long long excess_k() const { return e() - adj_.n(); }

    bool is_left(int vertex) const { return vertex < adj_.n(); }
    bool has_edge(int a, int b) const;
    int degree(int vertex) const;
    std::vector<int> neighbors(int vertex) const;

    std::pair<int, int> degree_bounds() const;  // (delta, Delta); (0,0) when v = 0
    std::vector<int> degree_sequence() const;   // all 2n degrees, vertex order

    bool is_c4_free() const;
    std::vector<std::vector<int>> components() const;
    bool is_connected() const;
    // Length of a shortest cycle, or 0 when the graph is a forest.
    int girth() const;

    BipartiteGraph delete_vertices(const std::vector<int>& vertices) const;
    BipartiteGraph delete_edge(int a, int b) const;

    bool operator==(const BipartiteGraph& o) const = default;

private:
    BitMatrix adj_;
};

enum class VertexClassKind { TypeI, TypeII, Neither };

struct VertexClass {
    VertexClassKind kind = VertexClassKind::Neither;
    // Type I: y1, y2 = the two degree-3 neighbors.
    // Type II: y1 (degree-2 neighbor), y2 (degree-3 neighbor),
    //          x1 (the other neighbor of y1, degree 3, not adjacent to y2).
    int y1 = -1, y2 = -1, x1 = -1;
};

// Classification of a degree-2 vertex per the expansion machinery; any
// other vertex is Neither.
VertexClass classify_vertex(const BipartiteGraph& g, int x);

// Lexicographically least path (u, v1, u1) of three consecutive
// degree-2 vertices, if one exists.
std::optional<std::array<int, 3>> find_deg2_path3(const BipartiteGraph& g);

enum class NamedKind { K2, C6, J };
bool is_named(const BipartiteGraph& g, NamedKind which);

// Canonical byte string: equal iff the graphs are isomorphic as bipartite
// graphs with the two sides swappable. Iterative refinement plus
// backtracking over row orders; exact lexicographic minimum.
std::string canonical_form(const BipartiteGraph& g);
// The canonical representative matrix itself (columns in nondecreasing
// bit-vector order, rows chosen to minimize the row-major bit string).
BitMatrix canonical_matrix(const BitMatrix& m);

// graph6 input with an explicit part-size header line "n=<int>" on the
// line before the graph6 string; edges must respect the bipartition
// (0..n-1 | n..2n-1).
BipartiteGraph parse_graph6_headered(const std::string& text);
std::string write_graph6_headered(const BipartiteGraph& g);

}  // namespace sparsekit
