// SPDX-License-Identifier: Apache-2.0
#include "sparsekit/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sparsekit {

BipartiteGraph::BipartiteGraph(int n, const std::vector<std::pair<int, int>>& edges) : adj_(n) {
    for (auto [l, r] : edges) {
        if (l < 0 || l >= n || r < 0 || r >= n)
            throw std::invalid_argument("BipartiteGraph: edge endpoint out of range");
        adj_.set(l, r, true);
    }
}

bool BipartiteGraph::has_edge(int a, int b) const {
    if (is_left(a) == is_left(b)) return false;
    int l = is_left(a) ? a : b;
    int r = is_left(a) ? b : a;
    return adj_.get(l, r - adj_.n());
}

int BipartiteGraph::degree(int vertex) const {
    int n = adj_.n();
    return vertex < n ? adj_.row_popcount(vertex) : adj_.col_popcount(vertex - n);
}

std::vector<int> BipartiteGraph::neighbors(int vertex) const {
    int n = adj_.n();
    std::vector<int> out;
    if (vertex < n) {
        for (int j = 0; j < n; ++j)
            if (adj_.get(vertex, j)) out.push_back(n + j);
    } else {
        for (int i = 0; i < n; ++i)
            if (adj_.get(i, vertex - n)) out.push_back(i);
    }
    return out;
}

std::pair<int, int> BipartiteGraph::degree_bounds() const {
    if (v() == 0) return {0, 0};
    int lo = 1 << 30, hi = 0;
    for (int x = 0; x < v(); ++x) {
        int d = degree(x);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

std::vector<int> BipartiteGraph::degree_sequence() const {
    std::vector<int> out(v());
    for (int x = 0; x < v(); ++x) out[x] = degree(x);
    return out;
}

bool BipartiteGraph::is_c4_free() const {
    int n = adj_.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int common = 0;
            for (int w = 0; w < adj_.words_per_row(); ++w)
                common += std::popcount(adj_.row_word(i, w) & adj_.row_word(j, w));
            if (common >= 2) return false;
        }
    return true;
}

std::vector<std::vector<int>> BipartiteGraph::components() const {
    int total = v();
    std::vector<int> comp(total, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < total; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<int> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            out[id].push_back(x);
            for (int y : neighbors(x))
                if (comp[y] < 0) {
                    comp[y] = id;
                    queue.push_back(y);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool BipartiteGraph::is_connected() const { return components().size() <= 1; }

int BipartiteGraph::girth() const {
    int best = 0;
    for (int s = 0; s < v(); ++s) {
        std::vector<int> dist(v(), -1), parent(v(), -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (y != parent[x]) {
                    int len = dist[x] + dist[y] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

BipartiteGraph BipartiteGraph::delete_vertices(const std::vector<int>& vertices) const {
    int n = adj_.n();
    std::vector<int> rows, cols;
    for (int x : vertices) {
        if (x < 0 || x >= v()) throw std::invalid_argument("delete_vertices: vertex out of range");
        if (x < n)
            rows.push_back(x);
        else
            cols.push_back(x - n);
    }
    if (rows.size() != cols.size())
        throw std::invalid_argument("delete_vertices: unbalanced-deletion");
    return BipartiteGraph(adj_.without(rows, cols));
}

BipartiteGraph BipartiteGraph::delete_edge(int a, int b) const {
    if (!has_edge(a, b)) throw std::invalid_argument("delete_edge: no such edge");
    int n = adj_.n();
    int l = is_left(a) ? a : b;
    int r = (is_left(a) ? b : a) - n;
    BitMatrix m = adj_;
    m.set(l, r, false);
    return BipartiteGraph(std::move(m));
}

VertexClass classify_vertex(const BipartiteGraph& g, int x) {
    VertexClass out;
    if (g.degree(x) != 2) return out;
    auto nb = g.neighbors(x);
    int d0 = g.degree(nb[0]), d1 = g.degree(nb[1]);
    if (d0 == 3 && d1 == 3) {
        out.kind = VertexClassKind::TypeI;
        out.y1 = nb[0];
        out.y2 = nb[1];
        return out;
    }
    // Type II: one neighbor of degree 2 (y1) and one of degree 3 (y2);
    // y1's other neighbor x1 has degree 3 and is not adjacent to y2.
    for (int pick = 0; pick < 2; ++pick) {
        int y1 = nb[pick], y2 = nb[1 - pick];
        if (g.degree(y1) != 2 || g.degree(y2) != 3) continue;
        int x1 = -1;
        for (int t : g.neighbors(y1))
            if (t != x) x1 = t;
        if (x1 < 0 || g.degree(x1) != 3) continue;
        if (g.has_edge(y2, x1)) continue;
        out.kind = VertexClassKind::TypeII;
        out.y1 = y1;
        out.y2 = y2;
        out.x1 = x1;
        return out;
    }
    return out;
}

std::optional<std::array<int, 3>> find_deg2_path3(const BipartiteGraph& g) {
    std::optional<std::array<int, 3>> best;
    for (int u = 0; u < g.v(); ++u) {
        if (g.degree(u) != 2) continue;
        for (int v1 : g.neighbors(u)) {
            if (g.degree(v1) != 2) continue;
            for (int u1 : g.neighbors(v1)) {
                if (u1 == u || g.degree(u1) != 2) continue;
                std::array<int, 3> cand{u, v1, u1};
                if (!best || cand < *best) best = cand;
            }
        }
    }
    return best;
}

namespace {

BitMatrix named_matrix(NamedKind which) {
    switch (which) {
        case NamedKind::K2:
            return BitMatrix::from_rows({"1"});
        case NamedKind::C6:
            return BitMatrix::from_rows({"110", "011", "101"});
        case NamedKind::J: {
            // hexagon h0..h5 plus chord path h0-p1-p2-h3;
            // left {h0,h2,h4,p2}, right {h1,h3,h5,p1}
            BipartiteGraph j(4, {{0, 0}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 3}});
            return j.to_biadjacency();
        }
    }
    throw std::logic_error("named_matrix");
}

}  // namespace

bool is_named(const BipartiteGraph& g, NamedKind which) {
    BitMatrix ref = named_matrix(which);
    if (g.part_size() != ref.n() || g.e() != BipartiteGraph(ref).e()) return false;
    return canonical_form(g) == canonical_form(BipartiteGraph(ref));
}

namespace {

// Lexicographically smallest row-major bit string over all row and column
// orders; for a fixed row order the optimal column order is realized by an
// ordered block partition refined row by row (zeros before ones in each
// block). Chunk encoding: column slot s is bit (n-1-s), so unsigned
// comparison of chunks equals left-to-right string comparison.
struct CanonSearch {
    int n = 0;
    std::vector<uint64_t> rowbits;  // original row patterns (n <= 64)
    std::vector<uint64_t> best;     // best chunk sequence found so far
    std::vector<uint64_t> chunks;   // current chunk sequence
    std::vector<char> used;
    bool have_best = false;

    void run(const BitMatrix& mat) {
        n = mat.n();
        rowbits.assign(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (mat.get(i, j)) rowbits[i] |= 1ull << j;
        used.assign(n, 0);
        chunks.assign(n, 0);
        std::vector<std::vector<int>> blocks;
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        if (n > 0) blocks.push_back(all);
        dfs(0, blocks);
        if (n == 0) have_best = true;
    }

    void dfs(int depth, const std::vector<std::vector<int>>& blocks) {
        if (depth == n) {
            if (!have_best || chunks < best) {
                best = chunks;
                have_best = true;
            }
            return;
        }
        // -1: current prefix already strictly below best, 0: equal so far
        int prefix_cmp = -1;
        if (have_best) {
            prefix_cmp = 0;
            for (int d = 0; d < depth; ++d)
                if (chunks[d] != best[d]) {
                    prefix_cmp = chunks[d] < best[d] ? -1 : 1;
                    break;
                }
            if (prefix_cmp > 0) return;
        }

        struct Cand {
            uint64_t chunk;
            int row;
        };
        std::vector<Cand> cands;
        cands.reserve(n - depth);
        uint64_t seen[64];
        int nseen = 0;
        for (int r = 0; r < n; ++r) {
            if (used[r]) continue;
            bool dup = false;
            for (int t = 0; t < nseen && !dup; ++t) dup = seen[t] == rowbits[r];
            if (dup) continue;  // identical rows give identical subtrees
            seen[nseen++] = rowbits[r];
            uint64_t chunk = 0;
            int pos = 0;
            for (const auto& blk : blocks) {
                int ones = 0;
                for (int col : blk) ones += (rowbits[r] >> col) & 1;
                int zeros = static_cast<int>(blk.size()) - ones;
                for (int t = 0; t < ones; ++t) chunk |= 1ull << (n - 1 - (pos + zeros + t));
                pos += static_cast<int>(blk.size());
            }
            cands.push_back({chunk, r});
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Cand& a, const Cand& b) { return a.chunk < b.chunk; });

        for (const Cand& cand : cands) {
            if (have_best && prefix_cmp == 0 && cand.chunk > best[depth]) break;
            chunks[depth] = cand.chunk;
            used[cand.row] = 1;
            std::vector<std::vector<int>> refined;
            refined.reserve(blocks.size() * 2);
            for (const auto& blk : blocks) {
                std::vector<int> zeros, ones;
                for (int col : blk)
                    ((rowbits[cand.row] >> col) & 1 ? ones : zeros).push_back(col);
                if (!zeros.empty()) refined.push_back(std::move(zeros));
                if (!ones.empty()) refined.push_back(std::move(ones));
            }
            dfs(depth + 1, refined);
            used[cand.row] = 0;
        }
    }
};

std::vector<uint64_t> canon_chunks(const BitMatrix& m) {
    CanonSearch s;
    s.run(m);
    return s.best;
}

}  // namespace

BitMatrix canonical_matrix(const BitMatrix& m) {
    if (m.n() > 64) throw std::invalid_argument("canonical_matrix: order-too-large (n > 64)");
    auto a = canon_chunks(m);
    auto b = canon_chunks(m.transpose());
    const auto& pick = (b < a) ? b : a;
    int n = m.n();
    BitMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((pick[i] >> (n - 1 - j)) & 1) out.set(i, j, true);
    return out;
}

std::string canonical_form(const BipartiteGraph& g) {
    BitMatrix c = canonical_matrix(g.to_biadjacency());
    std::string s;
    s.reserve(2 + static_cast<size_t>(c.n()) * c.n() / 4);
    static const char* hex = "0123456789abcdef";
    int n = c.n();
    s += std::to_string(n);
    s += ':';
    int nibble = 0, filled = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            nibble = (nibble << 1) | (c.get(i, j) ? 1 : 0);
            if (++filled == 4) {
                s += hex[nibble];
                nibble = filled = 0;
            }
        }
    if (filled) s += hex[nibble << (4 - filled)];
    return s;
}

BipartiteGraph parse_graph6_headered(const std::string& text) {
    std::istringstream in(text);
    std::string header, body;
    if (!std::getline(in, header)) throw std::invalid_argument("graph6: empty input (line 1)");
    while (!header.empty() && (header.back() == '\r' || header.back() == ' ')) header.pop_back();
    if (header.rfind("n=", 0) != 0)
        throw std::invalid_argument("graph6: line 1 must be a part-size header n=<int>");
    int n = 0;
    try {
        n = std::stoi(header.substr(2));
    } catch (...) {
        throw std::invalid_argument("graph6: bad part size in header (line 1)");
    }
    if (!std::getline(in, body)) throw std::invalid_argument("graph6: missing graph6 string (line 2)");
    while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.pop_back();
    if (body.empty()) throw std::invalid_argument("graph6: empty graph6 string (line 2)");

    size_t pos = 0;
    long long nv;
    if (body[0] == '~') throw std::invalid_argument("graph6: long form not supported");
    nv = body[0] - 63;
    pos = 1;
    if (nv < 0 || nv != 2LL * n)
        throw std::invalid_argument("graph6: vertex count does not match 2*n from the header");

    std::vector<int> bits;
    for (; pos < body.size(); ++pos) {
        int c = body[pos] - 63;
        if (c < 0 || c > 63)
            throw std::invalid_argument("graph6: bad character at line 2, column " + std::to_string(pos + 1));
        for (int b = 5; b >= 0; --b) bits.push_back((c >> b) & 1);
    }
    long long need = nv * (nv - 1) / 2;
    if (static_cast<long long>(bits.size()) < need)
        throw std::invalid_argument("graph6: truncated edge bits (line 2)");

    BitMatrix m(n);
    long long idx = 0;
    for (long long j = 1; j < nv; ++j)
        for (long long i = 0; i < j; ++i, ++idx) {
            if (!bits[idx]) continue;
            bool il = i < n, jl = j < n;
            if (il == jl)
                throw std::invalid_argument("graph6: edge violates the bipartition (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            long long l = il ? i : j;
            long long r = (il ? j : i) - n;
            m.set(static_cast<int>(l), static_cast<int>(r), true);
        }
    return BipartiteGraph(std::move(m));
}

std::string write_graph6_headered(const BipartiteGraph& g) {
    int n = g.part_size();
    long long nv = 2LL * n;
    if (nv > 62) throw std::invalid_argument("graph6: writer supports up to 62 vertices");
    std::string out = "n=" + std::to_string(n) + "\n";
    std::string body(1, static_cast<char>(63 + nv));
    std::vector<int> bits;
    for (long long j = 1; j < nv; ++j)
        for (long long i = 0; i < j; ++i) bits.push_back(g.has_edge(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
    for (size_t t = 0; t < bits.size(); t += 6) {
        int c = 0;
        for (int b = 0; b < 6; ++b) c = (c << 1) | (t + b < bits.size() ? bits[t + b] : 0);
        body += static_cast<char>(63 + c);
    }
    out += body;
    out += '\n';
    return out;
}

}  // namespace sparsekit
