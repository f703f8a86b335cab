#pragma once

// Canonical codes, isomorphism and automorphisms for 4-regular multigraphs.
//
// The code of a graph is the lexicographically smallest byte string
//   [n][A'(0,0)][A'(0,1) A'(1,1)][A'(0,2) A'(1,2) A'(2,2)]...
// over all relabelings A' of the adjacency matrix, where entries are listed
// in growing-principal-minor order (column k contributes rows 0..k).  The
// diagonal counts loop ends (so it is even); off-diagonal entries are edge
// multiplicities.  This order lets the search compare partial permutations
// byte-by-byte and prune early.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "trieuler/dart_graph.hpp"
#include "trieuler/errors.hpp"

namespace trieuler {

using AdjMatrix = std::vector<std::vector<std::uint8_t>>;

inline AdjMatrix adjacency_matrix(const DartGraph& g) {
    AdjMatrix a(g.n, std::vector<std::uint8_t>(g.n, 0));
    for (auto [d, e] : g.edge_darts()) {
        int u = DartGraph::vertex_of(d), v = DartGraph::vertex_of(e);
        if (u == v)
            a[u][u] += 2;
        else {
            a[u][v] += 1;
            a[v][u] += 1;
        }
    }
    return a;
}

namespace detail {

struct CodeSearch {
    const AdjMatrix& a;
    int n;
    std::vector<int> perm;      // perm[k] = original vertex placed at position k
    std::vector<char> used;
    std::vector<std::uint8_t> cur, best;
    bool have_best = false;

    explicit CodeSearch(const AdjMatrix& m) : a(m), n(int(m.size())), used(n, 0) {}

    void run() {
        perm.clear();
        cur.clear();
        descend(true);
    }

    // tight: cur so far equals the best prefix (only then can we lose).
    void descend(bool tight) {
        int k = int(perm.size());
        if (k == n) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            size_t mark = cur.size();
            bool ok = true, now_tight = tight && have_best;
            for (int i = 0; i <= k && ok; ++i) {
                std::uint8_t byte = (i == k) ? a[v][v] : a[perm[i]][v];
                cur.push_back(byte);
                if (now_tight) {
                    std::uint8_t b = best[cur.size() - 1];
                    if (byte > b) ok = false;
                    else if (byte < b) now_tight = false;
                }
            }
            if (ok) {
                perm.push_back(v);
                used[v] = 1;
                descend(now_tight);
                used[v] = 0;
                perm.pop_back();
            }
            cur.resize(mark);
        }
    }
};

} // namespace detail

// Invertible canonical code: byte 0 is n, then the minimized matrix entries.
inline std::vector<std::uint8_t> canonical_code(const DartGraph& g) {
    AdjMatrix a = adjacency_matrix(g);
    detail::CodeSearch search(a);
    search.run();
    std::vector<std::uint8_t> code;
    code.reserve(1 + search.best.size());
    code.push_back(std::uint8_t(g.n));
    code.insert(code.end(), search.best.begin(), search.best.end());
    return code;
}

inline DartGraph graph_from_code(const std::vector<std::uint8_t>& code) {
    if (code.empty()) throw MalformedInput("empty graph code");
    int n = code[0];
    if (code.size() != size_t(1 + n * (n + 1) / 2)) throw MalformedInput("graph code has wrong length");
    AdjMatrix a(n, std::vector<std::uint8_t>(n, 0));
    size_t at = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i <= k; ++i) {
            a[i][k] = code[at];
            a[k][i] = code[at];
            ++at;
        }
    std::vector<std::array<int, 2>> edges;
    for (int v = 0; v < n; ++v) {
        if (a[v][v] % 2 != 0) throw MalformedInput("odd loop-end count in graph code");
        for (int i = 0; i < a[v][v] / 2; ++i) edges.push_back({v, v});
        for (int u = v + 1; u < n; ++u)
            for (int i = 0; i < a[v][u]; ++i) edges.push_back({v, u});
    }
    std::sort(edges.begin(), edges.end());
    return make_dart_graph(n, edges);
}

inline std::string code_hex(const std::vector<std::uint8_t>& code) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * code.size());
    for (std::uint8_t b : code) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

inline std::vector<std::uint8_t> code_from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw MalformedInput("hex code has odd length");
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw MalformedInput("invalid hex digit");
    };
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = std::uint8_t(nib(hex[2 * i]) << 4 | nib(hex[2 * i + 1]));
    return out;
}

inline bool is_isomorphic(const DartGraph& g, const DartGraph& h) {
    return canonical_code(g) == canonical_code(h);
}

// All vertex permutations preserving the adjacency matrix (loops included),
// found by brute force with row-by-row pruning.  The full element list
// doubles as a generator list; group sizes at census scale are tiny.
inline std::vector<std::vector<int>> automorphisms(const DartGraph& g) {
    AdjMatrix a = adjacency_matrix(g);
    int n = g.n;
    std::vector<int> perm;
    std::vector<char> used(n, 0);
    std::vector<std::vector<int>> out;
    auto rec = [&](auto&& self) -> void {
        int k = int(perm.size());
        if (k == n) {
            out.push_back(perm);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = a[k][k] == a[v][v];
            for (int i = 0; i < k && ok; ++i)
                ok = a[i][k] == a[perm[i]][v];
            if (!ok) continue;
            perm.push_back(v);
            used[v] = 1;
            self(self);
            used[v] = 0;
            perm.pop_back();
        }
    };
    rec(rec);
    return out;
}

inline long automorphism_order(const DartGraph& g) {
    return long(automorphisms(g).size());
}

// Vertex 3-connectivity: at least 4 vertices and no separating set of size
// at most 2.  Multiplicities and loops do not affect this.
inline bool is_three_connected(const DartGraph& g) {
    if (g.n < 4) return false;
    AdjMatrix a = adjacency_matrix(g);
    auto connected_without = [&](int x, int y) {
        std::vector<char> seen(g.n, 0);
        if (x >= 0) seen[x] = 2;
        if (y >= 0) seen[y] = 2;
        int start = -1;
        for (int v = 0; v < g.n && start < 0; ++v)
            if (!seen[v]) start = v;
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < g.n; ++u)
                if (u != v && a[v][u] > 0 && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        return std::none_of(seen.begin(), seen.end(), [](char c) { return c == 0; });
    };
    for (int x = -1; x < g.n; ++x)
        for (int y = x; y < g.n; ++y) {
            if (x == y && x >= 0) continue;
            if (!connected_without(x, y)) return false;
        }
    return true;
}

} // namespace trieuler
