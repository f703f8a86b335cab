#pragma once

// Exhaustive generation of connected 4-regular multigraphs up to isomorphism.
//
// Backtracking over symmetric adjacency matrices with row sums 4 (diagonal =
// loop ends, even), keeping a matrix only if it is connected and equal to its
// own canonical relabeling.  Each isomorphism class therefore appears exactly
// once, in lexicographic order of the canonical code.

#include <array>
#include <cstdint>
#include <vector>

#include "trieuler/canonical.hpp"
#include "trieuler/dart_graph.hpp"
#include "trieuler/errors.hpp"

namespace trieuler {

inline constexpr int kGenerateLimit = 7;

namespace detail {

inline DartGraph graph_from_matrix(const AdjMatrix& a) {
    int n = int(a.size());
    std::vector<std::array<int, 2>> edges;
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < a[v][v] / 2; ++i) edges.push_back({v, v});
        for (int u = v + 1; u < n; ++u)
            for (int i = 0; i < a[v][u]; ++i) edges.push_back({v, u});
    }
    return make_dart_graph(n, edges);
}

// Bytes of a matrix in the canonical-code entry order (identity labeling).
inline std::vector<std::uint8_t> matrix_bytes(const AdjMatrix& a) {
    int n = int(a.size());
    std::vector<std::uint8_t> out;
    out.reserve(n * (n + 1) / 2);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i <= k; ++i) out.push_back(a[i][k]);
    return out;
}

inline bool matrix_connected(const AdjMatrix& a) {
    int n = int(a.size());
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
            if (u != v && a[v][u] > 0 && !seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    for (char c : seen)
        if (!c) return false;
    return true;
}

} // namespace detail

// All connected 4-regular multigraphs on n vertices, one per isomorphism
// class.  simple_only restricts to loop-free graphs without parallel edges.
inline std::vector<DartGraph> generate_graphs(int n, bool simple_only = false) {
    if (n < 1) throw MalformedInput("vertex count must be positive");
    if (n > kGenerateLimit) throw LimitExceeded("generation supported through n = 7");

    std::vector<std::pair<std::vector<std::uint8_t>, DartGraph>> found;
    AdjMatrix a(n, std::vector<std::uint8_t>(n, 0));
    std::vector<int> remaining(n, 4); // degree still unassigned at each vertex

    // Fill the upper triangle cell by cell, rows top to bottom; when a row
    // reaches its last cell the row sum must come out exactly 4.
    auto rec = [&](auto&& self, int v, int u) -> void {
        if (v == n) {
            if (!detail::matrix_connected(a)) return;
            DartGraph g = detail::graph_from_matrix(a);
            auto self_code = detail::matrix_bytes(a);
            self_code.insert(self_code.begin(), std::uint8_t(n));
            if (canonical_code(g) == self_code)
                found.emplace_back(std::move(self_code), std::move(g));
            return;
        }
        if (u == n) {
            if (remaining[v] == 0) self(self, v + 1, v + 1);
            return;
        }
        if (u == v) {
            int max_loop = simple_only ? 0 : remaining[v];
            for (int ends = 0; ends <= max_loop; ends += 2) {
                a[v][v] = std::uint8_t(ends);
                remaining[v] -= ends;
                if (remaining[v] >= 0) self(self, v, u + 1);
                remaining[v] += ends;
            }
            a[v][v] = 0;
            return;
        }
        int cap = std::min(remaining[v], remaining[u]);
        if (simple_only) cap = std::min(cap, 1);
        for (int mult = 0; mult <= cap; ++mult) {
            a[v][u] = a[u][v] = std::uint8_t(mult);
            remaining[v] -= mult;
            remaining[u] -= mult;
            self(self, v, u + 1);
            remaining[v] += mult;
            remaining[u] += mult;
        }
        a[v][u] = a[u][v] = 0;
    };
    rec(rec, 0, 0);

    // Deterministic order: ascending canonical code.
    std::sort(found.begin(), found.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<DartGraph> out;
    out.reserve(found.size());
    for (auto& [code, g] : found) out.push_back(std::move(g));
    return out;
}

} // namespace trieuler
