#pragma once

// Dart-level representation of connected 4-regular multigraphs.
//
// A graph on n vertices is stored as 4n darts (edge ends); vertex v owns
// darts 4v..4v+3 in a fixed local order, and a fixed-point-free involution
// eps pairs the two ends of each edge.  Loops and parallel edges are
// first-class.

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trieuler/errors.hpp"

namespace trieuler {

// The three perfect matchings of a vertex's local darts (0,1,2,3):
//   P0 = {01|23}, P1 = {02|13}, P2 = {03|12}.
inline constexpr int kPairingPartner[3][4] = {
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};

// Pairing index that puts local darts a and b in one pair (a != b).
inline constexpr int pairing_of_pair(int a, int b) {
    // P_p pairs local dart 0 with local dart p+1.
    int lo = a < b ? a : b, hi = a < b ? b : a;
    if (lo == 0) return hi - 1;
    // pairs not containing 0: {23}->P0, {13}->P1, {12}->P2
    return 5 - lo - hi;
}

// Local dart pairs in fixed order (01,02,03,12,13,23) -> index 0..5.
inline constexpr int kLocalPair[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

inline constexpr int local_pair_index(int a, int b) {
    int lo = a < b ? a : b, hi = a < b ? b : a;
    if (lo == 0) return hi - 1;
    if (lo == 1) return hi + 1;
    return 5;
}

// Pair indices covered by pairing p: P0 = {01,23}, P1 = {02,13}, P2 = {03,12}.
inline constexpr int kPairingPairs[3][2] = {{0, 5}, {1, 4}, {2, 3}};

struct DartGraph {
    int n = 0;
    std::vector<int> eps; // size 4n; eps[eps[d]] == d, eps[d] != d

    int dart_count() const { return 4 * n; }
    static int vertex_of(int d) { return d >> 2; }
    static int local_of(int d) { return d & 3; }
    static int dart_of(int v, int local) { return 4 * v + local; }

    int edge_count() const { return 2 * n; }

    // Edges as dart pairs (d, eps[d]) with d < eps[d], ordered by d.
    std::vector<std::array<int, 2>> edge_darts() const {
        std::vector<std::array<int, 2>> out;
        out.reserve(edge_count());
        for (int d = 0; d < dart_count(); ++d)
            if (d < eps[d]) out.push_back({d, eps[d]});
        return out;
    }

    // edge id of a dart under the edge_darts() order.
    std::vector<int> edge_index_by_dart() const {
        std::vector<int> idx(dart_count(), -1);
        int e = 0;
        for (int d = 0; d < dart_count(); ++d)
            if (d < eps[d]) {
                idx[d] = idx[eps[d]] = e;
                ++e;
            }
        return idx;
    }

    bool has_loop() const {
        for (int d = 0; d < dart_count(); ++d)
            if (vertex_of(d) == vertex_of(eps[d])) return true;
        return false;
    }

    bool is_simple() const {
        std::vector<std::array<int, 2>> seen;
        for (auto [d, e] : edge_darts()) {
            int u = vertex_of(d), v = vertex_of(e);
            if (u == v) return false;
            std::array<int, 2> key{std::min(u, v), std::max(u, v)};
            if (std::find(seen.begin(), seen.end(), key) != seen.end()) return false;
            seen.push_back(key);
        }
        return true;
    }

    bool operator==(const DartGraph& o) const { return n == o.n && eps == o.eps; }
};

namespace detail {

inline bool connected(int n, const std::vector<std::array<int, 2>>& edges) {
    if (n <= 0) return false;
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

} // namespace detail

// Build from an edge list with the deterministic dart rule: edges are
// processed in list order and each consumes the lowest free dart at each
// endpoint (a loop consumes two darts at its vertex).
inline DartGraph make_dart_graph(int n, const std::vector<std::array<int, 2>>& edges) {
    if (n <= 0) throw MalformedInput("vertex count must be positive");
    std::vector<int> degree(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw MalformedInput("edge endpoint out of range");
        degree[u]++;
        degree[v]++;
    }
    for (int v = 0; v < n; ++v)
        if (degree[v] != 4)
            throw NonQuadrivalent("vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]));
    if (!detail::connected(n, edges)) throw Disconnected("graph is not connected");

    DartGraph g;
    g.n = n;
    g.eps.assign(4 * n, -1);
    std::vector<int> next_free(n, 0);
    auto take = [&](int v) {
        int d = 4 * v + next_free[v];
        ++next_free[v];
        return d;
    };
    for (auto [u, v] : edges) {
        int du = take(u);
        int dv = take(v);
        g.eps[du] = dv;
        g.eps[dv] = du;
    }
    return g;
}

// Multigraph text format: line 1 "n m"; then m lines "u v" (u==v is a loop);
// '#' starts a comment; blank lines ignored.
inline DartGraph parse_graph(std::string_view text) {
    std::vector<std::string> tokens;
    {
        std::string cur;
        bool comment = false;
        for (char c : text) {
            if (c == '#') comment = true;
            if (c == '\n') comment = false;
            if (comment) continue;
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) tokens.push_back(std::move(cur));
    }
    auto to_int = [](const std::string& s) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(s, &pos);
        } catch (...) {
            throw MalformedInput("expected integer, got '" + s + "'");
        }
        if (pos != s.size()) throw MalformedInput("expected integer, got '" + s + "'");
        return v;
    };
    if (tokens.size() < 2) throw MalformedInput("missing header line 'n m'");
    int n = to_int(tokens[0]);
    int m = to_int(tokens[1]);
    if (m < 0) throw MalformedInput("negative edge count");
    if (tokens.size() != size_t(2 + 2 * m))
        throw MalformedInput("expected " + std::to_string(m) + " edges");
    std::vector<std::array<int, 2>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i)
        edges.push_back({to_int(tokens[2 + 2 * i]), to_int(tokens[3 + 2 * i])});
    return make_dart_graph(n, edges);
}

// Writes edges sorted lexicographically; reparsing yields an isomorphic
// graph with the canonical dart assignment.
inline std::string serialize(const DartGraph& g) {
    std::vector<std::array<int, 2>> edges;
    for (auto [d, e] : g.edge_darts()) {
        int u = DartGraph::vertex_of(d), v = DartGraph::vertex_of(e);
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(edges.begin(), edges.end());
    std::ostringstream out;
    out << g.n << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace trieuler
