#pragma once

// Canonical code for a framed graph (G, theta).
//
// The pair is equivalent to four fixed-point-free involutions on the darts:
// the edge involution and, for each cycle, the pairing it induces at every
// vertex.  A framed isomorphism is a dart bijection commuting with the edge
// involution and carrying the pairing involutions onto each other up to a
// permutation of the three cycles (the triple is unordered).  Because the
// graph is connected, such a bijection is determined by the image of one
// dart once the cycle permutation is fixed; the code below is the minimum,
// over all 6 cycle permutations and all 4n start darts, of the traversal
// relabeling's involution table — so equal codes are equivalent to the
// existence of a framed isomorphism.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "trieuler/canonical.hpp"
#include "trieuler/dart_graph.hpp"
#include "trieuler/errors.hpp"
#include "trieuler/framing.hpp"

namespace trieuler {

using FramedGraphCode = std::vector<std::uint8_t>;

namespace detail {

// involutions[0] = edge involution; involutions[1..3] = cycle pairings.
using FramedInvolutions = std::array<std::vector<int>, 4>;

inline FramedInvolutions framed_involutions(const Framing& f) {
    const DartGraph& g = f.graph;
    FramedInvolutions inv;
    inv[0] = g.eps;
    for (int c = 0; c < 3; ++c) {
        inv[c + 1].resize(g.dart_count());
        for (int d = 0; d < g.dart_count(); ++d) inv[c + 1][d] = f.cycles[c].partner(d);
    }
    return inv;
}

} // namespace detail

inline FramedGraphCode framed_canonical_code(const Framing& f) {
    const DartGraph& g = f.graph;
    const int nd = g.dart_count();
    const auto inv = detail::framed_involutions(f);
    static constexpr int kColorPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

    std::vector<std::uint8_t> best, cur;
    std::vector<int> new_id(nd), old_of(nd);
    bool have_best = false;

    for (const auto& perm : kColorPerm) {
        const std::array<const std::vector<int>*, 4> gens{&inv[0], &inv[1 + perm[0]],
                                                          &inv[1 + perm[1]], &inv[1 + perm[2]]};
        for (int start = 0; start < nd; ++start) {
            // Breadth-first relabeling: darts are numbered in discovery
            // order, generators applied in fixed order at each dart.
            std::fill(new_id.begin(), new_id.end(), -1);
            new_id[start] = 0;
            old_of[0] = start;
            int assigned = 1;
            cur.clear();
            bool viable = true, tight = have_best;
            for (int t = 0; t < nd && viable; ++t) {
                int d = old_of[t];
                for (int k = 0; k < 4 && viable; ++k) {
                    int image = (*gens[k])[d];
                    if (new_id[image] < 0) {
                        new_id[image] = assigned;
                        old_of[assigned++] = image;
                    }
                    cur.push_back(std::uint8_t(new_id[image]));
                    if (tight) {
                        std::uint8_t b = best[cur.size() - 1];
                        if (cur.back() > b) viable = false;
                        else if (cur.back() < b) tight = false;
                    }
                }
            }
            if (!viable) continue;
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
        }
    }
    FramedGraphCode code;
    code.reserve(1 + best.size());
    code.push_back(std::uint8_t(g.n));
    code.insert(code.end(), best.begin(), best.end());
    return code;
}

inline std::string framed_code_hex(const FramedGraphCode& code) { return code_hex(code); }

// Rebuild a framed graph from its code: rows give the four involutions in
// canonical labels; vertices are the orbits of the three pairing involutions
// (ordered by smallest dart), and each vertex's local order is chosen so
// that cycle c induces pairing Pc — the reconstructed framing is the triple
// of constant transition systems.
inline Framing framed_graph_from_code(const FramedGraphCode& code) {
    if (code.empty()) throw MalformedInput("empty framed code");
    int n = code[0];
    int nd = 4 * n;
    if (code.size() != size_t(1 + 4 * nd)) throw MalformedInput("framed code has wrong length");
    std::array<std::vector<int>, 4> inv;
    for (auto& i : inv) i.assign(nd, -1);
    for (int d = 0; d < nd; ++d)
        for (int k = 0; k < 4; ++k) {
            int image = code[1 + 4 * d + k];
            if (image >= nd) throw MalformedInput("framed code entry out of range");
            inv[k][d] = image;
        }
    for (int k = 0; k < 4; ++k)
        for (int d = 0; d < nd; ++d)
            if (inv[k][d] == d || inv[k][inv[k][d]] != d)
                throw MalformedInput("framed code row is not a fixed-point-free involution");
    // Klein relations at each vertex: the three pairings must compose.
    for (int d = 0; d < nd; ++d)
        if (inv[1][inv[2][d]] != inv[3][d])
            throw MalformedInput("framed code pairings are not a vertex triple");

    // Vertices = orbits of the pairing involutions, in smallest-dart order.
    std::vector<int> dart_to_new(nd, -1);
    int next_vertex = 0;
    for (int d = 0; d < nd; ++d) {
        if (dart_to_new[d] >= 0) continue;
        std::array<int, 4> orbit{d, inv[1][d], inv[2][d], inv[3][d]};
        for (int l = 0; l < 4; ++l) {
            if (dart_to_new[orbit[l]] >= 0)
                throw MalformedInput("framed code pairing orbits are not disjoint 4-sets");
            dart_to_new[orbit[l]] = 4 * next_vertex + l;
        }
        ++next_vertex;
    }
    if (next_vertex != n) throw MalformedInput("framed code vertex count mismatch");

    DartGraph g;
    g.n = n;
    g.eps.assign(nd, -1);
    for (int d = 0; d < nd; ++d) g.eps[dart_to_new[d]] = dart_to_new[inv[0][d]];
    for (int d = 0; d < nd; ++d)
        if (g.eps[d] == d || g.eps[g.eps[d]] != d)
            throw MalformedInput("framed code edge involution is inconsistent");
    if (!detail::connected(n, [&] {
            std::vector<std::array<int, 2>> edges;
            for (int d = 0; d < nd; ++d)
                if (d < g.eps[d])
                    edges.push_back({DartGraph::vertex_of(d), DartGraph::vertex_of(g.eps[d])});
            return edges;
        }()))
        throw MalformedInput("framed code graph is not connected");

    std::array<TransitionSystem, 3> cycles;
    for (int c = 0; c < 3; ++c) cycles[c].choice.assign(n, static_cast<signed char>(c));
    return make_framing(g, cycles[0], cycles[1], cycles[2]);
}

} // namespace trieuler
