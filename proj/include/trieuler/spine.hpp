#pragma once

// The polyhedral realization P(G, theta): the 2-complex obtained from G by
// attaching a disk along each cycle of the framing.  n true vertices, 2n
// edges, 3 two-components; the corner table records, for each of the 6
// dart-pairs at a vertex, which cycle's disk passes through that corner.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "trieuler/dart_graph.hpp"
#include "trieuler/errors.hpp"
#include "trieuler/framing.hpp"

namespace trieuler {

struct SpineComplex {
    DartGraph graph;
    std::array<TransitionSystem, 3> cycles;    // the framing's sorted triple
    std::array<std::vector<int>, 3> attaching; // leaving-dart walk per disk
    std::vector<std::array<int, 6>> corner_table; // [vertex][local-pair index] -> owning cycle

    int true_vertices() const { return graph.n; }
    int edge_count() const { return 2 * graph.n; }
    static int two_components() { return 3; }
    int euler_characteristic() const { return 3 - graph.n; }
};

inline SpineComplex build_spine(const DartGraph& g, const Framing& f) {
    if (!(f.graph == g)) throw GraphMismatch("framing belongs to a different graph");
    SpineComplex s;
    s.graph = g;
    s.cycles = f.cycles;
    s.corner_table.assign(g.n, {-1, -1, -1, -1, -1, -1});
    for (int v = 0; v < g.n; ++v)
        for (int c = 0; c < 3; ++c)
            for (int pair : kPairingPairs[f.cycles[c].choice[v]]) {
                if (s.corner_table[v][pair] != -1)
                    throw NotAFraming("two disks claim one corner");
                s.corner_table[v][pair] = c;
            }
    for (int v = 0; v < g.n; ++v)
        for (int pair = 0; pair < 6; ++pair)
            if (s.corner_table[v][pair] == -1) throw NotAFraming("uncovered corner");
    for (int c = 0; c < 3; ++c) {
        auto circuits = circuit_decomposition(g, f.cycles[c]);
        if (circuits.size() != 1) throw NotAFraming("attaching walk is not a single circuit");
        s.attaching[c] = std::move(circuits.front());
    }
    return s;
}

struct SpecialReport {
    bool link_ok = false;
    std::array<bool, 3> orientation_preserving{false, false, false};
    bool all_ok() const {
        return link_ok && orientation_preserving[0] && orientation_preserving[1] &&
               orientation_preserving[2];
    }
};

namespace detail {

// Side-color transport through one vertex of the closed surface formed by
// the two disks j and k: the link on the 4 darts has one corner-edge per
// (j|k)-owned pair; entering at dart `a` on the side currently bounded by
// color `c`, follow that side's arc to the departure dart `b`; the color of
// the arc's last corner is the side's color along the next edge.
inline int side_arc_transport(const std::array<int, 6>& corners, int a, int b, int c, int skip) {
    struct LinkEdge {
        int other, owner, id;
    };
    // Link on the 4 darts: one edge per corner owned by the two kept disks.
    std::array<std::array<LinkEdge, 2>, 4> adj{};
    std::array<int, 4> deg{};
    for (int p = 0; p < 6; ++p) {
        int owner = corners[p];
        if (owner == skip || owner < 0) continue;
        int x = kLocalPair[p][0], y = kLocalPair[p][1];
        if (deg[x] >= 2 || deg[y] >= 2) throw InconsistentComplex("vertex link is not a cycle");
        adj[x][deg[x]++] = {y, owner, p};
        adj[y][deg[y]++] = {x, owner, p};
    }
    for (int x = 0; x < 4; ++x)
        if (deg[x] != 2) throw InconsistentComplex("vertex link is not 2-regular");

    // Leave `a` along its corner of color `c`, then follow the arc (always
    // exit a dart via the corner not just used) until reaching `b`.
    int at = -1, color = -1, via = -1, candidates = 0;
    for (int e = 0; e < 2; ++e)
        if (adj[a][e].owner == c) {
            at = adj[a][e].other;
            color = adj[a][e].owner;
            via = adj[a][e].id;
            ++candidates;
        }
    if (candidates != 1)
        throw InconsistentComplex("entering side color is not uniquely continued");
    for (int steps = 0; steps < 4 && at != b; ++steps) {
        const LinkEdge& next = adj[at][adj[at][0].id == via ? 1 : 0];
        at = next.other;
        color = next.owner;
        via = next.id;
    }
    if (at != b) throw InconsistentComplex("side arc does not reach the departure dart");
    return color;
}

} // namespace detail

// Specialness verification: the vertex links are tetrahedral (each of the 6
// corners at a vertex covered exactly once, two per disk, forming a pairing
// triple), and each disk's boundary curve is orientation-preserving in the
// closed surface formed by the other two disks (side-color transport closes
// up after one full trip around the attaching walk).
inline SpecialReport verify_special(const SpineComplex& s) {
    const DartGraph& g = s.graph;
    SpecialReport report;

    report.link_ok = true;
    for (int v = 0; v < g.n && report.link_ok; ++v) {
        // Each disk must own exactly the two pairs of one LocalPairing, and
        // the three pairings must be distinct.
        std::array<int, 3> pairing{-1, -1, -1};
        for (int c = 0; c < 3; ++c) {
            std::array<int, 2> owned{-1, -1};
            int cnt = 0;
            for (int p = 0; p < 6; ++p)
                if (s.corner_table[v][p] == c) {
                    if (cnt < 2) owned[cnt] = p;
                    ++cnt;
                }
            if (cnt != 2) {
                report.link_ok = false;
                break;
            }
            for (int q = 0; q < 3; ++q)
                if (kPairingPairs[q][0] == owned[0] && kPairingPairs[q][1] == owned[1])
                    pairing[c] = q;
            if (pairing[c] < 0) {
                report.link_ok = false;
                break;
            }
        }
        if (report.link_ok &&
            (pairing[0] == pairing[1] || pairing[0] == pairing[2] || pairing[1] == pairing[2]))
            report.link_ok = false;
    }

    for (int i = 0; i < 3; ++i) {
        const auto& walk = s.attaching[i];
        if (walk.empty()) throw InconsistentComplex("empty attaching walk");
        // Track the color bounding one fixed side of the curve; each step
        // crosses the vertex between consecutive walk edges.
        int color = -1;
        for (int c = 0; c < 3 && color < 0; ++c)
            if (c != i) color = c;
        int start_color = color;
        for (size_t t = 0; t < walk.size(); ++t) {
            int leave = walk[t];
            int arrive = g.eps[leave];
            int next_leave = walk[(t + 1) % walk.size()];
            if (DartGraph::vertex_of(arrive) != DartGraph::vertex_of(next_leave))
                throw InconsistentComplex("attaching walk is not a walk");
            int v = DartGraph::vertex_of(arrive);
            color = detail::side_arc_transport(s.corner_table[v], DartGraph::local_of(arrive),
                                               DartGraph::local_of(next_leave), color, i);
        }
        report.orientation_preserving[i] = (color == start_color);
    }
    return report;
}

struct HomologyReport {
    int h2_rank = 0;
    long closed_surface_count = 0;
    int h1_rank = 0;
};

namespace detail {

// Rank over GF(2); each row is a bitmask vector.
inline int gf2_rank(std::vector<std::vector<std::uint64_t>> rows) {
    int rank = 0;
    size_t words = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < 64 * words; ++col) {
        size_t w = col / 64;
        std::uint64_t bit = std::uint64_t(1) << (col % 64);
        size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); ++r)
            if (r != size_t(rank) && (rows[r][w] & bit))
                for (size_t k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
        ++rank;
        if (rank == int(rows.size())) break;
    }
    return rank;
}

} // namespace detail

// Cellular Z2 homology of the spine: boundary of each disk is the sum of
// the edges on its attaching walk (every edge once, since the walks are
// Eulerian), boundary of an edge is the sum of its endpoints.
inline HomologyReport z2_homology(const SpineComplex& s) {
    const DartGraph& g = s.graph;
    const int edges = s.edge_count();
    auto edge_of = g.edge_index_by_dart();
    size_t ewords = size_t(edges + 63) / 64;

    std::vector<std::vector<std::uint64_t>> d2(3, std::vector<std::uint64_t>(ewords, 0));
    for (int c = 0; c < 3; ++c)
        for (int d : s.attaching[c]) {
            int e = edge_of[d];
            d2[c][e / 64] ^= std::uint64_t(1) << (e % 64);
        }
    int rank_d2 = detail::gf2_rank(d2);

    size_t vwords = size_t(g.n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> d1(edges, std::vector<std::uint64_t>(vwords, 0));
    for (auto [d, e] : g.edge_darts()) {
        int u = DartGraph::vertex_of(d), v = DartGraph::vertex_of(e);
        int row = edge_of[d];
        if (u != v) {
            d1[row][u / 64] ^= std::uint64_t(1) << (u % 64);
            d1[row][v / 64] ^= std::uint64_t(1) << (v % 64);
        }
    }
    int rank_d1 = detail::gf2_rank(d1);

    HomologyReport r;
    r.h2_rank = 3 - rank_d2;
    r.closed_surface_count = (long(1) << r.h2_rank) - 1;
    r.h1_rank = (edges - rank_d1) - rank_d2;
    return r;
}

} // namespace trieuler
