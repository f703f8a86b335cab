#pragma once

// Transition systems and Eulerian cycles on 4-regular multigraphs.
//
// A transition system picks one of the three LocalPairings at every vertex;
// it splits the edge set into closed trails.  We identify an Eulerian cycle
// with a single-circuit transition system: that representation is exactly
// the quotient by rotation and reversal, so equality and counting need no
// extra normalization.

#include <algorithm>
#include <string>
#include <vector>

#include "trieuler/dart_graph.hpp"
#include "trieuler/errors.hpp"

namespace trieuler {

inline constexpr int kEulerEnumerationLimit = 12;
inline constexpr int kBruteCircuitLimit = 8;

struct TransitionSystem {
    std::vector<signed char> choice; // pairing index per vertex, 0..2

    int partner(int dart) const {
        return 4 * (dart >> 2) + kPairingPartner[choice[dart >> 2]][dart & 3];
    }

    // Base-3 digit string, vertex 0 first.
    std::string code() const {
        std::string s(choice.size(), '0');
        for (size_t v = 0; v < choice.size(); ++v) s[v] = char('0' + choice[v]);
        return s;
    }

    static TransitionSystem from_code(const std::string& s) {
        TransitionSystem ts;
        ts.choice.reserve(s.size());
        for (char c : s) {
            if (c < '0' || c > '2') throw MalformedInput("transition code digit must be 0..2");
            ts.choice.push_back(static_cast<signed char>(c - '0'));
        }
        return ts;
    }

    bool operator==(const TransitionSystem& o) const { return choice == o.choice; }
    bool operator<(const TransitionSystem& o) const { return choice < o.choice; }
};

namespace detail {

// Next leaving dart of the trail: cross the edge of d, then turn according
// to the pairing at the arrival vertex.
inline int trail_step(const DartGraph& g, const TransitionSystem& ts, int d) {
    return ts.partner(g.eps[d]);
}

// Number of orbits of the trail-step map on darts.  Orbits come in mirror
// pairs (an orbit and its edge-involution image are distinct and traverse
// the same trail in opposite directions), so the circuit count is half this.
inline int trail_orbit_count(const DartGraph& g, const TransitionSystem& ts) {
    std::vector<char> seen(g.dart_count(), 0);
    int orbits = 0;
    for (int d0 = 0; d0 < g.dart_count(); ++d0) {
        if (seen[d0]) continue;
        ++orbits;
        int d = d0;
        do {
            seen[d] = 1;
            d = trail_step(g, ts, d);
        } while (d != d0);
    }
    return orbits;
}

} // namespace detail

inline int circuit_count(const DartGraph& g, const TransitionSystem& ts) {
    return detail::trail_orbit_count(g, ts) / 2;
}

inline bool is_eulerian(const DartGraph& g, const TransitionSystem& ts) {
    return detail::trail_orbit_count(g, ts) == 2;
}

// Closed trails of ts as leaving-dart sequences (one dart per edge).  Each
// trail is reported once, from its smallest dart, in trail-step direction;
// trails are ordered by that starting dart.
inline std::vector<std::vector<int>> circuit_decomposition(const DartGraph& g,
                                                           const TransitionSystem& ts) {
    std::vector<char> seen(g.dart_count(), 0);
    std::vector<std::vector<int>> circuits;
    for (int d0 = 0; d0 < g.dart_count(); ++d0) {
        if (seen[d0]) continue;
        std::vector<int> circuit;
        int d = d0;
        do {
            circuit.push_back(d);
            seen[d] = 1;
            seen[g.eps[d]] = 1; // same trail traversed backwards
            d = detail::trail_step(g, ts, d);
        } while (d != d0);
        circuits.push_back(std::move(circuit));
    }
    return circuits;
}

struct EulerianCycle {
    DartGraph graph;
    TransitionSystem transitions;
    std::vector<int> witness; // leaving darts, length 2n, starts at dart 0

    bool operator==(const EulerianCycle& o) const {
        return graph == o.graph && transitions == o.transitions;
    }
};

inline EulerianCycle make_eulerian_cycle(const DartGraph& g, const TransitionSystem& ts) {
    auto circuits = circuit_decomposition(g, ts);
    if (circuits.size() != 1) throw MalformedInput("transition system is not single-circuit");
    return EulerianCycle{g, ts, std::move(circuits.front())};
}

// All Eulerian cycles of g, in ascending base-3 code order of the
// transition system.
inline std::vector<EulerianCycle> enumerate_eulerian(const DartGraph& g) {
    if (g.n > kEulerEnumerationLimit)
        throw LimitExceeded("Eulerian enumeration supported through n = 12");
    std::vector<EulerianCycle> out;
    TransitionSystem ts;
    ts.choice.assign(g.n, 0);
    for (;;) {
        if (is_eulerian(g, ts)) out.push_back(make_eulerian_cycle(g, ts));
        int v = g.n - 1;
        while (v >= 0 && ts.choice[v] == 2) ts.choice[v--] = 0;
        if (v < 0) break;
        ++ts.choice[v];
    }
    return out;
}

// Two Eulerian cycles are compatible iff their pairings differ at every
// vertex (two pairings of 4 darts share a consecutive pair iff equal).
inline bool compatible(const EulerianCycle& c1, const EulerianCycle& c2) {
    if (!(c1.graph == c2.graph)) throw GraphMismatch("cycles live on different graphs");
    for (size_t v = 0; v < c1.transitions.choice.size(); ++v)
        if (c1.transitions.choice[v] == c2.transitions.choice[v]) return false;
    return true;
}

// Independent Eulerian-cycle count: backtracking over closed trails anchored
// at dart 0.  A single-circuit transition system corresponds to exactly one
// trail that leaves through dart 0 and uses every edge (the transitions are
// read off the trail, and any perfect matching of 4 darts is a LocalPairing),
// so the walk count equals the cycle count.
inline long count_circuits_brute(const DartGraph& g) {
    if (g.n > kBruteCircuitLimit)
        throw LimitExceeded("brute-force circuit counting supported through n = 8");
    auto edge_of = g.edge_index_by_dart();
    std::vector<char> used(g.edge_count(), 0);
    const int total = g.edge_count();
    long count = 0;
    auto rec = [&](auto&& self, int d, int used_edges) -> void {
        used[edge_of[d]] = 1;
        if (used_edges + 1 == total) {
            ++count; // parity forces the final arrival back to the start vertex
        } else {
            int v = DartGraph::vertex_of(g.eps[d]);
            for (int l = 0; l < 4; ++l) {
                int nd = DartGraph::dart_of(v, l);
                if (!used[edge_of[nd]]) self(self, nd, used_edges + 1);
            }
        }
        used[edge_of[d]] = 0;
    };
    rec(rec, 0, 0);
    return count;
}

} // namespace trieuler
