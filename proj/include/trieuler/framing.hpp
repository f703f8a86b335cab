#pragma once

// Framings: unordered triples of pairwise compatible Eulerian cycles.
//
// Compatibility forces the three pairings at every vertex to be exactly
// {P0, P1, P2}, so a framing is determined by any two of its cycles; the
// searches below exploit that the third transition system is forced.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "trieuler/dart_graph.hpp"
#include "trieuler/errors.hpp"
#include "trieuler/euler.hpp"

namespace trieuler {

inline constexpr int kFramingSearchLimit = 12;

struct Framing {
    DartGraph graph;
    std::array<TransitionSystem, 3> cycles; // sorted ascending by choice vector

    // Three base-3 transition strings, sorted, joined by '|'.
    std::string to_string() const {
        return cycles[0].code() + "|" + cycles[1].code() + "|" + cycles[2].code();
    }

    bool operator==(const Framing& o) const { return graph == o.graph && cycles == o.cycles; }
    bool operator<(const Framing& o) const { return cycles < o.cycles; }
};

inline Framing make_framing(const DartGraph& g, TransitionSystem t1, TransitionSystem t2,
                            TransitionSystem t3) {
    std::array<TransitionSystem, 3> c{std::move(t1), std::move(t2), std::move(t3)};
    std::sort(c.begin(), c.end());
    for (int v = 0; v < g.n; ++v) {
        int seen = 0;
        for (const auto& t : c) {
            if (int(t.choice.size()) != g.n) throw NotAFraming("transition system size mismatch");
            seen |= 1 << t.choice[v];
        }
        if (seen != 7) throw NotAFraming("pairings at a vertex are not {P0,P1,P2}");
    }
    for (const auto& t : c)
        if (!is_eulerian(g, t)) throw NotAFraming("a member transition system is not Eulerian");
    return Framing{g, std::move(c)};
}

inline Framing framing_from_string(const DartGraph& g, const std::string& s) {
    auto bar1 = s.find('|');
    auto bar2 = s.find('|', bar1 == std::string::npos ? bar1 : bar1 + 1);
    if (bar1 == std::string::npos || bar2 == std::string::npos)
        throw MalformedInput("framing string needs three '|'-separated codes");
    return make_framing(g, TransitionSystem::from_code(s.substr(0, bar1)),
                        TransitionSystem::from_code(s.substr(bar1 + 1, bar2 - bar1 - 1)),
                        TransitionSystem::from_code(s.substr(bar2 + 1)));
}

namespace detail {

// Pack a transition system into 2-bit fields (vertex v at bits 2v) for the
// constant-time everywhere-different test below; usable while 2n <= 64.
inline std::uint64_t pack_choice(const TransitionSystem& ts) {
    std::uint64_t x = 0;
    for (size_t v = 0; v < ts.choice.size(); ++v) x |= std::uint64_t(ts.choice[v]) << (2 * v);
    return x;
}

inline bool differ_everywhere(std::uint64_t a, std::uint64_t b, std::uint64_t vertex_mask) {
    std::uint64_t x = a ^ b;
    return ((x | (x >> 1)) & vertex_mask) == vertex_mask;
}

} // namespace detail

// All framings of g, each unordered triple exactly once, ordered by the
// sorted-triple representation: scan Eulerian pairs T1 < T2 compatible at
// every vertex; T3 is the remaining pairing per vertex; keep iff T2 < T3 and
// T3 is single-circuit.
inline std::vector<Framing> find_framings(const DartGraph& g) {
    if (g.n > kFramingSearchLimit) throw LimitExceeded("framing search supported through n = 12");
    std::vector<EulerianCycle> euler = enumerate_eulerian(g);
    const size_t m = euler.size();
    std::vector<std::uint64_t> packed(m);
    for (size_t i = 0; i < m; ++i) packed[i] = detail::pack_choice(euler[i].transitions);
    std::uint64_t vertex_mask = 0;
    for (int v = 0; v < g.n; ++v) vertex_mask |= std::uint64_t(1) << (2 * v);

    std::vector<Framing> out;
    TransitionSystem t3;
    t3.choice.assign(g.n, 0);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            if (!detail::differ_everywhere(packed[i], packed[j], vertex_mask)) continue;
            const auto& c1 = euler[i].transitions.choice;
            const auto& c2 = euler[j].transitions.choice;
            for (int v = 0; v < g.n; ++v) t3.choice[v] = static_cast<signed char>(3 - c1[v] - c2[v]);
            if (!(euler[j].transitions < t3)) continue;
            if (!is_eulerian(g, t3)) continue;
            out.push_back(Framing{g, {euler[i].transitions, euler[j].transitions, t3}});
        }
    }
    return out;
}

// All framings containing the given Eulerian cycle: per vertex the other two
// pairings split between the two remaining cycles, 2^(n-1) ways after fixing
// the split at vertex 0 (the pair is unordered).  Result order follows the
// bit-pattern odometer on vertices 1..n-1.
inline std::vector<Framing> framings_containing(const EulerianCycle& c) {
    const DartGraph& g = c.graph;
    if (g.n > kFramingSearchLimit) throw LimitExceeded("framing search supported through n = 12");
    std::vector<std::array<signed char, 2>> rest(g.n);
    for (int v = 0; v < g.n; ++v) {
        signed char d = c.transitions.choice[v];
        int at = 0;
        for (signed char p = 0; p < 3; ++p)
            if (p != d) rest[v][at++] = p;
    }
    std::vector<Framing> out;
    TransitionSystem t2, t3;
    t2.choice.assign(g.n, 0);
    t3.choice.assign(g.n, 0);
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << (g.n - 1)); ++bits) {
        for (int v = 0; v < g.n; ++v) {
            int s = v == 0 ? 0 : int(bits >> (v - 1)) & 1;
            t2.choice[v] = rest[v][s];
            t3.choice[v] = rest[v][1 - s];
        }
        if (!is_eulerian(g, t2) || !is_eulerian(g, t3)) continue;
        std::array<TransitionSystem, 3> triple{c.transitions, t2, t3};
        std::sort(triple.begin(), triple.end());
        out.push_back(Framing{g, std::move(triple)});
    }
    return out;
}

// Framings obtainable from f by reassigning the three pairings at vertex v
// only (all 3! assignments except the identity; each candidate must stay
// single-circuit in all three cycles).
inline std::vector<Framing> mutate_at(const Framing& f, int v) {
    const DartGraph& g = f.graph;
    if (v < 0 || v >= g.n) throw MalformedInput("mutation vertex out of range");
    static constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<Framing> out;
    for (const auto& p : kPerm) {
        if (p[0] == 0 && p[1] == 1 && p[2] == 2) continue;
        std::array<TransitionSystem, 3> triple = f.cycles;
        for (int i = 0; i < 3; ++i)
            triple[i].choice[v] = static_cast<signed char>(p[triple[i].choice[v]]);
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) ok = is_eulerian(g, triple[i]);
        if (!ok) continue;
        std::sort(triple.begin(), triple.end());
        out.push_back(Framing{g, std::move(triple)});
    }
    return out;
}

} // namespace trieuler
