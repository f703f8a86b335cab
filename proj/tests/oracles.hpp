#pragma once

// Independent reference implementations used only by the tests.  Everything
// here is deliberately brute-force and structurally different from the
// library code it checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "trieuler/dart_graph.hpp"
#include "trieuler/euler.hpp"
#include "trieuler/framing.hpp"

namespace oracle {

using trieuler::DartGraph;
using trieuler::Framing;
using trieuler::TransitionSystem;

// ---------------------------------------------------------------- graphs --

inline DartGraph from_edges(int n, const std::vector<std::array<int, 2>>& edges) {
    return trieuler::make_dart_graph(n, edges);
}

// Circulant C_k(jumps): i adjacent to i +- j for each jump j.
inline DartGraph circulant(int k, const std::vector<int>& jumps) {
    std::vector<std::array<int, 2>> edges;
    for (int i = 0; i < k; ++i)
        for (int j : jumps) edges.push_back({i, (i + j) % k});
    return from_edges(k, edges);
}

inline DartGraph k5() { return circulant(5, {1, 2}); }
inline DartGraph octahedron() { return circulant(6, {1, 2}); }

// Edge-multiplicity matrix; loops count once on the diagonal.
inline std::vector<std::vector<int>> multiplicity(const DartGraph& g) {
    std::vector<std::vector<int>> a(g.n, std::vector<int>(g.n, 0));
    for (auto [d, e] : g.edge_darts()) {
        int u = DartGraph::vertex_of(d), v = DartGraph::vertex_of(e);
        if (u == v)
            ++a[u][u];
        else {
            ++a[u][v];
            ++a[v][u];
        }
    }
    return a;
}

inline bool respects(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
                     const std::vector<int>& p) {
    int n = int(a.size());
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (a[u][v] != b[p[u]][p[v]]) return false;
    return true;
}

inline bool brute_isomorphic(const DartGraph& g1, const DartGraph& g2) {
    if (g1.n != g2.n) return false;
    auto a = multiplicity(g1), b = multiplicity(g2);
    std::vector<int> p(g1.n);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (respects(a, b, p)) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline long brute_automorphism_count(const DartGraph& g) {
    auto a = multiplicity(g);
    std::vector<int> p(g.n);
    std::iota(p.begin(), p.end(), 0);
    long count = 0;
    do {
        if (respects(a, a, p)) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

// --------------------------------------------------------- framed graphs --

// All local dart maps L (permutations of {0,1,2,3}) conjugating pairing p1
// to pairing p2: L(partner_p1(j)) == partner_p2(L(j)).
inline std::vector<std::array<int, 4>> conjugating_maps(int p1, int p2) {
    std::vector<std::array<int, 4>> out;
    std::array<int, 4> L{0, 1, 2, 3};
    do {
        bool ok = true;
        for (int j = 0; j < 4 && ok; ++j)
            ok = L[trieuler::kPairingPartner[p1][j]] == trieuler::kPairingPartner[p2][L[j]];
        if (ok) out.push_back(L);
    } while (std::next_permutation(L.begin(), L.end()));
    return out;
}

// Local maps compatible with a fixed vertex image and color permutation:
// for every color c, the pairing of cycle c at v must map to the pairing of
// cycle cperm[c] at the image vertex.
inline std::vector<std::array<int, 4>> local_candidates(const Framing& f1, const Framing& f2,
                                                        int v, int image,
                                                        const std::array<int, 3>& cperm) {
    std::array<int, 4> L{0, 1, 2, 3};
    std::vector<std::array<int, 4>> out;
    do {
        bool ok = true;
        for (int c = 0; c < 3 && ok; ++c) {
            int p1 = f1.cycles[c].choice[v];
            int p2 = f2.cycles[cperm[c]].choice[image];
            for (int j = 0; j < 4 && ok; ++j)
                ok = L[trieuler::kPairingPartner[p1][j]] == trieuler::kPairingPartner[p2][L[j]];
        }
        if (ok) out.push_back(L);
    } while (std::next_permutation(L.begin(), L.end()));
    return out;
}

// Does a dart bijection over the given vertex bijection and color
// permutation carry (eps, cycles) of f1 to f2?  Backtracks over per-vertex
// local maps, pruning on edge consistency.
inline bool framed_iso_over(const Framing& f1, const Framing& f2, const std::vector<int>& vperm,
                            const std::array<int, 3>& cperm) {
    const int n = f1.graph.n;
    std::vector<std::vector<std::array<int, 4>>> cands(n);
    for (int v = 0; v < n; ++v) {
        cands[v] = local_candidates(f1, f2, v, vperm[v], cperm);
        if (cands[v].empty()) return false;
    }
    std::vector<int> pick(n, -1);
    auto phi = [&](int d) {
        int v = DartGraph::vertex_of(d);
        return 4 * vperm[v] + cands[v][pick[v]][DartGraph::local_of(d)];
    };
    std::function<bool(int)> place = [&](int v) -> bool {
        if (v == n) return true;
        for (size_t i = 0; i < cands[v].size(); ++i) {
            pick[v] = int(i);
            bool ok = true;
            for (int j = 0; j < 4 && ok; ++j) {
                int d = DartGraph::dart_of(v, j);
                int e = f1.graph.eps[d];
                if (DartGraph::vertex_of(e) <= v)
                    ok = f2.graph.eps[phi(d)] == phi(e);
            }
            if (ok && place(v + 1)) return true;
        }
        pick[v] = -1;
        return false;
    };
    return place(0);
}

inline const std::array<std::array<int, 3>, 6>& color_perms() {
    static const std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    return perms;
}

inline bool brute_framed_isomorphic(const Framing& f1, const Framing& f2) {
    if (f1.graph.n != f2.graph.n) return false;
    std::vector<int> vperm(f1.graph.n);
    std::iota(vperm.begin(), vperm.end(), 0);
    do {
        for (const auto& cperm : color_perms())
            if (framed_iso_over(f1, f2, vperm, cperm)) return true;
    } while (std::next_permutation(vperm.begin(), vperm.end()));
    return false;
}

// Rebuild a framing after an arbitrary dart relabeling: vertex bijection
// vperm, color permutation cperm, and one local dart permutation per vertex.
inline Framing relabel_framed(const Framing& f, const std::vector<int>& vperm,
                              const std::array<int, 3>& cperm,
                              const std::vector<std::array<int, 4>>& locals) {
    const int n = f.graph.n;
    auto phi = [&](int d) {
        return 4 * vperm[DartGraph::vertex_of(d)] + locals[DartGraph::vertex_of(d)][DartGraph::local_of(d)];
    };
    DartGraph g2;
    g2.n = n;
    g2.eps.assign(4 * n, -1);
    for (int d = 0; d < 4 * n; ++d) g2.eps[phi(d)] = phi(f.graph.eps[d]);

    std::array<TransitionSystem, 3> cycles2;
    for (int c = 0; c < 3; ++c) cycles2[cperm[c]].choice.assign(n, -1);
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < 3; ++c) {
            int p = f.cycles[c].choice[v];
            // image pairing pairs locals[v][0] with locals[v][partner_p(0)]
            int q = trieuler::pairing_of_pair(locals[v][0],
                                              locals[v][trieuler::kPairingPartner[p][0]]);
            cycles2[cperm[c]].choice[vperm[v]] = static_cast<signed char>(q);
        }
    return trieuler::make_framing(g2, cycles2[0], cycles2[1], cycles2[2]);
}

// Random relabeling driven by a seeded engine, for code-invariance tests.
inline Framing random_relabel(const Framing& f, std::mt19937& rng) {
    const int n = f.graph.n;
    std::vector<int> vperm(n);
    std::iota(vperm.begin(), vperm.end(), 0);
    std::shuffle(vperm.begin(), vperm.end(), rng);
    std::array<int, 3> cperm = color_perms()[rng() % 6];
    std::vector<std::array<int, 4>> locals(n);
    for (auto& L : locals) {
        L = {0, 1, 2, 3};
        std::shuffle(L.begin(), L.end(), rng);
    }
    return relabel_framed(f, vperm, cperm, locals);
}

// -------------------------------------------------------------- geometry --

// Lobachevsky function by its Fourier series (1/2) sum sin(2kx)/k^2 with an
// Abel-summation tail bound 1/((K+1)^2 |sin x|); good to ~1e-10 away from
// multiples of pi.
inline double fourier_lobachevsky(double x, long terms = 200000) {
    long double sum = 0.0L;
    for (long k = terms; k >= 1; --k)
        sum += std::sin(2.0L * k * x) / (static_cast<long double>(k) * k);
    return double(sum / 2.0L);
}

inline double det3(const double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// cosh of the internal edge length from the Gram matrix of the four face
// planes (unit diagonal, -cos theta off-diagonal), via the cofactor ratio
// |C_01| / sqrt(C_00 C_11).  Purely numeric; no closed form.
inline double gram_cosh_oracle(double theta) {
    double c = std::cos(theta);
    double G[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) G[i][j] = i == j ? 1.0 : -c;
    auto cofactor = [&](int r, int s) {
        double m[3][3];
        for (int i = 0, mi = 0; i < 4; ++i) {
            if (i == r) continue;
            for (int j = 0, mj = 0; j < 4; ++j) {
                if (j == s) continue;
                m[mi][mj] = G[i][j];
                ++mj;
            }
            ++mi;
        }
        return ((r + s) % 2 == 0 ? 1.0 : -1.0) * det3(m);
    };
    double c00 = cofactor(0, 0), c11 = cofactor(1, 1), c01 = cofactor(0, 1);
    return std::abs(c01) / std::sqrt(c00 * c11);
}

} // namespace oracle
