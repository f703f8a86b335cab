#pragma once

// The ideal triangulation dual to the spine, its truncated boundary surface,
// and the Gamma graph.
//
// Dual dictionary (per true vertex v of the spine, one tetrahedron):
//   face f of tet v        <-> dart 4v+f           (f = 0..3)
//   tet edge               <-> local dart-pair     (6 per tet)
//   tet edge on faces      {k,l} = its pair        (endpoint vertices = the
//                                                   complementary pair)
// Face f of tet v is glued to the face of the opposite dart eps(4v+f).  The
// three corner slots of a face are labeled by the three disks (slot c of
// face f = the pair {f, tau_c(f)} owned by disk c), so every gluing matches
// corner slots by label.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "trieuler/dart_graph.hpp"
#include "trieuler/errors.hpp"
#include "trieuler/spine.hpp"

namespace trieuler {

struct FaceGluing {
    int tet = -1, face = -1;
    std::array<int, 3> corner_map{0, 1, 2}; // slot c -> slot corner_map[c]
    bool operator==(const FaceGluing& o) const {
        return tet == o.tet && face == o.face && corner_map == o.corner_map;
    }
};

struct Triangulation {
    int n = 0;
    std::vector<std::array<FaceGluing, 4>> tets;
    // owner[tet][pair index] = disk label 0..2 of that tet edge
    std::vector<std::array<int, 6>> owner;
    // edge_classes[c] = sorted list of (tet, pair index) in class c
    std::array<std::vector<std::array<int, 2>>, 3> edge_classes;

    // The unique pair at `tet` containing local dart `f` with label `c`.
    int slot_pair(int tet, int f, int c) const {
        for (int x = 0; x < 4; ++x) {
            if (x == f) continue;
            int p = local_pair_index(f, x);
            if (owner[tet][p] == c) return p;
        }
        throw InconsistentComplex("face slot has no owning tet edge");
    }
};

namespace detail {

// One rotation step around a tet edge: leave the corner (v, pair {i,j})
// through face j; the glued face receives the corner at its slot of the same
// label.  Returns (tet', pair', entering face').
inline std::array<int, 3> rotate_corner(const Triangulation& t, int v, int pair, int exit_face) {
    int i = kLocalPair[pair][0], j = kLocalPair[pair][1];
    if (exit_face != i && exit_face != j) throw InconsistentComplex("exit face not on tet edge");
    const FaceGluing& glue = t.tets[v][exit_face];
    int label = t.owner[v][pair];
    int p2 = t.slot_pair(glue.tet, glue.face, label);
    return {glue.tet, p2, glue.face};
}

} // namespace detail

// Build the dual triangulation of a verified spine and compute its edge
// classes by orbit closure.
inline Triangulation dualize(const SpineComplex& s) {
    const DartGraph& g = s.graph;
    Triangulation t;
    t.n = g.n;
    t.tets.resize(g.n);
    t.owner = s.corner_table;
    for (int d = 0; d < g.dart_count(); ++d) {
        int e = g.eps[d];
        t.tets[DartGraph::vertex_of(d)][DartGraph::local_of(d)] =
            FaceGluing{DartGraph::vertex_of(e), DartGraph::local_of(e), {0, 1, 2}};
    }

    // Undirected orbit closure over corners (tet edges).
    std::vector<std::array<int, 6>> cls(g.n, {-1, -1, -1, -1, -1, -1});
    int found = 0;
    for (int v0 = 0; v0 < g.n; ++v0)
        for (int p0 = 0; p0 < 6; ++p0) {
            if (cls[v0][p0] != -1) continue;
            if (found >= 3) throw DualizationFailure("more than three tet-edge classes");
            int label = t.owner[v0][p0];
            std::vector<std::array<int, 2>> members;
            std::vector<std::array<int, 2>> stack{{v0, p0}};
            cls[v0][p0] = found;
            while (!stack.empty()) {
                auto [v, p] = stack.back();
                stack.pop_back();
                members.push_back({v, p});
                if (t.owner[v][p] != label)
                    throw DualizationFailure("tet-edge class mixes disk labels");
                for (int side = 0; side < 2; ++side) {
                    auto [v2, p2, enter] = detail::rotate_corner(t, v, p, kLocalPair[p][side]);
                    if (cls[v2][p2] == -1) {
                        cls[v2][p2] = found;
                        stack.push_back({v2, p2});
                    } else if (cls[v2][p2] != found) {
                        throw DualizationFailure("tet-edge orbits are inconsistent");
                    }
                }
            }
            if (label < 0 || label > 2 || !t.edge_classes[label].empty())
                throw DualizationFailure("disk label does not index a unique class");
            std::sort(members.begin(), members.end());
            t.edge_classes[label] = std::move(members);
            ++found;
        }
    if (found != 3) throw DualizationFailure("expected exactly three tet-edge classes");

    // Directed closure: rotating one way around a class returns to the
    // start corner with the same entering face after exactly class-size
    // steps (the opposite direction is the mirror orbit).
    for (int c = 0; c < 3; ++c) {
        auto [v0, p0] = std::pair{t.edge_classes[c][0][0], t.edge_classes[c][0][1]};
        int enter0 = kLocalPair[p0][0];
        int v = v0, p = p0, enter = enter0;
        size_t steps = 0, size = t.edge_classes[c].size();
        do {
            int exit = kLocalPair[p][0] == enter ? kLocalPair[p][1] : kLocalPair[p][0];
            auto [v2, p2, enter2] = detail::rotate_corner(t, v, p, exit);
            v = v2;
            p = p2;
            enter = enter2;
            ++steps;
        } while (!(v == v0 && p == p0 && enter == enter0) && steps <= 2 * size);
        if (steps != size)
            throw DualizationFailure("rotation around a tet edge does not close consistently");
    }
    return t;
}

struct OrientationReport {
    bool manifold_ok = false;
    bool m_orientable = false;
};

namespace detail {

// Vertex-label bijection induced by gluing face `f` of tet v: face vertex
// x maps through the slot of the tet edge {f,x}'s label; the off-face
// vertex f maps to the glued face's label.
inline std::array<int, 4> induced_vertex_map(const Triangulation& t, int v, int f) {
    const FaceGluing& glue = t.tets[v][f];
    std::array<int, 4> m{-1, -1, -1, -1};
    m[f] = glue.face;
    for (int x = 0; x < 4; ++x) {
        if (x == f) continue;
        int label = t.owner[v][local_pair_index(f, x)];
        int p2 = t.slot_pair(glue.tet, glue.face, label);
        // The image vertex is the end of the glued slot other than the face.
        int a = kLocalPair[p2][0], b = kLocalPair[p2][1];
        m[x] = a == glue.face ? b : a;
    }
    return m;
}

inline int permutation_sign(const std::array<int, 4>& m) {
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (m[i] > m[j]) sign = -sign;
    return sign;
}

} // namespace detail

// manifold_ok: every tet-edge class closes with the identity on its ends
// (tracked through the induced vertex maps) and without reversing the
// rotation direction.  m_orientable: a +-1 assignment to tetrahedra exists
// making every face gluing orientation-reversing (s_v * s_v' * sign = -1).
inline OrientationReport orientation_check(const Triangulation& t) {
    OrientationReport report;

    report.manifold_ok = true;
    for (int c = 0; c < 3 && report.manifold_ok; ++c) {
        auto [v0, p0] = std::pair{t.edge_classes[c][0][0], t.edge_classes[c][0][1]};
        int enter0 = kLocalPair[p0][0];
        // Endpoint vertices of the tet edge = complement of its pair.
        std::array<int, 2> ends{-1, -1};
        for (int x = 0, at = 0; x < 4; ++x)
            if (x != kLocalPair[p0][0] && x != kLocalPair[p0][1]) ends[at++] = x;
        std::array<int, 2> ends0 = ends;
        int v = v0, p = p0, enter = enter0;
        size_t size = t.edge_classes[c].size();
        for (size_t step = 0; step < size; ++step) {
            int exit = kLocalPair[p][0] == enter ? kLocalPair[p][1] : kLocalPair[p][0];
            auto m = detail::induced_vertex_map(t, v, exit);
            ends = {m[ends[0]], m[ends[1]]};
            auto [v2, p2, enter2] = detail::rotate_corner(t, v, p, exit);
            v = v2;
            p = p2;
            enter = enter2;
        }
        if (!(v == v0 && p == p0 && enter == enter0 && ends == ends0))
            report.manifold_ok = false;
    }

    std::vector<int> sign(t.n, 0);
    report.m_orientable = true;
    for (int root = 0; root < t.n && report.m_orientable; ++root) {
        if (sign[root] != 0) continue;
        sign[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty() && report.m_orientable) {
            int v = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const FaceGluing& glue = t.tets[v][f];
                int s = detail::permutation_sign(detail::induced_vertex_map(t, v, f));
                int want = -s * sign[v]; // s_v * s_v' * sign = -1
                if (sign[glue.tet] == 0) {
                    sign[glue.tet] = want;
                    stack.push_back(glue.tet);
                } else if (sign[glue.tet] != want) {
                    report.m_orientable = false;
                    break;
                }
            }
        }
    }
    return report;
}

struct BoundarySurface {
    int triangle_count = 0; // 4n truncation triangles, one per (tet, vertex)
    int side_count = 0;     // 6n boundary edges after gluing
    int vertex_orbits = 0;
    int component_count = 0;
    int euler_char = 0;
    bool orientable = false;
    int genus = 0;                    // orientable: chi = 2-2g; else chi = 2-k
    std::vector<int> triangle_component; // component id per triangle (v,x) = 4v+x
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace detail

// Truncate every ideal vertex: triangle (v,x) per tet vertex; its corners
// sit on the tet edges at x (named by the other end y), its sides lie on
// the faces f != x and are glued by the face gluings.
inline BoundarySurface boundary(const Triangulation& t) {
    const int n = t.n;
    auto tri_id = [](int v, int x) { return 4 * v + x; };
    auto corner_id = [&](int v, int x, int y) { return 12 * v + 3 * x + (y > x ? y - 1 : y); };

    // Side gluing: (v, x, f) -> (v', x', f') with x' through the slot of
    // the tet edge {f,x}'s label.
    auto glue_side = [&](int v, int x, int f) {
        auto m = detail::induced_vertex_map(t, v, f);
        const FaceGluing& glue = t.tets[v][f];
        return std::array<int, 3>{glue.tet, m[x], glue.face};
    };

    detail::UnionFind comp(4 * n), verts(12 * n);
    BoundarySurface b;
    b.triangle_count = 4 * n;
    b.side_count = 6 * n;
    for (int v = 0; v < n; ++v)
        for (int x = 0; x < 4; ++x)
            for (int f = 0; f < 4; ++f) {
                if (f == x) continue;
                auto [v2, x2, f2] = glue_side(v, x, f);
                if (x2 == f2) throw NotAManifold("side glues onto a truncated vertex");
                comp.unite(tri_id(v, x), tri_id(v2, x2));
                // The two corners of side (v,x,f) are at the tet edges
                // {x,y}, y outside {x,f}; y maps like x does.
                auto m = detail::induced_vertex_map(t, v, f);
                for (int y = 0; y < 4; ++y) {
                    if (y == x || y == f) continue;
                    verts.unite(corner_id(v, x, y), corner_id(v2, x2, m[y]));
                }
            }

    std::vector<int> comp_of(4 * n, -1);
    for (int i = 0; i < 4 * n; ++i) {
        int r = comp.find(i);
        if (comp_of[r] == -1) comp_of[r] = b.component_count++;
    }
    b.triangle_component.resize(4 * n);
    for (int i = 0; i < 4 * n; ++i) b.triangle_component[i] = comp_of[comp.find(i)];

    std::vector<char> seen(12 * n, 0);
    for (int i = 0; i < 12 * n; ++i) {
        int r = verts.find(i);
        if (!seen[r]) {
            seen[r] = 1;
            ++b.vertex_orbits;
        }
    }
    b.euler_char = b.vertex_orbits - 6 * n + 4 * n;

    // Orientability: orient triangle (v,x) by the cyclic order of its sorted
    // sides s0<s1<s2 (corner opposite side s_k is named y = s_k); under +,
    // side s_k runs from corner s_{k+1} to corner s_{k+2} (indices mod 3).
    std::vector<int> orient(4 * n, 0);
    b.orientable = true;
    auto sides_of = [](int x) {
        std::array<int, 3> s;
        int at = 0;
        for (int f = 0; f < 4; ++f)
            if (f != x) s[at++] = f;
        return s; // already ascending
    };
    auto tail_of = [&](int v, int x, int f) {
        auto s = sides_of(x);
        int k = int(std::find(s.begin(), s.end(), f) - s.begin());
        (void)v;
        return s[(k + 1) % 3];
    };
    for (int root = 0; root < 4 * n && b.orientable; ++root) {
        if (orient[root] != 0) continue;
        orient[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty() && b.orientable) {
            int id = stack.back();
            stack.pop_back();
            int v = id / 4, x = id % 4;
            for (int f = 0; f < 4; ++f) {
                if (f == x) continue;
                auto [v2, x2, f2] = glue_side(v, x, f);
                auto m = detail::induced_vertex_map(t, v, f);
                int t1 = tail_of(v, x, f);
                // r = +1 when the gluing matches + directions of both sides.
                int r = m[t1] == tail_of(v2, x2, f2) ? 1 : -1;
                int want = -r * orient[id]; // o1 * o2 * r = -1
                int id2 = tri_id(v2, x2);
                if (orient[id2] == 0) {
                    orient[id2] = want;
                    stack.push_back(id2);
                } else if (orient[id2] != want) {
                    b.orientable = false;
                    break;
                }
            }
        }
    }
    b.genus = b.orientable ? (2 - b.euler_char) / 2 : 2 - b.euler_char;
    return b;
}

struct GammaGraph {
    int vertex_count = 0;                       // boundary components
    std::array<std::array<int, 2>, 3> edges{};  // endpoint components per class
    bool is_wedge_of_three_circles() const {
        if (vertex_count != 1) return false;
        for (const auto& e : edges)
            if (e[0] != e[1]) return false;
        return true;
    }
};

// One edge per tet-edge class, joining the boundary components that contain
// the truncation triangles at the class's two ends.
inline GammaGraph gamma_graph(const Triangulation& t, const BoundarySurface& b) {
    GammaGraph gamma;
    gamma.vertex_count = b.component_count;
    for (int c = 0; c < 3; ++c) {
        auto [v, p] = std::pair{t.edge_classes[c][0][0], t.edge_classes[c][0][1]};
        std::array<int, 2> ends{-1, -1};
        for (int x = 0, at = 0; x < 4; ++x)
            if (x != kLocalPair[p][0] && x != kLocalPair[p][1]) ends[at++] = x;
        gamma.edges[c] = {b.triangle_component[4 * v + ends[0]],
                          b.triangle_component[4 * v + ends[1]]};
    }
    return gamma;
}

} // namespace trieuler
