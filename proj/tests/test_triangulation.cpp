#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "trieuler/framed_code.hpp"
#include "trieuler/generate.hpp"
#include "trieuler/tri_io.hpp"
#include "trieuler/triangulation.hpp"

#include "oracles.hpp"

using namespace trieuler;

namespace {

std::vector<std::pair<DartGraph, Framing>> framed_instances(int n_max) {
    std::vector<std::pair<DartGraph, Framing>> out;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& g : generate_graphs(n))
            for (const auto& f : find_framings(g)) out.emplace_back(g, f);
    return out;
}

Triangulation dual_of(const DartGraph& g, const Framing& f) {
    return dualize(build_spine(g, f));
}

} // namespace

TEST_CASE("dual triangulation structure") {
    auto instances = framed_instances(4);
    instances.emplace_back(oracle::k5(), find_framings(oracle::k5()).front());
    instances.emplace_back(oracle::octahedron(), find_framings(oracle::octahedron()).front());
    for (const auto& [g, f] : instances) {
        Triangulation t = dual_of(g, f);
        REQUIRE(t.n == g.n);
        REQUIRE(t.tets.size() == size_t(g.n));
        // gluing is a fixed-point-free involution on faces
        for (int v = 0; v < t.n; ++v)
            for (int face = 0; face < 4; ++face) {
                const FaceGluing& glue = t.tets[v][face];
                REQUIRE_FALSE((glue.tet == v && glue.face == face));
                const FaceGluing& back = t.tets[glue.tet][glue.face];
                REQUIRE(back.tet == v);
                REQUIRE(back.face == face);
            }
        // exactly three edge classes of valence 2n covering all 6n tet edges
        size_t covered = 0;
        for (int c = 0; c < 3; ++c) {
            REQUIRE(t.edge_classes[c].size() == size_t(2 * g.n));
            covered += t.edge_classes[c].size();
            for (auto [tet, pair] : t.edge_classes[c]) REQUIRE(t.owner[tet][pair] == c);
        }
        REQUIRE(covered == size_t(6 * g.n));
    }
}

TEST_CASE("edge classes close up like a manifold") {
    auto instances = framed_instances(4);
    instances.emplace_back(oracle::k5(), find_framings(oracle::k5()).front());
    instances.emplace_back(oracle::octahedron(), find_framings(oracle::octahedron()).front());
    for (const auto& [g, f] : instances) {
        OrientationReport report = orientation_check(dual_of(g, f));
        REQUIRE(report.manifold_ok);
    }
}

TEST_CASE("dualizing a corrupted spine fails") {
    DartGraph g = oracle::k5();
    SpineComplex s = build_spine(g, find_framings(g).front());
    // Swap two corners with different owners at vertex 0: some face of the
    // corresponding tetrahedron then carries a duplicated disk label and
    // misses another, so the rotation orbits cannot close consistently.
    int a = 0, b = 1;
    while (s.corner_table[0][a] == s.corner_table[0][b]) ++b;
    std::swap(s.corner_table[0][a], s.corner_table[0][b]);
    REQUIRE_THROWS_AS(dualize(s), Error);
}

TEST_CASE("boundary surface invariants") {
    auto instances = framed_instances(4);
    instances.emplace_back(oracle::k5(), find_framings(oracle::k5()).front());
    instances.emplace_back(oracle::octahedron(), find_framings(oracle::octahedron()).front());
    for (const auto& [g, f] : instances) {
        Triangulation t = dual_of(g, f);
        BoundarySurface b = boundary(t);
        const int n = g.n;
        REQUIRE(b.triangle_count == 4 * n);
        REQUIRE(b.side_count == 6 * n);
        REQUIRE(b.vertex_orbits == 6);
        REQUIRE(b.component_count == 1);
        REQUIRE(b.euler_char == 6 - 2 * n);
        if (b.orientable)
            REQUIRE(b.euler_char == 2 - 2 * b.genus);
        else
            REQUIRE(b.euler_char == 2 - b.genus);
        REQUIRE(int(b.triangle_component.size()) == 4 * n);
        for (int id : b.triangle_component) REQUIRE(id == 0);

        GammaGraph gamma = gamma_graph(t, b);
        REQUIRE(gamma.vertex_count == 1);
        REQUIRE(gamma.is_wedge_of_three_circles());
    }
}

TEST_CASE("spot instances at n = 7 and 8 satisfy the same invariants") {
    for (int k : {7, 8}) {
        DartGraph g = oracle::circulant(k, {1, 2});
        auto framings = find_framings(g);
        REQUIRE(!framings.empty());
        Triangulation t = dual_of(g, framings.front());
        for (int c = 0; c < 3; ++c) REQUIRE(t.edge_classes[c].size() == size_t(2 * k));
        REQUIRE(orientation_check(t).manifold_ok);
        BoundarySurface b = boundary(t);
        REQUIRE(b.component_count == 1);
        REQUIRE(b.euler_char == 6 - 2 * k);
        REQUIRE(gamma_graph(t, b).is_wedge_of_three_circles());
    }
}

TEST_CASE("export produces the documented JSON and round-trips") {
    DartGraph g = oracle::k5();
    Triangulation t = dual_of(g, find_framings(g).front());
    REQUIRE_THROWS_AS(export_triangulation(t, "snappea"), UnsupportedFormat);

    std::string doc = export_triangulation(t, kTriJsonFormat);
    Triangulation back = import_triangulation(doc);
    REQUIRE(back.n == t.n);
    for (int v = 0; v < t.n; ++v)
        for (int face = 0; face < 4; ++face) REQUIRE(back.tets[v][face] == t.tets[v][face]);
    for (int c = 0; c < 3; ++c) REQUIRE(back.edge_classes[c] == t.edge_classes[c]);
    REQUIRE(export_triangulation(back, kTriJsonFormat) == doc);

    // n=5: five tetrahedron records, twenty gluing entries
    REQUIRE(doc.find("\"n\": 5") != std::string::npos);
    size_t count = 0;
    for (size_t at = doc.find("\"glued_to\""); at != std::string::npos;
         at = doc.find("\"glued_to\"", at + 1))
        ++count;
    REQUIRE(count == 20);
}

TEST_CASE("isomorphic framed graphs export identical documents") {
    std::mt19937 rng(99);
    DartGraph g = oracle::k5();
    Framing f = find_framings(g).front();
    Framing moved = oracle::random_relabel(f, rng);
    auto via_canonical = [](const Framing& fr) {
        Framing rep = framed_graph_from_code(framed_canonical_code(fr));
        return export_triangulation(dual_of(rep.graph, rep), kTriJsonFormat);
    };
    REQUIRE(via_canonical(f) == via_canonical(moved));
}

TEST_CASE("import validates its input") {
    DartGraph g = oracle::k5();
    std::string doc = export_triangulation(dual_of(g, find_framings(g).front()), kTriJsonFormat);

    REQUIRE_THROWS_AS(import_triangulation("not json"), MalformedInput);

    // break the involution: point one gluing somewhere else
    std::string broken = doc;
    size_t at = broken.find("\"glued_to\": [");
    REQUIRE(at != std::string::npos);
    size_t digit = broken.find_first_of("0123456789", at);
    broken[digit] = broken[digit] == '4' ? '3' : '4';
    REQUIRE_THROWS_AS(import_triangulation(broken), MalformedInput);
}
