#pragma once

// JSON serialization of triangulations (gluing-table format).
//
// Layout: {"n": int,
//          "tets": [{"faces": [{"glued_to": [tet, face],
//                               "corner_map": [i0,i1,i2]} x4]} x n],
//          "edge_classes": [[[tet, edge_index], ...] x3]}
// edge_index is the local-pair index 0..5 in the fixed order
// (01,02,03,12,13,23); corner slots are indexed by the cycles of the
// framing's sorted triple; arrays are sorted; output is LF-terminated UTF-8.

#include <string>
#include <vector>

#include "json.hpp"

#include "trieuler/errors.hpp"
#include "trieuler/triangulation.hpp"

namespace trieuler {

inline constexpr const char* kTriJsonFormat = "tri-json";

inline std::string export_triangulation(const Triangulation& t, const std::string& format) {
    if (format != kTriJsonFormat) throw UnsupportedFormat("unknown export format: " + format);
    nlohmann::ordered_json doc;
    doc["n"] = t.n;
    doc["tets"] = nlohmann::ordered_json::array();
    for (int v = 0; v < t.n; ++v) {
        nlohmann::ordered_json faces = nlohmann::ordered_json::array();
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& glue = t.tets[v][f];
            faces.push_back({{"glued_to", {glue.tet, glue.face}},
                             {"corner_map", {glue.corner_map[0], glue.corner_map[1],
                                             glue.corner_map[2]}}});
        }
        doc["tets"].push_back({{"faces", std::move(faces)}});
    }
    doc["edge_classes"] = nlohmann::ordered_json::array();
    for (int c = 0; c < 3; ++c) {
        nlohmann::ordered_json cls = nlohmann::ordered_json::array();
        for (const auto& [tet, pair] : t.edge_classes[c]) cls.push_back({tet, pair});
        doc["edge_classes"].push_back(std::move(cls));
    }
    return doc.dump(2) + "\n";
}

inline Triangulation import_triangulation(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("triangulation JSON: ") + e.what());
    }
    Triangulation t;
    try {
        t.n = doc.at("n").get<int>();
        if (t.n <= 0) throw MalformedInput("tetrahedron count must be positive");
        const auto& tets = doc.at("tets");
        if (int(tets.size()) != t.n) throw MalformedInput("tets array length mismatch");
        t.tets.resize(t.n);
        for (int v = 0; v < t.n; ++v) {
            const auto& faces = tets[v].at("faces");
            if (faces.size() != 4) throw MalformedInput("each tet needs 4 faces");
            for (int f = 0; f < 4; ++f) {
                const auto& jf = faces[f];
                FaceGluing glue;
                glue.tet = jf.at("glued_to").at(0).get<int>();
                glue.face = jf.at("glued_to").at(1).get<int>();
                for (int c = 0; c < 3; ++c) glue.corner_map[c] = jf.at("corner_map").at(c).get<int>();
                if (glue.tet < 0 || glue.tet >= t.n || glue.face < 0 || glue.face > 3)
                    throw MalformedInput("gluing target out of range");
                t.tets[v][f] = glue;
            }
        }
        const auto& classes = doc.at("edge_classes");
        if (classes.size() != 3) throw MalformedInput("expected exactly 3 edge classes");
        t.owner.assign(t.n, {-1, -1, -1, -1, -1, -1});
        for (int c = 0; c < 3; ++c) {
            for (const auto& entry : classes[c]) {
                int tet = entry.at(0).get<int>();
                int pair = entry.at(1).get<int>();
                if (tet < 0 || tet >= t.n || pair < 0 || pair > 5)
                    throw MalformedInput("edge class entry out of range");
                if (t.owner[tet][pair] != -1)
                    throw MalformedInput("tet edge listed in two classes");
                t.owner[tet][pair] = c;
                t.edge_classes[c].push_back({tet, pair});
            }
            std::sort(t.edge_classes[c].begin(), t.edge_classes[c].end());
        }
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("triangulation JSON: ") + e.what());
    }
    for (int v = 0; v < t.n; ++v)
        for (int p = 0; p < 6; ++p)
            if (t.owner[v][p] == -1) throw MalformedInput("tet edge missing from edge classes");
    // Gluing must be a fixed-point-free involution on (tet, face) slots.
    for (int v = 0; v < t.n; ++v)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& glue = t.tets[v][f];
            const FaceGluing& back = t.tets[glue.tet][glue.face];
            if (back.tet != v || back.face != f)
                throw MalformedInput("face gluing is not an involution");
            if (glue.tet == v && glue.face == f)
                throw MalformedInput("face glued to itself");
            for (int c = 0; c < 3; ++c)
                if (back.corner_map[glue.corner_map[c]] != c)
                    throw MalformedInput("corner maps are not mutually inverse");
            // Slot c of any face is the class-c tet edge at that face, so a
            // gluing consistent with the edge classes must match labels.
            for (int c = 0; c < 3; ++c)
                if (glue.corner_map[c] != c)
                    throw MalformedInput("corner map contradicts the edge classes");
        }
    return t;
}

} // namespace trieuler
