#pragma once

// Independent re-verification of census output: rebuild the framed graph
// from its canonical code, recompute every invariant, and (for full records)
// compare stored fields against the recomputation.

#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"

#include "trieuler/census.hpp"
#include "trieuler/framed_code.hpp"
#include "trieuler/geometry.hpp"

namespace trieuler {

struct VerifyReport {
    std::string framed_hex;
    nlohmann::ordered_json recomputed;
    std::vector<std::string> problems; // empty means the instance verifies
    bool ok() const { return problems.empty(); }
};

// Recompute all invariants from a framed canonical code alone.  Checks that
// the code round-trips and that the instance passes the full quarantine
// gate; for n >= 4 the geometry is cross-checked against its defining
// identity cosh(l) = cos(theta) / (2 cos(theta) - 1).
inline VerifyReport verify_framed_code(const std::string& framed_hex) {
    VerifyReport report;
    report.framed_hex = framed_hex;

    Framing f = framed_graph_from_code(code_from_hex(framed_hex));
    std::string round_trip = framed_code_hex(framed_canonical_code(f));
    if (round_trip != framed_hex)
        report.problems.push_back("canonical code does not round-trip: got " + round_trip);

    std::string graph_hex = code_hex(canonical_code(f.graph));
    RecordBundle bundle =
        assemble_record(f.graph, graph_hex, f.graph.is_simple(), is_three_connected(f.graph),
                        automorphism_order(f.graph), f, round_trip);
    report.recomputed = bundle.record;
    for (const auto& reason : bundle.failures) report.problems.push_back(reason);

    if (f.graph.n >= 4) {
        TruncTetGeometry geo = trunc_tet_geometry(f.graph.n);
        double lhs = std::cosh(geo.edge_length);
        double rhs = std::cos(geo.theta) / (2.0 * std::cos(geo.theta) - 1.0);
        if (std::abs(lhs - rhs) > 1e-12)
            report.problems.push_back("edge length fails its defining identity");
    }
    return report;
}

// Verify a full census record (one JSONL line already parsed): recompute
// from the framed code and require every stored field to match.  Numeric
// geometry fields are compared to 1e-9; all other fields must be equal.
inline VerifyReport verify_record(const nlohmann::json& record) {
    VerifyReport report = verify_framed_code(record.at("framed_code").get<std::string>());

    auto expect_equal = [&](const char* field, const nlohmann::json& stored,
                            const nlohmann::json& fresh) {
        if (stored != fresh)
            report.problems.push_back(std::string("stored ") + field +
                                      " disagrees with recomputation");
    };
    const auto& fresh = report.recomputed;
    expect_equal("n", record.at("n"), fresh.at("n"));
    expect_equal("graph_code", record.at("graph_code"), fresh.at("graph_code"));
    expect_equal("flags", record.at("flags"), fresh.at("flags"));
    expect_equal("spine", record.at("spine"), fresh.at("spine"));
    expect_equal("tri", record.at("tri"), fresh.at("tri"));
    expect_equal("boundary", record.at("boundary"), fresh.at("boundary"));

    const auto& sg = record.at("geometry");
    const auto& fg = fresh.at("geometry");
    if (sg.is_null() != fg.is_null()) {
        report.problems.push_back("stored geometry presence disagrees with recomputation");
    } else if (!sg.is_null()) {
        for (const char* key : {"theta", "edge_length", "tet_volume", "total_volume"}) {
            double a = sg.at(key).get<double>();
            double b = fg.at(key).get<double>();
            if (std::abs(a - b) > 1e-9)
                report.problems.push_back(std::string("stored geometry.") + key +
                                          " differs from recomputation by more than 1e-9");
        }
    }
    return report;
}

} // namespace trieuler
