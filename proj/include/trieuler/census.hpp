#pragma once

// Census orchestration: enumerate graph classes, find framings, classify by
// framed canonical code, compute every invariant, and persist deterministic
// JSONL plus a run manifest.
//
// Determinism contract: census-{n}.jsonl is byte-identical across reruns and
// across --jobs settings.  Records are kept as serialized lines and merged
// in sorted (framed_code) order; anything that varies between runs (wall
// time, timestamp) lives only in manifest.json.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "trieuler/canonical.hpp"
#include "trieuler/dart_graph.hpp"
#include "trieuler/errors.hpp"
#include "trieuler/framed_code.hpp"
#include "trieuler/framing.hpp"
#include "trieuler/generate.hpp"
#include "trieuler/geometry.hpp"
#include "trieuler/spine.hpp"
#include "trieuler/tri_io.hpp"
#include "trieuler/triangulation.hpp"

namespace trieuler {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kCensusLimit = 7; // n = 7 only behind an explicit flag

struct CensusOptions {
    int n_min = 1;
    int n_max = 4;
    bool simple_only = false;
    bool three_connected_only = false;
    bool allow_n7 = false;
    int jobs = 1;
    std::string out_dir;
};

// One classified manifold plus the reasons it would be quarantined (empty
// for sound records).
struct RecordBundle {
    std::string framed_hex;
    nlohmann::ordered_json record;
    std::vector<std::string> failures;
};

inline RecordBundle assemble_record(const DartGraph& g, const std::string& graph_hex,
                                    bool simple, bool three_connected, long aut_order,
                                    const Framing& f, const std::string& framed_hex) {
    RecordBundle out;
    out.framed_hex = framed_hex;

    SpineComplex spine = build_spine(g, f);
    SpecialReport special = verify_special(spine);
    HomologyReport hom = z2_homology(spine);
    Triangulation tri = dualize(spine);
    OrientationReport orient = orientation_check(tri);
    BoundarySurface bd = boundary(tri);
    GammaGraph gamma = gamma_graph(tri, bd);

    const int n = g.n;
    std::array<long, 3> valences{long(tri.edge_classes[0].size()),
                                 long(tri.edge_classes[1].size()),
                                 long(tri.edge_classes[2].size())};

    auto& rec = out.record;
    rec["n"] = n;
    rec["graph_code"] = graph_hex;
    rec["flags"] = {{"simple", simple},
                    {"three_connected", three_connected},
                    {"aut_order", aut_order}};
    rec["framed_code"] = out.framed_hex;
    rec["spine"] = {{"V", spine.true_vertices()},
                    {"E", spine.edge_count()},
                    {"F", SpineComplex::two_components()},
                    {"chi", spine.euler_characteristic()},
                    {"h2_rank", hom.h2_rank},
                    {"closed_surfaces", hom.closed_surface_count},
                    {"special_ok", special.all_ok()}};
    rec["tri"] = {{"edge_valences", {valences[0], valences[1], valences[2]}},
                  {"manifold_ok", orient.manifold_ok},
                  {"m_orientable", orient.m_orientable}};
    rec["boundary"] = {{"components", bd.component_count},
                       {"chi", bd.euler_char},
                       {"orientable", bd.orientable},
                       {"genus", bd.genus}};
    if (n >= 4) {
        TruncTetGeometry geo = trunc_tet_geometry(n);
        rec["geometry"] = {{"theta", geo.theta},
                           {"edge_length", geo.edge_length},
                           {"tet_volume", geo.tet_volume},
                           {"total_volume", double(n) * geo.tet_volume}};
    } else {
        rec["geometry"] = nullptr;
    }
    rec["provenance"] = {{"tool_version", kToolVersion}};

    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) out.failures.push_back(what);
    };
    expect(special.all_ok(), "spine is not special or a curve is orientation-reversing");
    expect(orient.manifold_ok, "edge-class return map is not the identity");
    expect(valences[0] == 2 * n && valences[1] == 2 * n && valences[2] == 2 * n,
           "edge-class valences differ from 2n");
    expect(spine.euler_characteristic() == 3 - n, "spine Euler characteristic is not 3-n");
    expect(hom.h2_rank == 2, "h2 rank is not 2");
    expect(hom.closed_surface_count == 3, "closed-surface count is not 3");
    expect(bd.component_count == 1, "boundary is not connected");
    expect(bd.euler_char == 6 - 2 * n, "boundary Euler characteristic is not 6-2n");
    expect(bd.vertex_orbits == 6, "boundary vertex orbits differ from 6");
    expect(gamma.is_wedge_of_three_circles(), "Gamma graph is not a wedge of three circles");
    return out;
}

namespace detail {

struct GraphOutput {
    std::vector<std::string> record_lines;
    std::vector<std::string> quarantine_lines;
};

inline void sort_by_framed_code(std::vector<std::string>& lines) {
    std::vector<std::pair<std::string, std::string>> keyed;
    keyed.reserve(lines.size());
    for (auto& line : lines)
        keyed.emplace_back(nlohmann::json::parse(line).at("framed_code").get<std::string>(),
                           std::move(line));
    std::sort(keyed.begin(), keyed.end());
    for (size_t i = 0; i < keyed.size(); ++i) lines[i] = std::move(keyed[i].second);
}

inline GraphOutput process_graph(const DartGraph& g) {
    GraphOutput out;
    std::string graph_hex = code_hex(canonical_code(g));
    bool simple = g.is_simple();
    bool three_conn = is_three_connected(g);
    long aut = automorphism_order(g);

    std::vector<std::string> seen_codes;
    for (const Framing& f : find_framings(g)) {
        std::string framed_hex = framed_code_hex(framed_canonical_code(f));
        if (std::find(seen_codes.begin(), seen_codes.end(), framed_hex) != seen_codes.end())
            continue;
        seen_codes.push_back(framed_hex);
        try {
            RecordBundle bundle =
                assemble_record(g, graph_hex, simple, three_conn, aut, f, framed_hex);
            if (bundle.failures.empty()) {
                out.record_lines.push_back(bundle.record.dump());
            } else {
                nlohmann::ordered_json q = bundle.record;
                q["quarantine_reasons"] = bundle.failures;
                out.quarantine_lines.push_back(q.dump());
            }
        } catch (const Error& e) {
            // A construction-stage failure is itself census data: quarantine it.
            nlohmann::ordered_json q;
            q["n"] = g.n;
            q["graph_code"] = graph_hex;
            q["framed_code"] = framed_hex;
            q["quarantine_reasons"] = {std::string("construction failed: ") + e.what()};
            out.quarantine_lines.push_back(q.dump());
        }
    }
    sort_by_framed_code(out.record_lines);
    sort_by_framed_code(out.quarantine_lines);
    return out;
}

inline void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoFailure("cannot write " + path.string());
    for (const auto& line : lines) file << line << '\n';
    if (!file.flush()) throw IoFailure("write failed for " + path.string());
}

inline std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoFailure("cannot read " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(file, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

// A part file is reusable iff every line parses and names this graph.
inline bool part_valid(const std::vector<std::string>& lines, const std::string& graph_hex,
                       int n) {
    for (const auto& line : lines) {
        try {
            auto j = nlohmann::json::parse(line);
            if (j.at("graph_code").get<std::string>() != graph_hex) return false;
            if (j.at("n").get<int>() != n) return false;
        } catch (...) {
            return false;
        }
    }
    return true;
}

} // namespace detail

struct CensusCounts {
    long records = 0;
    long simple = 0;
    long three_connected_simple = 0;
    long quarantined = 0;
};

struct RunManifest {
    CensusOptions options;
    std::vector<std::string> census_files;
    std::vector<std::pair<int, CensusCounts>> counts;
    double wall_seconds = 0.0;
    std::string timestamp;
};

inline nlohmann::ordered_json manifest_json(const RunManifest& m) {
    nlohmann::ordered_json j;
    j["parameters"] = {{"n_min", m.options.n_min},
                       {"n_max", m.options.n_max},
                       {"simple", m.options.simple_only},
                       {"three_connected", m.options.three_connected_only},
                       {"jobs", m.options.jobs}};
    j["inputs"] = nlohmann::ordered_json::array();
    j["outputs"] = m.census_files;
    j["counts"] = nlohmann::ordered_json::object();
    for (const auto& [n, c] : m.counts)
        j["counts"][std::to_string(n)] = {{"records", c.records},
                                          {"simple", c.simple},
                                          {"three_connected_simple", c.three_connected_simple},
                                          {"quarantined", c.quarantined}};
    j["wall_seconds"] = m.wall_seconds;
    j["timestamp"] = m.timestamp;
    j["tool_version"] = kToolVersion;
    return j;
}

inline RunManifest run_census(const CensusOptions& opts) {
    namespace fs = std::filesystem;
    if (opts.n_min < 1 || opts.n_max < opts.n_min) throw MalformedInput("bad n range");
    if (opts.n_max > kCensusLimit) throw LimitExceeded("census supported through n = 7");
    if (opts.n_max == 7 && !opts.allow_n7)
        throw LimitExceeded("n = 7 census requires the explicit opt-in flag");
    if (opts.out_dir.empty()) throw MalformedInput("output directory required");
    if (opts.jobs < 1) throw MalformedInput("jobs must be positive");

    auto t0 = std::chrono::steady_clock::now();
    fs::create_directories(fs::path(opts.out_dir) / "parts");

    RunManifest manifest;
    manifest.options = opts;

    std::vector<std::string> quarantine_all;
    for (int n = opts.n_min; n <= opts.n_max; ++n) {
        std::vector<DartGraph> graphs;
        for (DartGraph& g : generate_graphs(n, opts.simple_only)) {
            if (opts.three_connected_only && !is_three_connected(g)) continue;
            graphs.push_back(std::move(g));
        }

        std::vector<detail::GraphOutput> slots(graphs.size());
        std::vector<std::string> hexes(graphs.size());
        std::vector<char> from_parts(graphs.size(), 0);
        for (size_t i = 0; i < graphs.size(); ++i)
            hexes[i] = code_hex(canonical_code(graphs[i]));

        // Reuse per-graph part files from an earlier (possibly interrupted)
        // run when they validate; otherwise recompute.
        auto part_path = [&](size_t i, const char* kind) {
            return fs::path(opts.out_dir) / "parts" /
                   ("n" + std::to_string(n) + "-" + hexes[i] + "." + kind + ".jsonl");
        };
        for (size_t i = 0; i < graphs.size(); ++i) {
            auto rec_path = part_path(i, "records");
            auto quar_path = part_path(i, "quarantine");
            if (fs::exists(rec_path) && fs::exists(quar_path)) {
                auto rec_lines = detail::read_lines(rec_path);
                auto quar_lines = detail::read_lines(quar_path);
                if (detail::part_valid(rec_lines, hexes[i], n) &&
                    detail::part_valid(quar_lines, hexes[i], n)) {
                    slots[i] = {std::move(rec_lines), std::move(quar_lines)};
                    from_parts[i] = 1;
                }
            }
        }

        std::atomic<size_t> next{0};
        std::vector<std::exception_ptr> worker_errors(graphs.size());
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= graphs.size()) return;
                if (from_parts[i]) continue;
                try {
                    slots[i] = detail::process_graph(graphs[i]);
                } catch (...) {
                    worker_errors[i] = std::current_exception();
                }
            }
        };
        int jobs = int(std::min<size_t>(size_t(opts.jobs), std::max<size_t>(graphs.size(), 1)));
        std::vector<std::thread> pool;
        for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
        for (const auto& err : worker_errors)
            if (err) std::rethrow_exception(err);

        std::vector<std::string> records, quarantine;
        for (size_t i = 0; i < graphs.size(); ++i) {
            if (!from_parts[i]) {
                detail::write_lines(part_path(i, "records"), slots[i].record_lines);
                detail::write_lines(part_path(i, "quarantine"), slots[i].quarantine_lines);
            }
            records.insert(records.end(), slots[i].record_lines.begin(),
                           slots[i].record_lines.end());
            quarantine.insert(quarantine.end(), slots[i].quarantine_lines.begin(),
                              slots[i].quarantine_lines.end());
        }
        detail::sort_by_framed_code(records);
        detail::sort_by_framed_code(quarantine);

        std::string census_name = "census-" + std::to_string(n) + ".jsonl";
        detail::write_lines(fs::path(opts.out_dir) / census_name, records);
        manifest.census_files.push_back(census_name);

        CensusCounts counts;
        counts.records = long(records.size());
        counts.quarantined = long(quarantine.size());
        for (const auto& line : records) {
            auto j = nlohmann::json::parse(line);
            bool simple = j.at("flags").at("simple").get<bool>();
            bool three = j.at("flags").at("three_connected").get<bool>();
            if (simple) ++counts.simple;
            if (simple && three) ++counts.three_connected_simple;
        }
        manifest.counts.emplace_back(n, counts);
        quarantine_all.insert(quarantine_all.end(), quarantine.begin(), quarantine.end());
    }

    detail::write_lines(fs::path(opts.out_dir) / "quarantine.jsonl", quarantine_all);

    auto t1 = std::chrono::steady_clock::now();
    manifest.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    {
        auto now = std::chrono::system_clock::now();
        std::time_t tt = std::chrono::system_clock::to_time_t(now);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
        manifest.timestamp = buf;
    }
    std::ofstream mf(fs::path(opts.out_dir) / "manifest.json", std::ios::binary | std::ios::trunc);
    if (!mf) throw IoFailure("cannot write manifest.json");
    mf << manifest_json(manifest).dump(2) << '\n';
    return manifest;
}

// Non-asymptotic bound checks for a completed census size.
struct BoundsReport {
    int n = 0;
    long census_count = 0;
    long long pair_bound = 0;     // (2n)!/(n!*2), asserted
    long long factorial = 0;      // n!, informational
    long long factorial_4n = 0;   // n!*4^n, informational
    bool within_pair_bound = false;
};

inline BoundsReport verify_bounds(int n, long census_count) {
    auto fact = [](int k) {
        long long f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    BoundsReport r;
    r.n = n;
    r.census_count = census_count;
    r.factorial = fact(n);
    r.factorial_4n = fact(n);
    for (int i = 0; i < n; ++i) r.factorial_4n *= 4;
    r.pair_bound = fact(2 * n) / (fact(n) * 2);
    r.within_pair_bound = census_count <= r.pair_bound;
    return r;
}

// Count closed vertex sequences of length 2n using each of n labels twice,
// up to relabeling (first-occurrence normal form), and compare with
// (2n)!/(n! 2^n).
struct PathCountReport {
    int n = 0;
    long computed = 0;
    long formula = 0;
    bool match = false;
};

inline PathCountReport eulerian_path_count_check(int n) {
    if (n < 1 || n > 4) throw LimitExceeded("path-count check supported for n = 1..4");
    std::vector<int> seq;
    for (int v = 1; v <= n; ++v) {
        seq.push_back(v);
        seq.push_back(v);
    }
    std::sort(seq.begin(), seq.end());
    std::vector<std::vector<int>> canon;
    do {
        std::vector<int> relabel(n + 1, 0);
        int next = 0;
        std::vector<int> c;
        c.reserve(seq.size());
        for (int v : seq) {
            if (relabel[v] == 0) relabel[v] = ++next;
            c.push_back(relabel[v]);
        }
        canon.push_back(std::move(c));
    } while (std::next_permutation(seq.begin(), seq.end()));
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    PathCountReport r;
    r.n = n;
    r.computed = long(canon.size());
    long long f = 1;
    for (int i = 2; i <= 2 * n; ++i) f *= i;
    for (int i = 2; i <= n; ++i) f /= i;
    for (int i = 0; i < n; ++i) f /= 2;
    r.formula = long(f);
    r.match = r.computed == r.formula;
    return r;
}

} // namespace trieuler
