// Command-line driver.
//
// Subcommands: gen, framings, census, volume, export, verify, path-count.
// Exit codes: 0 success, 1 check failure, 2 input error, 3 limit exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "trieuler/census.hpp"
#include "trieuler/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitLimit = 3;

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw trieuler::IoFailure("cannot open " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

// Formats a double to 12 significant digits for the volume table.
std::string sig12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

int cmd_gen(int n, bool simple) {
    auto graphs = trieuler::generate_graphs(n, simple);
    bool first = true;
    for (const auto& g : graphs) {
        if (!first) std::cout << '\n';
        first = false;
        std::cout << "# code " << trieuler::code_hex(trieuler::canonical_code(g)) << " aut "
                  << trieuler::automorphism_order(g) << (g.is_simple() ? " simple" : "")
                  << (trieuler::is_three_connected(g) ? " three-connected" : "") << '\n'
                  << trieuler::serialize(g);
    }
    std::cerr << graphs.size() << " graph class" << (graphs.size() == 1 ? "" : "es") << " at n = "
              << n << '\n';
    return kExitOk;
}

// The input file holds one or more graphs in the edge-list format,
// separated by blank lines (the output of `gen` is accepted as-is).
int cmd_framings(const std::string& input) {
    std::vector<std::string> blocks;
    std::string block;
    std::istringstream stream(read_file(input));
    std::string line;
    auto flush = [&] {
        if (block.find_first_not_of(" \t\r\n") != std::string::npos)
            blocks.push_back(std::move(block));
        block.clear();
    };
    while (std::getline(stream, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            flush();
        else
            block += line + '\n';
    }
    flush();
    if (blocks.empty()) throw trieuler::MalformedInput("no graph in " + input);

    size_t total = 0;
    for (size_t i = 0; i < blocks.size(); ++i) {
        trieuler::DartGraph g = trieuler::parse_graph(blocks[i]);
        auto framings = trieuler::find_framings(g);
        if (blocks.size() > 1)
            std::cout << "# graph " << trieuler::code_hex(trieuler::canonical_code(g)) << ' '
                      << framings.size() << " framing" << (framings.size() == 1 ? "" : "s")
                      << '\n';
        for (const auto& f : framings)
            std::cout << f.to_string() << ' '
                      << trieuler::framed_code_hex(trieuler::framed_canonical_code(f)) << '\n';
        total += framings.size();
    }
    std::cerr << total << " framing" << (total == 1 ? "" : "s") << '\n';
    return kExitOk;
}

int cmd_census(const trieuler::CensusOptions& opts) {
    trieuler::RunManifest manifest = trieuler::run_census(opts);
    long quarantined = 0;
    for (const auto& [n, counts] : manifest.counts) {
        std::cout << "n=" << n << " records=" << counts.records << " simple=" << counts.simple
                  << " three_connected_simple=" << counts.three_connected_simple
                  << " quarantined=" << counts.quarantined << '\n';
        quarantined += counts.quarantined;
        trieuler::BoundsReport bounds = trieuler::verify_bounds(n, counts.records);
        if (!bounds.within_pair_bound) {
            std::cerr << "census size at n=" << n << " exceeds (2n)!/(n!*2) = "
                      << bounds.pair_bound << '\n';
            return kExitCheckFailure;
        }
    }
    std::cout << "wrote " << manifest.census_files.size() << " census file(s) to "
              << opts.out_dir << '\n';
    if (quarantined > 0) {
        std::cerr << quarantined << " record(s) quarantined; see quarantine.jsonl\n";
        return kExitCheckFailure;
    }
    return kExitOk;
}

int cmd_volume(int n_max) {
    if (n_max < 4) throw trieuler::OutOfRange("volume table starts at n = 4");
    std::cout << "n,theta,edge_length,tet_volume,total_volume\n";
    for (int n = 4; n <= n_max; ++n) {
        trieuler::TruncTetGeometry geo = trieuler::trunc_tet_geometry(n);
        std::cout << n << ',' << sig12(geo.theta) << ',' << sig12(geo.edge_length) << ','
                  << sig12(geo.tet_volume) << ',' << sig12(double(n) * geo.tet_volume) << '\n';
    }
    return kExitOk;
}

int cmd_export(const std::string& record, const std::string& format) {
    trieuler::Framing f = trieuler::framed_graph_from_code(trieuler::code_from_hex(record));
    trieuler::Triangulation t = trieuler::dualize(trieuler::build_spine(f.graph, f));
    std::cout << trieuler::export_triangulation(t, format);
    return kExitOk;
}

void print_report(const trieuler::VerifyReport& report) {
    std::cout << (report.ok() ? "ok   " : "FAIL ") << report.framed_hex;
    if (report.recomputed.contains("n") && report.recomputed["n"].get<int>() < 4)
        std::cout << "  (geometry not applicable, n < 4)";
    std::cout << '\n';
    for (const auto& problem : report.problems) std::cout << "  - " << problem << '\n';
}

int cmd_verify(const std::string& input) {
    std::vector<trieuler::VerifyReport> reports;
    std::ifstream file(input, std::ios::binary);
    if (file) {
        std::string line;
        size_t lineno = 0;
        while (std::getline(file, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            // A record that cannot be rebuilt (corrupted code or body) is a
            // failed verification, not a reason to abort the whole file.
            try {
                if (line.front() == '{')
                    reports.push_back(trieuler::verify_record(nlohmann::json::parse(line)));
                else
                    reports.push_back(trieuler::verify_framed_code(line));
            } catch (const std::exception& err) {
                trieuler::VerifyReport broken;
                broken.framed_hex = "line " + std::to_string(lineno);
                broken.problems.push_back(err.what());
                reports.push_back(std::move(broken));
            }
        }
        if (reports.empty()) throw trieuler::MalformedInput("no records in " + input);
    } else {
        // Not a readable file: treat the argument as a framed code in hex.
        reports.push_back(trieuler::verify_framed_code(input));
    }
    bool all_ok = true;
    for (const auto& report : reports) {
        print_report(report);
        all_ok = all_ok && report.ok();
    }
    std::cout << (all_ok ? "all checks passed" : "verification failed") << " (" << reports.size()
              << " instance" << (reports.size() == 1 ? "" : "s") << ")\n";
    return all_ok ? kExitOk : kExitCheckFailure;
}

int cmd_path_count(int n) {
    trieuler::PathCountReport report = trieuler::eulerian_path_count_check(n);
    std::cout << "n=" << report.n << " computed=" << report.computed << " formula="
              << report.formula << (report.match ? " match" : " MISMATCH") << '\n';
    return report.match ? kExitOk : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Census engine for framed 4-regular graphs and the hyperbolic manifolds they encode"};
    app.require_subcommand(1);

    int gen_n = 1;
    bool gen_simple = false;
    auto* gen = app.add_subcommand("gen", "enumerate connected 4-regular multigraph classes");
    gen->add_option("--n", gen_n, "number of vertices")->required();
    gen->add_flag("--simple", gen_simple, "restrict to simple graphs");

    std::string framings_input;
    auto* framings = app.add_subcommand("framings", "list framings of a graph read from a file");
    framings->add_option("--input", framings_input, "multigraph text file")->required();

    trieuler::CensusOptions census_opts;
    auto* census = app.add_subcommand("census", "run the census and write JSONL output");
    census->add_option("--n-min", census_opts.n_min, "smallest n")->required();
    census->add_option("--n-max", census_opts.n_max, "largest n")->required();
    census->add_flag("--simple", census_opts.simple_only, "restrict to simple graphs");
    census->add_flag("--three-connected", census_opts.three_connected_only,
                     "restrict to 3-connected graphs");
    census->add_option("--jobs", census_opts.jobs, "worker threads");
    census->add_flag("--allow-n7", census_opts.allow_n7, "opt in to the slow n = 7 census");
    census->add_option("--out", census_opts.out_dir, "output directory")->required();

    int volume_n_max = 4;
    auto* volume = app.add_subcommand("volume", "print the volume table as CSV");
    volume->add_option("--n-max", volume_n_max, "largest n (table starts at 4)")->required();

    std::string export_record, export_format = trieuler::kTriJsonFormat;
    auto* exp = app.add_subcommand("export", "export a record's triangulation");
    exp->add_option("--record", export_record, "framed canonical code (hex)")->required();
    exp->add_option("--format", export_format, "output format (tri-json)");

    std::string verify_input;
    auto* verify = app.add_subcommand("verify", "re-verify census records or a framed code");
    verify->add_option("--input", verify_input, "census JSONL file, code list, or framed code")
        ->required();

    int path_n = 1;
    auto* path_count = app.add_subcommand("path-count",
                                          "count anchored double-occurrence sequences up to relabeling");
    path_count->add_option("--n", path_n, "number of vertices (1..4)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) return cmd_gen(gen_n, gen_simple);
        if (*framings) return cmd_framings(framings_input);
        if (*census) return cmd_census(census_opts);
        if (*volume) return cmd_volume(volume_n_max);
        if (*exp) return cmd_export(export_record, export_format);
        if (*verify) return cmd_verify(verify_input);
        if (*path_count) return cmd_path_count(path_n);
    } catch (const trieuler::LimitExceeded& e) {
        std::cerr << "limit: " << e.what() << '\n';
        return kExitLimit;
    } catch (const trieuler::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}
