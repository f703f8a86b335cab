#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "trieuler/euler.hpp"
#include "trieuler/generate.hpp"

#include "oracles.hpp"

using namespace trieuler;

namespace {

DartGraph two_loops() { return make_dart_graph(1, {{0, 0}, {0, 0}}); }
DartGraph four_parallel() { return make_dart_graph(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}); }

// A witness must leave every edge exactly once, alternate eps-crossings with
// pairing turns, and close up.
void check_witness(const DartGraph& g, const EulerianCycle& c) {
    REQUIRE(int(c.witness.size()) == g.edge_count());
    std::set<int> edges_seen;
    auto edge_of = g.edge_index_by_dart();
    for (size_t i = 0; i < c.witness.size(); ++i) {
        int d = c.witness[i];
        REQUIRE(edges_seen.insert(edge_of[d]).second);
        int next = c.witness[(i + 1) % c.witness.size()];
        REQUIRE(c.transitions.partner(g.eps[d]) == next);
    }
}

} // namespace

TEST_CASE("circuit decomposition on the two-loop graph") {
    DartGraph g = two_loops();
    // P0 pairs each loop with itself: two circuits of one edge each
    auto split = circuit_decomposition(g, TransitionSystem::from_code("0"));
    REQUIRE(split.size() == 2);
    REQUIRE(split[0].size() + split[1].size() == 2);
    // P1 pairs across the loops: one circuit through both edges
    auto joined = circuit_decomposition(g, TransitionSystem::from_code("1"));
    REQUIRE(joined.size() == 1);
    REQUIRE(joined[0].size() == 2);
}

TEST_CASE("circuits always partition the edges") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& g : generate_graphs(n)) {
            long total = 1;
            for (int v = 0; v < n; ++v) total *= 3;
            for (long code = 0; code < total; ++code) {
                TransitionSystem ts;
                long c = code;
                for (int v = 0; v < n; ++v, c /= 3)
                    ts.choice.push_back(static_cast<signed char>(c % 3));
                auto circuits = circuit_decomposition(g, ts);
                REQUIRE(!circuits.empty());
                std::set<int> edges;
                auto edge_of = g.edge_index_by_dart();
                size_t len = 0;
                for (const auto& walk : circuits) {
                    len += walk.size();
                    for (int d : walk) REQUIRE(edges.insert(edge_of[d]).second);
                }
                REQUIRE(len == size_t(g.edge_count()));
                REQUIRE(int(circuits.size()) == circuit_count(g, ts));
            }
        }
}

TEST_CASE("K5 with every vertex at P0") {
    DartGraph g = oracle::k5();
    TransitionSystem ts = TransitionSystem::from_code("00000");
    auto circuits = circuit_decomposition(g, ts);
    REQUIRE(circuits.size() >= 1);
    REQUIRE(circuits.size() <= 5);
}

TEST_CASE("enumeration of Eulerian cycles") {
    DartGraph g = two_loops();
    auto cycles = enumerate_eulerian(g);
    REQUIRE(cycles.size() == 2);
    REQUIRE(cycles[0].transitions.code() == "1");
    REQUIRE(cycles[1].transitions.code() == "2");
    for (const auto& c : cycles) check_witness(g, c);

    DartGraph p = four_parallel();
    auto pcycles = enumerate_eulerian(p);
    REQUIRE(pcycles.size() >= 1);
    REQUIRE(pcycles.size() <= 9);
    REQUIRE(long(pcycles.size()) == count_circuits_brute(p));
    REQUIRE(pcycles.size() == 6);

    // deterministic order: base-3 codes ascending
    std::vector<std::string> codes;
    for (const auto& c : pcycles) codes.push_back(c.transitions.code());
    REQUIRE(std::is_sorted(codes.begin(), codes.end()));

    // witnesses on K5 have length 2n = 10
    for (const auto& c : enumerate_eulerian(oracle::k5())) {
        REQUIRE(c.witness.size() == 10);
        check_witness(oracle::k5(), c);
    }
}

TEST_CASE("enumeration agrees with the brute-force walk count") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : generate_graphs(n))
            REQUIRE(long(enumerate_eulerian(g).size()) == count_circuits_brute(g));
    REQUIRE(long(enumerate_eulerian(oracle::k5()).size()) == count_circuits_brute(oracle::k5()));
    REQUIRE(long(enumerate_eulerian(oracle::octahedron()).size()) ==
            count_circuits_brute(oracle::octahedron()));
}

TEST_CASE("compatibility predicate") {
    DartGraph g = two_loops();
    auto cycles = enumerate_eulerian(g);
    REQUIRE(cycles.size() == 2);
    REQUIRE_FALSE(compatible(cycles[0], cycles[0]));
    REQUIRE(compatible(cycles[0], cycles[1]));

    DartGraph other = four_parallel();
    REQUIRE_THROWS_AS(compatible(cycles[0], enumerate_eulerian(other)[0]), GraphMismatch);

    // symmetric, and equivalent to "digits differ at every vertex", n <= 4
    for (int n = 1; n <= 3; ++n)
        for (const auto& g2 : generate_graphs(n)) {
            auto list = enumerate_eulerian(g2);
            for (const auto& a : list)
                for (const auto& b : list) {
                    bool differ_all = true;
                    for (int v = 0; v < n; ++v)
                        differ_all =
                            differ_all && a.transitions.choice[v] != b.transitions.choice[v];
                    REQUIRE(compatible(a, b) == differ_all);
                    REQUIRE(compatible(a, b) == compatible(b, a));
                }
        }

    // two K5 cycles agreeing at exactly one vertex are incompatible
    auto k5cycles = enumerate_eulerian(oracle::k5());
    bool found_pair = false;
    for (size_t i = 0; i < k5cycles.size() && !found_pair; ++i)
        for (size_t j = i + 1; j < k5cycles.size() && !found_pair; ++j) {
            int agree = 0;
            for (int v = 0; v < 5; ++v)
                if (k5cycles[i].transitions.choice[v] == k5cycles[j].transitions.choice[v])
                    ++agree;
            if (agree == 1) {
                REQUIRE_FALSE(compatible(k5cycles[i], k5cycles[j]));
                found_pair = true;
            }
        }
    REQUIRE(found_pair);
}

TEST_CASE("feasibility limits") {
    REQUIRE_THROWS_AS(enumerate_eulerian(oracle::circulant(13, {1, 2})), LimitExceeded);
    REQUIRE_THROWS_AS(count_circuits_brute(oracle::circulant(9, {1, 2})), LimitExceeded);
}
