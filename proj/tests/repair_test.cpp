#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

#include "degseq/alt_cycle.hpp"
#include "degseq/colored_graph.hpp"
#include "degseq/degree_seq.hpp"
#include "degseq/repair.hpp"
#include "degseq/rng.hpp"

using namespace degseq;

TEST_CASE("discrepancy examples") {
    const Graph empty(4);
    CHECK(discrepancy(empty, {1, 1, 1, 1}) == 4);
    CHECK(discrepancy(empty, {0, 0, 0, 0}) == 0);
    CHECK_THROWS_AS(discrepancy(empty, {1, 1}), std::invalid_argument);
}

TEST_CASE("repair empty graph to a perfect matching") {
    const Graph g(4);
    const auto res = repair(g, {1, 1, 1, 1});
    CHECK(degree_sequence(res.repaired) == std::vector<int>{1, 1, 1, 1});
    CHECK(res.discrepancy == 4);
    CHECK(res.symdiff_size == 2);
    CHECK(edit_distance(g, res.repaired).raw == 2);
}

TEST_CASE("repair with zero discrepancy reaches symdiff zero") {
    Rng rng(17);
    for (int it = 0; it < 15; ++it) {
        const int n = 5 + static_cast<int>(next_below(rng, 56));
        const auto g = random_graph(n, 0.4, rng());
        const auto d = degree_sequence(g);
        const auto res = repair(g, d);
        CHECK(res.discrepancy == 0);
        CHECK(res.symdiff_size == 0);
        CHECK(res.repaired == g);
        CHECK(check_edit_bound(res, n, 1.0));
    }
}

TEST_CASE("repair K4 minus an edge to 2-regular") {
    auto g = Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const auto res = repair(g, {2, 2, 2, 2});
    CHECK(degree_sequence(res.repaired) == std::vector<int>{2, 2, 2, 2});
    CHECK(res.discrepancy == 2);
}

TEST_CASE("repair postconditions on mixed random instances") {
    Rng rng(29);
    for (int it = 0; it < 40; ++it) {
        const int n = 4 + static_cast<int>(next_below(rng, 27));
        const auto g = random_graph(n, 0.35, rng());
        const auto base = random_graph(n, 0.35, rng());
        const auto d = degree_sequence(base); // graphic by construction
        RepairOptions opts;
        opts.greedy_init = (it % 2 == 1);
        const auto res = repair(g, d, opts);

        // exactness, entry by entry
        CHECK(degree_sequence(res.repaired) == d);

        // the final coloured difference has no alternating cycle
        const auto f = colored_symmetric_difference(g, res.repaired);
        CHECK(f.edge_count() == res.symdiff_size);
        CHECK_FALSE(find_alternating_cycle(f).has_value());
        if (n <= 9) CHECK_FALSE(brute_force_alternating_cycle(f).has_value());

        // degree-identity transfer: sum |dR - dB| equals the discrepancy
        long long transfer = 0;
        for (int v = 0; v < n; ++v)
            transfer += std::abs(f.red_degree(v) - f.blue_degree(v));
        CHECK(transfer == res.discrepancy);

        // trace: each step toggles an even structure of length >= 4 and
        // shrinks the difference by exactly that many edges
        long long prev = -1;
        for (const auto& step : res.trace) {
            CHECK(step.cycle_length >= 4);
            CHECK(step.cycle_length % 2 == 0);
            if (prev >= 0) CHECK(step.symdiff_after <= prev - 4);
            prev = step.symdiff_after;
        }
        if (!res.trace.empty()) CHECK(res.trace.back().symdiff_after == res.symdiff_size);
    }
}

TEST_CASE("repair rejects a non-graphic target") {
    const Graph g(4);
    CHECK_THROWS_AS(repair(g, {3, 3, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(repair(g, {1, 1}), std::invalid_argument);
}

TEST_CASE("check_edit_bound edge cases") {
    RepairResult r;
    r.discrepancy = 0;
    r.symdiff_size = 0;
    CHECK(check_edit_bound(r, 10, 0.001));
    r.symdiff_size = 4;
    CHECK_FALSE(check_edit_bound(r, 10, 1000.0)); // discrepancy 0 forces symdiff 0
    r.discrepancy = 25;
    // bound: c * sqrt(25/100) * 100 = 50c
    CHECK(check_edit_bound(r, 10, 0.1));
    r.symdiff_size = 6;
    CHECK_FALSE(check_edit_bound(r, 10, 0.1));
}

TEST_CASE("repair is deterministic") {
    const auto g = random_graph(40, 0.3, 77);
    const auto d = degree_sequence(random_graph(40, 0.35, 78));
    const auto a = repair(g, d);
    const auto b = repair(g, d);
    CHECK(a.repaired == b.repaired);
    CHECK(a.symdiff_size == b.symdiff_size);
}
