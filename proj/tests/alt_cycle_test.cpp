#include <doctest.h>

#include <algorithm>
#include <functional>

#include "degseq/alt_cycle.hpp"
#include "degseq/rng.hpp"

using namespace degseq;

namespace {

ColoredGraph rbrb_c4() {
    ColoredGraph f(4);
    f.add_edge(0, 1, EdgeColor::Red);
    f.add_edge(1, 2, EdgeColor::Blue);
    f.add_edge(2, 3, EdgeColor::Red);
    f.add_edge(0, 3, EdgeColor::Blue);
    return f;
}

ColoredGraph random_colored(int n, double density, double red_bias, Rng& rng) {
    ColoredGraph f(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (next_unit(rng) < density)
                f.add_edge(u, v,
                           next_unit(rng) < red_bias ? EdgeColor::Red : EdgeColor::Blue);
    return f;
}

int matching_size(const std::vector<int>& mate) {
    int matched = 0;
    for (int m : mate) matched += (m >= 0) ? 1 : 0;
    return matched / 2;
}

// exhaustive maximum matching for cross-checking, nodes <= ~12
int brute_matching_size(int nodes, const std::vector<std::pair<int, int>>& edges) {
    int best = 0;
    std::vector<char> used(static_cast<size_t>(nodes), 0);
    std::function<void(size_t, int)> go = [&](size_t i, int size) {
        best = std::max(best, size);
        for (size_t j = i; j < edges.size(); ++j) {
            auto [a, b] = edges[j];
            if (used[static_cast<size_t>(a)] || used[static_cast<size_t>(b)]) continue;
            used[static_cast<size_t>(a)] = used[static_cast<size_t>(b)] = 1;
            go(j + 1, size + 1);
            used[static_cast<size_t>(a)] = used[static_cast<size_t>(b)] = 0;
        }
    };
    go(0, 0);
    return best;
}

MatchingInstance plain_instance(int nodes, std::vector<std::pair<int, int>> edges) {
    MatchingInstance h;
    h.node_count = nodes;
    h.edges = std::move(edges);
    return h;
}

} // namespace

TEST_CASE("log_peel_order on the RBRB 4-cycle") {
    // log2(4) = 2 but every colour degree is 1, so everything peels
    const auto res = log_peel_order(rbrb_c4());
    CHECK(res.complete());
    CHECK(res.order.size() == 4);
    CHECK(res.order.front().vertex == 0); // smallest index first
}

TEST_CASE("log_peel_order keeps a dense random core") {
    Rng rng(21);
    const auto f = random_colored(64, 0.5, 0.5, rng);
    // expected colour degrees ~16, far above log2(64) = 6
    const auto res = log_peel_order(f);
    CHECK_FALSE(res.complete());
    CHECK(res.residual.size() > 32);
    for (int v : res.residual) {
        CHECK(f.red_degree(v) >= 6);
        CHECK(f.blue_degree(v) >= 6);
    }
}

TEST_CASE("log_peel_order requires n >= 2") {
    CHECK_THROWS_AS(log_peel_order(ColoredGraph(1)), std::invalid_argument);
}

TEST_CASE("build_gadget: single red edge has no perfect matching") {
    ColoredGraph f(2);
    f.add_edge(0, 1, EdgeColor::Red);
    CHECK_THROWS(build_gadget(f, 0)); // w needs both colours
}

TEST_CASE("build_gadget: RBRB 4-cycle admits a perfect matching") {
    const auto f = rbrb_c4();
    for (int w = 0; w < 4; ++w) {
        const auto h = build_gadget(f, w);
        const auto mate = max_matching(h);
        CHECK(2 * matching_size(mate) == h.node_count);
    }
}

TEST_CASE("build_gadget: isolated w is an error") {
    ColoredGraph f(3);
    f.add_edge(0, 1, EdgeColor::Red);
    CHECK_THROWS_AS(build_gadget(f, 2), std::invalid_argument);
}

TEST_CASE("max_matching on named graphs") {
    CHECK(matching_size(max_matching(plain_instance(3, {{0, 1}, {1, 2}}))) == 1);
    CHECK(matching_size(max_matching(
              plain_instance(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}))) == 2);
    // Petersen graph has a perfect matching
    const std::vector<std::pair<int, int>> petersen{
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},  // outer C5
        {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},  // inner pentagram
        {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}; // spokes
    CHECK(matching_size(max_matching(plain_instance(10, petersen))) == 5);
}

TEST_CASE("max_matching agrees with brute force") {
    Rng rng(33);
    for (int it = 0; it < 250; ++it) {
        const int nodes = 2 + static_cast<int>(next_below(rng, 9));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < nodes; ++u)
            for (int v = u + 1; v < nodes; ++v)
                if (next_unit(rng) < 0.4) edges.emplace_back(u, v);
        const auto mate = max_matching(plain_instance(nodes, edges));
        CHECK(matching_size(mate) == brute_matching_size(nodes, edges));
        for (int v = 0; v < nodes; ++v)
            if (mate[static_cast<size_t>(v)] >= 0)
                CHECK(mate[static_cast<size_t>(mate[static_cast<size_t>(v)])] == v);
    }
}

TEST_CASE("finder on canonical small cases") {
    {
        const auto cyc = find_alternating_cycle(rbrb_c4());
        REQUIRE(cyc.has_value());
        CHECK(verify_alternating_cycle(rbrb_c4(), *cyc));
        CHECK(cyc->length() == 4);
    }
    {
        ColoredGraph f(6); // RBRBRB 6-cycle
        for (int i = 0; i < 6; ++i)
            f.add_edge(std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6),
                       i % 2 == 0 ? EdgeColor::Red : EdgeColor::Blue);
        const auto cyc = find_alternating_cycle(f);
        REQUIRE(cyc.has_value());
        CHECK(verify_alternating_cycle(f, *cyc));
        CHECK(cyc->length() == 6);
    }
    {
        ColoredGraph f(4); // all-red 4-cycle: nothing alternating
        f.add_edge(0, 1, EdgeColor::Red);
        f.add_edge(1, 2, EdgeColor::Red);
        f.add_edge(2, 3, EdgeColor::Red);
        f.add_edge(0, 3, EdgeColor::Red);
        CHECK_FALSE(find_alternating_cycle(f).has_value());
    }
}

TEST_CASE("finder agrees with the exhaustive oracle") {
    Rng rng(55);
    int found = 0;
    for (int it = 0; it < 200; ++it) {
        const int n = 4 + static_cast<int>(next_below(rng, 6));
        const auto f = random_colored(n, 0.5, 0.5, rng);
        const auto fast = find_alternating_cycle(f);
        const auto slow = brute_force_alternating_cycle(f);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(verify_alternating_cycle(f, *fast));
            ++found;
        }
    }
    CHECK(found > 20); // the sample must actually exercise both outcomes
}

TEST_CASE("find_alternating_cycle_through pins the vertex") {
    ColoredGraph f(6);
    // one alternating square on {0,1,2,3}, vertex 4-5 edge off to the side
    f = rbrb_c4();
    ColoredGraph g(6);
    for (auto [u, v, c] : f.edges()) g.add_edge(u, v, c);
    g.add_edge(4, 5, EdgeColor::Red);
    for (int w = 0; w < 4; ++w) {
        const auto cyc = find_alternating_cycle_through(g, w);
        REQUIRE(cyc.has_value());
        CHECK(std::find(cyc->vertices.begin(), cyc->vertices.end(), w) !=
              cyc->vertices.end());
    }
    CHECK_FALSE(find_alternating_cycle_through(g, 4).has_value());
}

TEST_CASE("brute force guard") {
    CHECK_THROWS_AS(brute_force_alternating_cycle(ColoredGraph(13)),
                    std::invalid_argument);
}

TEST_CASE("verifier rejects malformed cycles") {
    const auto f = rbrb_c4();
    AlternatingCycle bad;
    bad.vertices = {0, 1};
    bad.colors = {EdgeColor::Red, EdgeColor::Blue};
    CHECK_FALSE(verify_alternating_cycle(f, bad)); // too short
    AlternatingCycle wrong;
    wrong.vertices = {0, 1, 2, 3};
    wrong.colors = {EdgeColor::Blue, EdgeColor::Red, EdgeColor::Blue, EdgeColor::Red};
    CHECK_FALSE(verify_alternating_cycle(f, wrong)); // colours don't match host
}
