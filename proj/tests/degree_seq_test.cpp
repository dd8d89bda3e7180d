#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "degseq/degree_seq.hpp"
#include "degseq/io.hpp"
#include "degseq/rng.hpp"

using namespace degseq;

namespace {

// reference multiset distance: best over all permutations (n! small)
double brute_multiset_l1(std::vector<int> x, const std::vector<int>& y) {
    std::sort(x.begin(), x.end());
    double best = 1e18;
    do {
        double s = 0;
        for (size_t i = 0; i < x.size(); ++i) s += std::abs(x[i] - y[i]);
        best = std::min(best, s);
    } while (std::next_permutation(x.begin(), x.end()));
    return best / (static_cast<double>(x.size()) * x.size());
}

} // namespace

TEST_CASE("is_graphic basics") {
    CHECK(is_graphic({1, 1}));
    CHECK(is_graphic({2, 2, 2}));
    CHECK(is_graphic({3, 2, 2, 2, 1}));
    CHECK_FALSE(is_graphic({3, 3, 1, 1}));
    CHECK_FALSE(is_graphic({1, 1, 1})); // odd sum
    CHECK_FALSE(is_graphic({3, 0, 0})); // entry >= n
    CHECK_FALSE(is_graphic({-1, 1}));
    CHECK(is_graphic({0, 0, 0}));
    CHECK(is_graphic({})); // vacuous
}

TEST_CASE("realize basics") {
    CHECK(realize({1, 1})->edges() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(realize({2, 2, 2})->edge_count() == 3);
    const std::vector<int> d{3, 2, 2, 2, 1};
    CHECK(degree_sequence(*realize(d)) == d);
    CHECK_FALSE(realize({3, 3, 1, 1}).has_value());
    // unsorted input: vertex i still gets d[i]
    const std::vector<int> d2{1, 3, 2, 2, 2};
    CHECK(degree_sequence(*realize(d2)) == d2);
}

TEST_CASE("realize on random graphic sequences") {
    Rng rng(3);
    for (int it = 0; it < 50; ++it) {
        const int n = 2 + static_cast<int>(next_below(rng, 30));
        const auto g = random_graph(n, 0.4, rng());
        const auto d = degree_sequence(g);
        CHECK(is_graphic(d));
        CHECK(degree_sequence(*realize(d)) == d);
    }
}

TEST_CASE("realize_near matches degrees and reuses hint edges") {
    Rng rng(4);
    for (int it = 0; it < 20; ++it) {
        const int n = 4 + static_cast<int>(next_below(rng, 20));
        const auto g = random_graph(n, 0.5, rng());
        const auto d = degree_sequence(g);
        const auto h = realize_near(d, g);
        REQUIRE(h.has_value());
        CHECK(degree_sequence(*h) == d);
    }
}

TEST_CASE("l1_distance and multiset_l1") {
    CHECK(l1_distance({1, 2}, {2, 2}) == doctest::Approx(0.25));
    CHECK_THROWS_AS(l1_distance({1}, {1, 2}), std::invalid_argument);
    CHECK(multiset_l1({2, 1}, {1, 2}) == doctest::Approx(0.0));
    Rng rng(9);
    for (int it = 0; it < 40; ++it) {
        const int n = 2 + static_cast<int>(next_below(rng, 5));
        std::vector<int> x(static_cast<size_t>(n)), y(static_cast<size_t>(n));
        for (auto& v : x) v = static_cast<int>(next_below(rng, 10));
        for (auto& v : y) v = static_cast<int>(next_below(rng, 10));
        std::sort(y.begin(), y.end());
        CHECK(multiset_l1(x, y) == doctest::Approx(brute_multiset_l1(x, y)));
    }
}

TEST_CASE("validate_statistic") {
    CHECK_NOTHROW(validate_statistic({2, {0.5, 0.5}}));
    CHECK_THROWS(validate_statistic({2, {0.5}}));          // wrong length
    CHECK_THROWS(validate_statistic({2, {0.7, 0.7}}));     // sum != 1
    CHECK_THROWS(validate_statistic({2, {-0.1, 1.1}}));    // out of range
    CHECK_THROWS(validate_statistic({0, {}}));             // k < 1
}

TEST_CASE("bucket_value examples") {
    CHECK(bucket_value(5, 2, 1) == 1);   // 5/4 rounds down
    CHECK(bucket_value(5, 2, 2) == 4);   // 15/4 rounds up
    CHECK(bucket_value(20, 2, 1) == 5);
    CHECK(bucket_value(20, 2, 2) == 15);
    CHECK(bucket_value(4, 1, 1) == 2);   // n/2
    CHECK(bucket_value(2, 1, 1) == 1);   // clamped to n-1
}

TEST_CASE("bucket_counts apportionment") {
    CHECK(bucket_counts(5, {2, {0.5, 0.5}}) == std::vector<long long>{3, 2});
    CHECK(bucket_counts(20, {2, {0.2, 0.8}}) == std::vector<long long>{4, 16});
    Rng rng(13);
    for (int it = 0; it < 50; ++it) {
        const int n = 1 + static_cast<int>(next_below(rng, 200));
        const int k = 1 + static_cast<int>(next_below(rng, 6));
        std::vector<double> a(static_cast<size_t>(k));
        double sum = 0;
        for (auto& v : a) {
            v = next_unit(rng);
            sum += v;
        }
        for (auto& v : a) v /= sum;
        const auto counts = bucket_counts(n, {k, a});
        long long total = 0;
        for (size_t i = 0; i < counts.size(); ++i) {
            total += counts[i];
            // never off by a full unit from the exact share
            CHECK(std::abs(static_cast<double>(counts[i]) - a[i] * n) < 1.0 + 1e-9);
        }
        CHECK(total == n);
    }
}

TEST_CASE("expand_statistic examples") {
    CHECK(expand_statistic(5, {2, {0.5, 0.5}}) == std::vector<int>{1, 1, 1, 4, 4});
    const auto d = expand_statistic(20, {2, {0.2, 0.8}});
    CHECK(std::count(d.begin(), d.end(), 5) == 4);
    CHECK(std::count(d.begin(), d.end(), 15) == 16);
    CHECK(std::is_sorted(d.begin(), d.end()));
}

TEST_CASE("delta_approximates") {
    // empty graph vs all mass in the top bucket: distance 3/4
    const Graph empty(8);
    const DegreeStatistic top{2, {0.0, 1.0}};
    CHECK_FALSE(delta_approximates(top, empty, 0.1));
    CHECK(delta_approximates(top, empty, 0.75));
    const DegreeStatistic bottom{2, {1.0, 0.0}};
    // expansion of the bottom bucket for n=8 is all 2s: distance 2/8
    CHECK(delta_approximates(bottom, empty, 0.25));
    CHECK_FALSE(delta_approximates(bottom, empty, 0.2));
}

TEST_CASE("statistic JSON round trip") {
    const DegreeStatistic s{3, {0.25, 0.5, 0.25}};
    const auto back = statistic_from_json_text(statistic_to_json_text(s));
    CHECK(back.k == 3);
    REQUIRE(back.alpha.size() == 3);
    CHECK(back.alpha[1] == doctest::Approx(0.5));
    CHECK_THROWS(statistic_from_json_text("{\"k\": 2, \"alpha\": [1.0]}"));
}
