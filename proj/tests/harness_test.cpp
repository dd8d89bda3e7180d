#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "degseq/degree_seq.hpp"
#include "degseq/harness.hpp"
#include "degseq/repair.hpp"

using namespace degseq;

TEST_CASE("family names round-trip") {
    for (auto fam : {InstanceFamily::DriftedRealization, InstanceFamily::RandomVsRegular,
                     InstanceFamily::SplitVsRegular})
        CHECK(family_from_name(family_name(fam)) == fam);
    CHECK_THROWS_AS(family_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("circulant and split graph shapes") {
    const auto c = circulant(10, 3);
    for (int v = 0; v < 10; ++v) CHECK(c.degree(v) == 6);
    CHECK_THROWS_AS(circulant(10, 5), std::invalid_argument); // 2h > n-1
    const auto s = split_graph(10);
    for (int v = 0; v < 5; ++v) CHECK(s.degree(v) == 4);
    for (int v = 5; v < 10; ++v) CHECK(s.degree(v) == 0);
}

TEST_CASE("gen_instance hits the discrepancy window") {
    const double n2 = 200.0 * 200.0;
    for (auto fam : {InstanceFamily::DriftedRealization, InstanceFamily::RandomVsRegular}) {
        const auto inst = gen_instance(fam, 200, 0.05, 17);
        CHECK(is_graphic(inst.target));
        const double measured = static_cast<double>(discrepancy(inst.g, inst.target)) / n2;
        CHECK(measured >= 0.025);
        CHECK(measured <= 0.1);
    }
    // the split family sits near delta = 1/4 by construction
    const auto split = gen_instance(InstanceFamily::SplitVsRegular, 200, 0.25, 17);
    const double measured = static_cast<double>(discrepancy(split.g, split.target)) / n2;
    CHECK(measured >= 0.125);
    CHECK(measured <= 0.5);
}

TEST_CASE("gen_instance with target 0 is an exact realization") {
    for (auto fam : {InstanceFamily::DriftedRealization, InstanceFamily::RandomVsRegular,
                     InstanceFamily::SplitVsRegular}) {
        const auto inst = gen_instance(fam, 60, 0.0, 3);
        CHECK(discrepancy(inst.g, inst.target) == 0);
    }
}

TEST_CASE("gen_instance is reproducible") {
    const auto a = gen_instance(InstanceFamily::DriftedRealization, 80, 0.05, 9);
    const auto b = gen_instance(InstanceFamily::DriftedRealization, 80, 0.05, 9);
    CHECK(a.g == b.g);
    CHECK(a.target == b.target);
}

TEST_CASE("exp_scaling output shape and determinism") {
    ScalingSpec spec;
    spec.n = 60;
    spec.deltas = {0.05, 0.1};
    spec.trials = 2;
    spec.seed = 4;
    const auto a = exp_scaling(spec);
    const auto b = exp_scaling(spec);
    CHECK(a.csv == b.csv);
    CHECK(a.max_ratio == b.max_ratio);
    CHECK(a.max_ratio > 0.0);
    // header comment + column row + one line per (cell, trial)
    CHECK(std::count(a.csv.begin(), a.csv.end(), '\n') == 2 + 2 * 2);
    CHECK(a.csv.rfind("# schema degseq-scaling-v1", 0) == 0);
}

TEST_CASE("exp_scaling is independent of the worker count") {
    ScalingSpec spec;
    spec.n = 50;
    spec.deltas = {0.05, 0.1};
    spec.trials = 3;
    spec.seed = 6;
    setenv("DEGSEQ_JOBS", "1", 1);
    const auto serial = exp_scaling(spec);
    setenv("DEGSEQ_JOBS", "4", 1);
    const auto parallel = exp_scaling(spec);
    unsetenv("DEGSEQ_JOBS");
    CHECK(serial.csv == parallel.csv);
}

TEST_CASE("calibrate_c") {
    ScalingSpec spec;
    spec.n = 60;
    spec.deltas = {0.05, 0.1};
    spec.trials = 2;
    spec.seed = 4;
    const double c = calibrate_c(spec);
    CHECK(c > 0.0);
    CHECK(c == doctest::Approx(exp_scaling(spec).max_ratio * 1.5));
    spec.deltas = {0.0};
    CHECK_THROWS_AS(calibrate_c(spec), std::invalid_argument); // degenerate grid
}

TEST_CASE("exp_estimator smoke run") {
    EstimatorExpSpec spec;
    spec.n = 120;
    spec.delta = 1.0; // k = 1: cheap, always approximates
    spec.trials = 3;
    spec.seed = 2;
    const auto rep = exp_estimator(spec);
    CHECK(rep.min_success_rate == doctest::Approx(1.0));
    CHECK(rep.csv.rfind("# schema degseq-estimator-v1", 0) == 0);
    CHECK(std::count(rep.csv.begin(), rep.csv.end(), '\n') == 2 + 3); // three families
    CHECK(exp_estimator(spec).csv == rep.csv);
}

TEST_CASE("exp_tester smoke run") {
    TesterExpSpec spec;
    spec.n = 1000;
    spec.delta_override = 0.5;
    spec.trials = 2;
    spec.fallback_cases = 10;
    spec.seed = 3;
    const auto rep = exp_tester(spec);
    CHECK(rep.fallback_rate == doctest::Approx(1.0));
    CHECK(rep.completeness_rate >= 0.0);
    CHECK(rep.soundness_rate >= 0.0);
    CHECK(rep.csv.rfind("# schema degseq-tester-v1", 0) == 0);
}
