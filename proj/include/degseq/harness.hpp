#ifndef DEGSEQ_HARNESS_HPP
#define DEGSEQ_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq {

enum class InstanceFamily { DriftedRealization, RandomVsRegular, SplitVsRegular };

std::string family_name(InstanceFamily family);
InstanceFamily family_from_name(const std::string& name);

struct GenInstance {
    Graph g;
    std::vector<int> target; // graphic
};

/// A (graph, target sequence) pair with measured discrepancy(g, target)/n^2
/// inside [target_delta/2, 2*target_delta]; target_delta = 0 gives an exact
/// realization. Throws if the family cannot reach the window.
GenInstance gen_instance(InstanceFamily family, int n, double target_delta,
                         std::uint64_t seed);

/// 2h-regular circulant: i ~ i +- 1..h (mod n).
Graph circulant(int n, int h);
/// K_{n/2} plus n - n/2 isolated vertices.
Graph split_graph(int n);

struct ScalingSpec {
    int n = 1000;
    std::vector<double> deltas{0.02, 0.05, 0.1, 0.2};
    int trials = 10;
    std::uint64_t seed = 1;
    InstanceFamily family = InstanceFamily::DriftedRealization;
    double c_const = 10.0;
};

struct ScalingReport {
    std::string csv;
    double max_ratio = 0.0; // max over rows of symdiff_norm / sqrt(delta_measured)
    double slope = 0.0;     // log-log slope of per-cell mean symdiff_norm vs delta
};

/// Repair per cell; rows (n, delta_target, trial, seed, delta_measured,
/// symdiff_norm, ratio).
ScalingReport exp_scaling(const ScalingSpec& spec);

struct EstimatorExpSpec {
    int n = 2000;
    double delta = 0.5;
    int trials = 200;
    std::uint64_t seed = 1;
    std::vector<std::string> families{"gnp-half", "bimodal-split", "near-regular"};
};

struct EstimatorReport {
    std::string csv;
    double min_success_rate = 0.0;
    double min_event_a_rate = 0.0;
};

/// Rows (family, n, delta, trials, seed, success_rate, event_a_rate,
/// mean_anchor_dev, queries). success = delta_approximates; event A = every
/// anchor's hit fraction within gamma of its true degree ratio.
EstimatorReport exp_estimator(const EstimatorExpSpec& spec);

struct TesterExpSpec {
    int n = 10000;
    double delta_override = 0.5;
    int trials = 200;
    std::uint64_t seed = 1;
    int fallback_cases = 50;
};

struct TesterReport {
    std::string csv;
    double completeness_rate = 0.0; // accept rate on an in-property instance
    double soundness_rate = 0.0;    // reject rate on a certified-far instance
    double fallback_rate = 0.0;     // exact-verdict agreement on small n
};

/// Cases: regular circulant vs its own fixed-regular property (accept),
/// split graph vs fixed (n-1)-regular, certified far (reject), and a
/// deterministic small-n fallback membership suite.
TesterReport exp_tester(const TesterExpSpec& spec);

/// max observed scaling ratio x 1.5; rejects grids whose measured deltas are
/// all zero.
double calibrate_c(const ScalingSpec& spec);

/// Worker count: DEGSEQ_JOBS if set, else hardware concurrency. Trial results
/// are merged in index order, so the output is independent of it.
int default_jobs();

} // namespace degseq

#endif
