#ifndef DEGSEQ_ESTIMATOR_HPP
#define DEGSEQ_ESTIMATOR_HPP

#include <cstdint>
#include <vector>

#include "degseq/degree_seq.hpp"
#include "degseq/oracle.hpp"
#include "degseq/rng.hpp"

namespace degseq {

/// k = ceil(1/delta), gamma = 1/(2k(2k+1)),
/// s = ceil(log2(12k) / (2 gamma^2)), t = ceil(log2(6s) / (2 gamma^2)).
struct EstimatorParams {
    double delta = 0.0;
    int k = 0;
    double gamma = 0.0;
    long long s = 0;
    long long t = 0;
};

EstimatorParams derive_params(double delta); // requires 0 < delta <= 1

struct SampleRecord {
    int anchor;     // v_i
    long long hits; // |N(v_i) intersect probes|, <= t
};

struct EstimateResult {
    DegreeStatistic stat;
    std::vector<long long> bucket_counts; // size k, sums to s
    std::vector<SampleRecord> samples;    // size s
    EstimatorParams params;
    std::uint64_t queries = 0; // exactly s * t
};

/// Sampled degree statistic: s anchor vertices, t probes each; anchor i lands
/// in bucket 1 when hits/t <= 1/k and in bucket ell when
/// (ell-1)/k < hits/t <= ell/k. With probability >= 2/3 the statistic
/// delta-approximates the backing graph.
EstimateResult estimate_statistic(GraphOracle& oracle, double delta, Rng& rng);

/// Exact bucket shares of the true degrees d(v)/n under the same boundary
/// rule; used by tests and the small-n fallback path.
DegreeStatistic whole_graph_statistic(const Graph& g, int k);

} // namespace degseq

#endif
