#include "degseq/estimator.hpp"

#include <cmath>
#include <stdexcept>

namespace degseq {

EstimatorParams derive_params(double delta) {
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("derive_params: delta must be in (0, 1]");
    EstimatorParams p;
    p.delta = delta;
    p.k = static_cast<int>(std::ceil(1.0 / delta - 1e-9));
    if (p.k < 1) p.k = 1;
    p.gamma = 1.0 / (2.0 * p.k * (2.0 * p.k + 1.0));
    const double inv = 1.0 / (2.0 * p.gamma * p.gamma);
    p.s = static_cast<long long>(std::ceil(std::log2(12.0 * p.k) * inv - 1e-9));
    if (p.s < 1) p.s = 1;
    p.t = static_cast<long long>(std::ceil(std::log2(6.0 * static_cast<double>(p.s)) * inv - 1e-9));
    if (p.t < 1) p.t = 1;
    return p;
}

namespace {

// bucket of a degree ratio a/b under the left-closed-first, half-open rule:
// smallest ell with a*k <= ell*b, at least 1
int bucket_of(long long a, long long b, int k) {
    long long num = a * k;
    long long ell = (num + b - 1) / b;
    if (ell < 1) ell = 1;
    if (ell > k) ell = k;
    return static_cast<int>(ell);
}

} // namespace

EstimateResult estimate_statistic(GraphOracle& oracle, double delta, Rng& rng) {
    EstimateResult res;
    res.params = derive_params(delta);
    const int k = res.params.k;
    const long long s = res.params.s;
    const long long t = res.params.t;
    res.bucket_counts.assign(static_cast<size_t>(k), 0);
    res.samples.reserve(static_cast<size_t>(s));
    const std::uint64_t before = oracle.query_count();
    for (long long i = 0; i < s; ++i) {
        int anchor = oracle.sample_vertex(rng);
        long long hits = 0;
        for (long long j = 0; j < t; ++j) {
            int probe = oracle.sample_vertex(rng);
            if (oracle.adjacent(anchor, probe)) ++hits;
        }
        res.samples.push_back({anchor, hits});
        ++res.bucket_counts[static_cast<size_t>(bucket_of(hits, t, k) - 1)];
    }
    res.queries = oracle.query_count() - before;
    res.stat.k = k;
    res.stat.alpha.resize(static_cast<size_t>(k));
    for (int ell = 0; ell < k; ++ell)
        res.stat.alpha[static_cast<size_t>(ell)] =
            static_cast<double>(res.bucket_counts[static_cast<size_t>(ell)]) /
            static_cast<double>(s);
    return res;
}

DegreeStatistic whole_graph_statistic(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("whole_graph_statistic: k must be >= 1");
    const int n = g.vertex_count();
    DegreeStatistic stat;
    stat.k = k;
    stat.alpha.assign(static_cast<size_t>(k), 0.0);
    if (n == 0) {
        stat.alpha[0] = 1.0;
        return stat;
    }
    std::vector<long long> counts(static_cast<size_t>(k), 0);
    for (int v = 0; v < n; ++v)
        ++counts[static_cast<size_t>(bucket_of(g.degree(v), n, k) - 1)];
    for (int ell = 0; ell < k; ++ell)
        stat.alpha[static_cast<size_t>(ell)] =
            static_cast<double>(counts[static_cast<size_t>(ell)]) / static_cast<double>(n);
    return stat;
}

} // namespace degseq
