#ifndef DEGSEQ_DEGREE_SEQ_HPP
#define DEGSEQ_DEGREE_SEQ_HPP

#include <optional>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq {

/// Erdos-Gallai test: true iff some simple graph realizes d.
bool is_graphic(const std::vector<int>& d);

/// Havel-Hakimi realization; vertex i receives degree d[i]. Ties among equal
/// residual degrees break by original index. Empty optional if d is not
/// graphic.
std::optional<Graph> realize(const std::vector<int>& d);

/// Havel-Hakimi variant that, among equal residual degrees, prefers partners
/// already adjacent in `hint`. Used as the repair module's greedy initializer.
std::optional<Graph> realize_near(const std::vector<int>& d, const Graph& hint);

/// Normalized l1 distance: (1/n^2) * sum |x_i - y_i|.
double l1_distance(const std::vector<int>& x, const std::vector<int>& y);

/// min over permutations pi of l1_distance(x o pi, y); equals the distance of
/// the sorted sequences.
double multiset_l1(const std::vector<int>& x, const std::vector<int>& y);

/// Bucketed degree histogram alpha_1..alpha_k summing to 1.
struct DegreeStatistic {
    int k = 1;
    std::vector<double> alpha;
};

/// Throws unless alpha has k entries in [0,1] summing to 1 (within 1e-9).
void validate_statistic(const DegreeStatistic& stat);

/// Representative degree of bucket ell (1-based): round half-up of
/// (2*ell - 1) * n / (2k), clamped to [0, n-1].
int bucket_value(int n, int k, int ell);

/// Largest-remainder apportionment of alpha_ell * n; ties break toward lower
/// bucket index. Counts sum to n.
std::vector<long long> bucket_counts(int n, const DegreeStatistic& stat);

/// The n-term sequence d(n, alpha), sorted non-decreasing.
std::vector<int> expand_statistic(int n, const DegreeStatistic& stat);

/// multiset_l1(degree_sequence(G), d(n, alpha)) <= delta.
bool delta_approximates(const DegreeStatistic& stat, const Graph& g, double delta);

} // namespace degseq

#endif
