#ifndef DEGSEQ_REPAIR_HPP
#define DEGSEQ_REPAIR_HPP

#include <vector>

#include "degseq/graph.hpp"

namespace degseq {

struct RepairOptions {
    bool greedy_init = false; // seed the realization with edges of G where possible
};

struct TraceStep {
    int cycle_length;        // edges toggled in this step (even, >= 4)
    long long symdiff_after; // |E(G') triangle E(G)| after the step
};

struct RepairResult {
    Graph repaired;
    long long symdiff_size = 0;  // final |E(G') triangle E(G)|
    long long discrepancy = 0;   // sum_i |d_G(i) - d_i|
    long long iterations = 0;
    std::vector<TraceStep> trace;
};

/// sum_i |d_G(i) - d_i|.
long long discrepancy(const Graph& g, const std::vector<int>& target);

/// Builds a realization of `target` and eliminates alternating structure in
/// the coloured symmetric difference until it is certified free of
/// alternating cycles. The result has exactly the target degree sequence.
RepairResult repair(const Graph& g, const std::vector<int>& target,
                    const RepairOptions& opts = {});

/// symdiff_size <= C * sqrt(discrepancy / n^2) * n^2; for discrepancy 0 the
/// bound degenerates to symdiff_size == 0.
bool check_edit_bound(const RepairResult& result, int n, double c);

} // namespace degseq

#endif
