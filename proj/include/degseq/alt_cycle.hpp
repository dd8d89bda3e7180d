#ifndef DEGSEQ_ALT_CYCLE_HPP
#define DEGSEQ_ALT_CYCLE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "degseq/colored_graph.hpp"

namespace degseq {

struct PeelStep {
    int vertex;
    EdgeColor deficient; // colour with fewer than log2(n) edges to the suffix
};

struct PeelResult {
    std::vector<PeelStep> order; // removal order; covers all vertices iff residual empty
    std::vector<int> residual;   // U: every vertex has d^R, d^B >= log2(n) within F[U]
    bool complete() const { return residual.empty(); }
};

/// Repeatedly removes any vertex with < log2(n) red or < log2(n) blue
/// neighbours among the survivors (smallest index first). Requires n >= 2.
PeelResult log_peel_order(const ColoredGraph& f);

/// Host graph for the matching reduction. Node layout: v_R = 2v, v_B = 2v+1
/// for each vertex v of F, then a terminal pair per F-edge. The internal edge
/// {w_R, w_B} of the forced vertex is omitted.
struct MatchingInstance {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;
    int forced_a = -1; // w_R
    int forced_b = -1; // w_B
};

/// Requires d^R(w) >= 1 and d^B(w) >= 1.
MatchingInstance build_gadget(const ColoredGraph& f, int w);

/// Maximum-cardinality matching on a general graph (Edmonds blossom).
/// Returns the mate array, -1 for unmatched nodes.
std::vector<int> max_matching(const MatchingInstance& h);

/// Vertices (ascending) surviving iterated removal of vertices with zero red
/// or zero blue degree; every alternating cycle lies within the survivors.
std::vector<int> zero_colour_peel(const ColoredGraph& f);

/// Exact finder: peels zero-colour-degree vertices, then runs the matching
/// gadget per candidate vertex in ascending index order.
std::optional<AlternatingCycle> find_alternating_cycle(const ColoredGraph& f);

/// Like find_alternating_cycle but only considers cycles through w.
std::optional<AlternatingCycle> find_alternating_cycle_through(const ColoredGraph& f, int w);

/// Exhaustive-search oracle; guard n <= 12.
std::optional<AlternatingCycle> brute_force_alternating_cycle(const ColoredGraph& f);

} // namespace degseq

#endif
