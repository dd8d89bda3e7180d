#ifndef DEGSEQ_COLORED_GRAPH_HPP
#define DEGSEQ_COLORED_GRAPH_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq {

enum class EdgeColor { Red, Blue };

inline EdgeColor opposite(EdgeColor c) {
    return c == EdgeColor::Red ? EdgeColor::Blue : EdgeColor::Red;
}

/// 2-edge-coloured simple graph: disjoint red and blue edge sets.
class ColoredGraph {
public:
    ColoredGraph() = default;
    explicit ColoredGraph(int n);

    int vertex_count() const { return n_; }
    long long edge_count() const { return red_.edge_count() + blue_.edge_count(); }
    long long red_edge_count() const { return red_.edge_count(); }
    long long blue_edge_count() const { return blue_.edge_count(); }

    bool has_red(int u, int v) const { return red_.adjacent(u, v); }
    bool has_blue(int u, int v) const { return blue_.adjacent(u, v); }
    std::optional<EdgeColor> color_of(int u, int v) const;

    void add_edge(int u, int v, EdgeColor c);
    bool remove_edge(int u, int v);

    int red_degree(int v) const { return red_.degree(v); }
    int blue_degree(int v) const { return blue_.degree(v); }
    int degree(int v) const { return red_degree(v) + blue_degree(v); }

    const std::vector<int>& red_neighbors(int v) const { return red_.neighbors(v); }
    const std::vector<int>& blue_neighbors(int v) const { return blue_.neighbors(v); }

    // (u, v, color) with u < v, red edges interleaved with blue in (u,v) order
    std::vector<std::tuple<int, int, EdgeColor>> edges() const;

    /// Subgraph induced by `vertices` (sorted, distinct), relabelled 0..k-1
    /// in the given order.
    ColoredGraph induced(const std::vector<int>& vertices) const;

private:
    int n_ = 0;
    Graph red_;
    Graph blue_;
};

/// Simple alternating cycle: vertices v0..v_{L-1}, colors[i] is the colour of
/// edge (v[i], v[(i+1) % L]). L even, >= 4, all vertices distinct.
struct AlternatingCycle {
    std::vector<int> vertices;
    std::vector<EdgeColor> colors;

    int length() const { return static_cast<int>(vertices.size()); }
};

/// Checks the AlternatingCycle type invariants against a host graph.
bool verify_alternating_cycle(const ColoredGraph& f, const AlternatingCycle& cycle);

/// F with E(Gp)\E(G) red and E(G)\E(Gp) blue.
ColoredGraph colored_symmetric_difference(const Graph& g, const Graph& gp);

/// Removes the cycle's red edges from Gp and adds its blue edges; preserves
/// the degree sequence of Gp. Throws if the cycle is malformed or its edges
/// are inconsistent with Gp (red must be present, blue absent).
Graph toggle_cycle(const Graph& gp, const AlternatingCycle& cycle);

} // namespace degseq

#endif
