#ifndef DEGSEQ_GRAPH_HPP
#define DEGSEQ_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace degseq {

/// Undirected simple graph on vertices 0..n-1.
/// Adjacency lists are kept sorted: O(log deg) lookup, O(deg) iteration.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;

    // returns false if the edge was already present / absent
    bool add_edge(int u, int v);
    bool remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    // all edges as (u, v) with u < v, lexicographically sorted
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;
    void check_pair(int u, int v) const;

    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

std::vector<int> degree_sequence(const Graph& g);

struct EditDistance {
    long long raw = 0;
    double normalized = 0.0;
};

/// |E(G) triangle E(H)| and its n^2-normalized form.
EditDistance edit_distance(const Graph& g, const Graph& h);

/// G(n, p) with a fixed seed; deterministic.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Toggles `flips` uniformly chosen distinct vertex pairs (without
/// replacement within one call).
Graph perturb_edges(const Graph& g, long long flips, std::uint64_t seed);

} // namespace degseq

#endif
