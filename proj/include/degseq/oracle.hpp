#ifndef DEGSEQ_ORACLE_HPP
#define DEGSEQ_ORACLE_HPP

#include <cstdint>
#include <stdexcept>

#include "degseq/graph.hpp"
#include "degseq/rng.hpp"

namespace degseq {

/// Query-counted adjacency access plus uniform vertex sampling; the tester's
/// only view of the input graph. Each adjacent() call costs exactly one
/// query; sampling is free. Sampling is with replacement (a probe may hit
/// the anchor itself), so a uniform vertex is a neighbour of v with
/// probability exactly d(v)/n.
class GraphOracle {
public:
    explicit GraphOracle(int n) : n_(n) {}
    virtual ~GraphOracle() = default;

    int vertex_count() const { return n_; }

    bool adjacent(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::out_of_range("GraphOracle: vertex out of range");
        ++queries_;
        if (u == v) return false;
        return query_edge(u, v);
    }

    int sample_vertex(Rng& rng) const {
        return static_cast<int>(next_below(rng, static_cast<std::uint64_t>(n_)));
    }

    std::uint64_t query_count() const { return queries_; }

protected:
    virtual bool query_edge(int u, int v) const = 0;

private:
    int n_;
    std::uint64_t queries_ = 0;
};

/// In-memory adapter over a Graph.
class MemoryGraphOracle final : public GraphOracle {
public:
    explicit MemoryGraphOracle(const Graph& g) : GraphOracle(g.vertex_count()), g_(&g) {}

protected:
    bool query_edge(int u, int v) const override { return g_->adjacent(u, v); }

private:
    const Graph* g_;
};

} // namespace degseq

#endif
