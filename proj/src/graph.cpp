#include "degseq/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "degseq/rng.hpp"

namespace degseq {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_pair(u, v);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.m_ += static_cast<long long>(list.size());
    }
    g.m_ /= 2;
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
}

void Graph::check_pair(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::add_edge(int u, int v) {
    check_pair(u, v);
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v) return false;
    adj_[u].insert(it, v);
    auto jt = std::lower_bound(adj_[v].begin(), adj_[v].end(), u);
    adj_[v].insert(jt, u);
    ++m_;
    return true;
}

bool Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it == adj_[u].end() || *it != v) return false;
    adj_[u].erase(it);
    auto jt = std::lower_bound(adj_[v].begin(), adj_[v].end(), u);
    adj_[v].erase(jt);
    --m_;
    return true;
}

void Graph::toggle_edge(int u, int v) {
    if (!add_edge(u, v)) remove_edge(u, v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (v > u) out.emplace_back(u, v);
    return out;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    return d;
}

EditDistance edit_distance(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count())
        throw std::invalid_argument("edit_distance: size mismatch");
    const int n = g.vertex_count();
    long long diff = 0;
    for (int u = 0; u < n; ++u) {
        const auto& a = g.neighbors(u);
        const auto& b = h.neighbors(u);
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) {
                ++i;
                ++j;
            } else if (a[i] < b[j]) {
                ++diff;
                ++i;
            } else {
                ++diff;
                ++j;
            }
        }
        diff += static_cast<long long>(a.size() - i) + static_cast<long long>(b.size() - j);
    }
    diff /= 2; // each unordered pair seen from both endpoints
    EditDistance res;
    res.raw = diff;
    res.normalized = n == 0 ? 0.0 : static_cast<double>(diff) / (static_cast<double>(n) * n);
    return res;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_graph: p out of [0,1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (next_unit(rng) < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

namespace {

std::pair<int, int> decode_pair(long long idx, int n) {
    // pairs enumerated row by row: (0,1)..(0,n-1),(1,2)..
    int u = 0;
    long long row = n - 1;
    while (idx >= row) {
        idx -= row;
        ++u;
        --row;
    }
    return {u, u + 1 + static_cast<int>(idx)};
}

} // namespace

Graph perturb_edges(const Graph& g, long long flips, std::uint64_t seed) {
    const int n = g.vertex_count();
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    if (flips < 0 || flips > total)
        throw std::invalid_argument("perturb_edges: flips out of range");
    Graph out = g;
    if (flips == 0) return out;
    Rng rng(seed);
    if (flips * 2 <= total) {
        std::unordered_set<long long> seen;
        seen.reserve(static_cast<size_t>(flips) * 2);
        long long done = 0;
        while (done < flips) {
            long long idx = static_cast<long long>(next_below(rng, static_cast<std::uint64_t>(total)));
            if (!seen.insert(idx).second) continue;
            auto [u, v] = decode_pair(idx, n);
            out.toggle_edge(u, v);
            ++done;
        }
    } else {
        // dense request: partial Fisher-Yates over all pair indices
        std::vector<long long> pool(static_cast<size_t>(total));
        for (long long i = 0; i < total; ++i) pool[static_cast<size_t>(i)] = i;
        for (long long i = 0; i < flips; ++i) {
            long long j = i + static_cast<long long>(
                                  next_below(rng, static_cast<std::uint64_t>(total - i)));
            std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
            auto [u, v] = decode_pair(pool[static_cast<size_t>(i)], n);
            out.toggle_edge(u, v);
        }
    }
    return out;
}

} // namespace degseq
