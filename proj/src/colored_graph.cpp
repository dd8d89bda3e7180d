#include "degseq/colored_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace degseq {

ColoredGraph::ColoredGraph(int n) : n_(n), red_(n), blue_(n) {}

std::optional<EdgeColor> ColoredGraph::color_of(int u, int v) const {
    if (red_.adjacent(u, v)) return EdgeColor::Red;
    if (blue_.adjacent(u, v)) return EdgeColor::Blue;
    return std::nullopt;
}

void ColoredGraph::add_edge(int u, int v, EdgeColor c) {
    if (color_of(u, v))
        throw std::invalid_argument("ColoredGraph: edge already present");
    (c == EdgeColor::Red ? red_ : blue_).add_edge(u, v);
}

bool ColoredGraph::remove_edge(int u, int v) {
    return red_.remove_edge(u, v) || blue_.remove_edge(u, v);
}

std::vector<std::tuple<int, int, EdgeColor>> ColoredGraph::edges() const {
    std::vector<std::tuple<int, int, EdgeColor>> out;
    out.reserve(static_cast<size_t>(edge_count()));
    for (int u = 0; u < n_; ++u) {
        const auto& r = red_.neighbors(u);
        const auto& b = blue_.neighbors(u);
        size_t i = 0, j = 0;
        while (i < r.size() || j < b.size()) {
            if (j == b.size() || (i < r.size() && r[i] < b[j])) {
                if (r[i] > u) out.emplace_back(u, r[i], EdgeColor::Red);
                ++i;
            } else {
                if (b[j] > u) out.emplace_back(u, b[j], EdgeColor::Blue);
                ++j;
            }
        }
    }
    return out;
}

ColoredGraph ColoredGraph::induced(const std::vector<int>& vertices) const {
    std::vector<int> label(static_cast<size_t>(n_), -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= n_ || label[static_cast<size_t>(v)] != -1)
            throw std::invalid_argument("ColoredGraph::induced: bad vertex list");
        label[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    ColoredGraph sub(static_cast<int>(vertices.size()));
    for (int u : vertices) {
        for (int v : red_.neighbors(u))
            if (v > u && label[static_cast<size_t>(v)] != -1)
                sub.add_edge(label[static_cast<size_t>(u)], label[static_cast<size_t>(v)],
                             EdgeColor::Red);
        for (int v : blue_.neighbors(u))
            if (v > u && label[static_cast<size_t>(v)] != -1)
                sub.add_edge(label[static_cast<size_t>(u)], label[static_cast<size_t>(v)],
                             EdgeColor::Blue);
    }
    return sub;
}

bool verify_alternating_cycle(const ColoredGraph& f, const AlternatingCycle& cycle) {
    const int len = cycle.length();
    if (len < 4 || len % 2 != 0) return false;
    if (cycle.colors.size() != cycle.vertices.size()) return false;
    std::unordered_set<int> seen;
    for (int v : cycle.vertices) {
        if (v < 0 || v >= f.vertex_count()) return false;
        if (!seen.insert(v).second) return false;
    }
    for (int i = 0; i < len; ++i) {
        int u = cycle.vertices[static_cast<size_t>(i)];
        int v = cycle.vertices[static_cast<size_t>((i + 1) % len)];
        auto c = f.color_of(u, v);
        if (!c || *c != cycle.colors[static_cast<size_t>(i)]) return false;
        if (cycle.colors[static_cast<size_t>(i)] ==
            cycle.colors[static_cast<size_t>((i + 1) % len)])
            return false;
    }
    return true;
}

ColoredGraph colored_symmetric_difference(const Graph& g, const Graph& gp) {
    if (g.vertex_count() != gp.vertex_count())
        throw std::invalid_argument("colored_symmetric_difference: size mismatch");
    const int n = g.vertex_count();
    ColoredGraph f(n);
    for (int u = 0; u < n; ++u) {
        const auto& a = g.neighbors(u);
        const auto& b = gp.neighbors(u);
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i] < b[j])) {
                if (a[i] > u) f.add_edge(u, a[i], EdgeColor::Blue); // in G only
                ++i;
            } else if (i == a.size() || b[j] < a[i]) {
                if (b[j] > u) f.add_edge(u, b[j], EdgeColor::Red); // in Gp only
                ++j;
            } else {
                ++i;
                ++j;
            }
        }
    }
    return f;
}

Graph toggle_cycle(const Graph& gp, const AlternatingCycle& cycle) {
    const int len = cycle.length();
    if (len == 0) throw std::invalid_argument("toggle_cycle: empty cycle");
    if (len < 4 || len % 2 != 0 || cycle.colors.size() != cycle.vertices.size())
        throw std::invalid_argument("toggle_cycle: malformed cycle");
    std::unordered_set<int> seen;
    for (int v : cycle.vertices)
        if (!seen.insert(v).second)
            throw std::invalid_argument("toggle_cycle: repeated vertex");
    Graph out = gp;
    for (int i = 0; i < len; ++i) {
        int u = cycle.vertices[static_cast<size_t>(i)];
        int v = cycle.vertices[static_cast<size_t>((i + 1) % len)];
        EdgeColor c = cycle.colors[static_cast<size_t>(i)];
        if (c == cycle.colors[static_cast<size_t>((i + 1) % len)])
            throw std::invalid_argument("toggle_cycle: colours do not alternate");
        if (c == EdgeColor::Red) {
            if (!out.remove_edge(u, v))
                throw std::invalid_argument("toggle_cycle: red edge missing from graph");
        } else {
            if (!out.add_edge(u, v))
                throw std::invalid_argument("toggle_cycle: blue edge already in graph");
        }
    }
    return out;
}

} // namespace degseq
