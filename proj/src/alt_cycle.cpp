#include "degseq/alt_cycle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace degseq {

PeelResult log_peel_order(const ColoredGraph& f) {
    const int n = f.vertex_count();
    if (n < 2) throw std::invalid_argument("log_peel_order: requires n >= 2");
    const double threshold = std::log2(static_cast<double>(n));
    std::vector<char> alive(static_cast<size_t>(n), 1);
    std::vector<int> rdeg(static_cast<size_t>(n)), bdeg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        rdeg[static_cast<size_t>(v)] = f.red_degree(v);
        bdeg[static_cast<size_t>(v)] = f.blue_degree(v);
    }
    auto removable = [&](int v) {
        return static_cast<double>(rdeg[static_cast<size_t>(v)]) < threshold ||
               static_cast<double>(bdeg[static_cast<size_t>(v)]) < threshold;
    };
    std::set<int> pending;
    for (int v = 0; v < n; ++v)
        if (removable(v)) pending.insert(v);
    PeelResult res;
    while (!pending.empty()) {
        int v = *pending.begin();
        pending.erase(pending.begin());
        alive[static_cast<size_t>(v)] = 0;
        EdgeColor deficient = static_cast<double>(rdeg[static_cast<size_t>(v)]) < threshold
                                  ? EdgeColor::Red
                                  : EdgeColor::Blue;
        res.order.push_back({v, deficient});
        for (int u : f.red_neighbors(v))
            if (alive[static_cast<size_t>(u)]) {
                --rdeg[static_cast<size_t>(u)];
                if (removable(u)) pending.insert(u);
            }
        for (int u : f.blue_neighbors(v))
            if (alive[static_cast<size_t>(u)]) {
                --bdeg[static_cast<size_t>(u)];
                if (removable(u)) pending.insert(u);
            }
    }
    for (int v = 0; v < n; ++v)
        if (alive[static_cast<size_t>(v)]) res.residual.push_back(v);
    return res;
}

MatchingInstance build_gadget(const ColoredGraph& f, int w) {
    const int n = f.vertex_count();
    if (w < 0 || w >= n) throw std::out_of_range("build_gadget: w out of range");
    if (f.red_degree(w) < 1 || f.blue_degree(w) < 1)
        throw std::invalid_argument("build_gadget: w must have both colours");
    const auto fedges = f.edges();
    const int m = static_cast<int>(fedges.size());
    MatchingInstance inst;
    inst.node_count = 2 * n + 2 * m;
    inst.forced_a = 2 * w;
    inst.forced_b = 2 * w + 1;
    for (int v = 0; v < n; ++v)
        if (v != w) inst.edges.emplace_back(2 * v, 2 * v + 1);
    for (int i = 0; i < m; ++i) {
        auto [u, v, c] = fedges[static_cast<size_t>(i)];
        int tu = 2 * n + 2 * i, tv = 2 * n + 2 * i + 1;
        inst.edges.emplace_back(tu, tv);
        if (c == EdgeColor::Red) {
            inst.edges.emplace_back(2 * u, tu);
            inst.edges.emplace_back(2 * v, tv);
        } else {
            inst.edges.emplace_back(2 * u + 1, tu);
            inst.edges.emplace_back(2 * v + 1, tv);
        }
    }
    return inst;
}

namespace {

// Edmonds blossom matcher; supports seeding with a partial matching and
// augmenting from a single exposed node.
class BlossomMatcher {
public:
    explicit BlossomMatcher(int n)
        : n_(n),
          adj_(static_cast<size_t>(n)),
          match_(static_cast<size_t>(n), -1),
          parent_(static_cast<size_t>(n), -1),
          base_(static_cast<size_t>(n)),
          in_queue_(static_cast<size_t>(n), 0),
          in_blossom_(static_cast<size_t>(n), 0),
          lca_mark_(static_cast<size_t>(n), 0) {
        active_.reserve(static_cast<size_t>(n));
    }

    void add_edge(int u, int v) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }

    void set_mate(int u, int v) {
        match_[static_cast<size_t>(u)] = v;
        match_[static_cast<size_t>(v)] = u;
    }

    const std::vector<int>& mates() const { return match_; }

    bool augment(int root) {
        std::fill(in_queue_.begin(), in_queue_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        in_queue_[static_cast<size_t>(root)] = 1;
        queue_.clear();
        queue_.push_back(root);
        // every node whose parent or base can change sits in the search tree;
        // tracking them keeps blossom contraction proportional to the tree
        active_.clear();
        active_.push_back(root);
        for (size_t head = 0; head < queue_.size(); ++head) {
            int v = queue_[head];
            for (int to : adj_[static_cast<size_t>(v)]) {
                if (base_[static_cast<size_t>(v)] == base_[static_cast<size_t>(to)] ||
                    match_[static_cast<size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<size_t>(to)] != -1 &&
                     parent_[static_cast<size_t>(match_[static_cast<size_t>(to)])] != -1)) {
                    // odd cycle: contract the blossom
                    int cur_base = lowest_common_ancestor(v, to);
                    ++blossom_stamp_;
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i : active_) {
                        if (in_blossom_[static_cast<size_t>(base_[static_cast<size_t>(i)])] ==
                            blossom_stamp_) {
                            base_[static_cast<size_t>(i)] = cur_base;
                            if (!in_queue_[static_cast<size_t>(i)]) {
                                in_queue_[static_cast<size_t>(i)] = 1;
                                queue_.push_back(i);
                            }
                        }
                    }
                } else if (parent_[static_cast<size_t>(to)] == -1) {
                    parent_[static_cast<size_t>(to)] = v;
                    active_.push_back(to);
                    if (match_[static_cast<size_t>(to)] == -1) {
                        flip_path(to);
                        return true;
                    }
                    int m = match_[static_cast<size_t>(to)];
                    if (!in_queue_[static_cast<size_t>(m)]) {
                        in_queue_[static_cast<size_t>(m)] = 1;
                        queue_.push_back(m);
                        active_.push_back(m);
                    }
                }
            }
        }
        return false;
    }

private:
    int lowest_common_ancestor(int a, int b) {
        ++lca_stamp_;
        int u = a;
        while (true) {
            u = base_[static_cast<size_t>(u)];
            lca_mark_[static_cast<size_t>(u)] = lca_stamp_;
            if (match_[static_cast<size_t>(u)] == -1) break;
            u = parent_[static_cast<size_t>(match_[static_cast<size_t>(u)])];
        }
        int w = b;
        while (true) {
            w = base_[static_cast<size_t>(w)];
            if (lca_mark_[static_cast<size_t>(w)] == lca_stamp_) return w;
            w = parent_[static_cast<size_t>(match_[static_cast<size_t>(w)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<size_t>(v)] != b) {
            in_blossom_[static_cast<size_t>(base_[static_cast<size_t>(v)])] = blossom_stamp_;
            in_blossom_[static_cast<size_t>(
                base_[static_cast<size_t>(match_[static_cast<size_t>(v)])])] = blossom_stamp_;
            parent_[static_cast<size_t>(v)] = child;
            child = match_[static_cast<size_t>(v)];
            v = parent_[static_cast<size_t>(match_[static_cast<size_t>(v)])];
        }
    }

    void flip_path(int v) {
        while (v != -1) {
            int pv = parent_[static_cast<size_t>(v)];
            int ppv = match_[static_cast<size_t>(pv)];
            match_[static_cast<size_t>(v)] = pv;
            match_[static_cast<size_t>(pv)] = v;
            v = ppv;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> in_queue_;
    std::vector<long long> in_blossom_;
    std::vector<long long> lca_mark_;
    long long lca_stamp_ = 0;
    long long blossom_stamp_ = 0;
    std::vector<int> queue_;
    std::vector<int> active_;
};

} // namespace

std::vector<int> zero_colour_peel(const ColoredGraph& f) {
    const int n = f.vertex_count();
    std::vector<char> alive(static_cast<size_t>(n), 1);
    std::vector<int> rdeg(static_cast<size_t>(n)), bdeg(static_cast<size_t>(n));
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        rdeg[static_cast<size_t>(v)] = f.red_degree(v);
        bdeg[static_cast<size_t>(v)] = f.blue_degree(v);
        if (rdeg[static_cast<size_t>(v)] == 0 || bdeg[static_cast<size_t>(v)] == 0)
            stack.push_back(v);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (!alive[static_cast<size_t>(v)]) continue;
        alive[static_cast<size_t>(v)] = 0;
        for (int u : f.red_neighbors(v))
            if (alive[static_cast<size_t>(u)] && --rdeg[static_cast<size_t>(u)] == 0)
                stack.push_back(u);
        for (int u : f.blue_neighbors(v))
            if (alive[static_cast<size_t>(u)] && --bdeg[static_cast<size_t>(u)] == 0)
                stack.push_back(u);
    }
    std::vector<int> survivors;
    for (int v = 0; v < n; ++v)
        if (alive[static_cast<size_t>(v)]) survivors.push_back(v);
    return survivors;
}

namespace {

// Perfect-matching test on the gadget for `core` (already zero-peeled) and
// candidate vertex w; decodes the alternating cycle through w on success.
std::optional<AlternatingCycle> gadget_cycle(const ColoredGraph& core, int w) {
    const int n = core.vertex_count();
    const auto fedges = core.edges();
    const int m = static_cast<int>(fedges.size());
    auto inst = build_gadget(core, w);
    BlossomMatcher bm(inst.node_count);
    for (auto [a, b] : inst.edges) bm.add_edge(a, b);
    // near-perfect seed: all internal pairs except w's, all edge terminals
    for (int v = 0; v < n; ++v)
        if (v != w) bm.set_mate(2 * v, 2 * v + 1);
    for (int i = 0; i < m; ++i) bm.set_mate(2 * n + 2 * i, 2 * n + 2 * i + 1);
    if (!bm.augment(inst.forced_a)) return std::nullopt;

    const auto& mate = bm.mates();
    AlternatingCycle cycle;
    int cur = w;
    bool use_red = true;
    while (true) {
        cycle.vertices.push_back(cur);
        int node = use_red ? 2 * cur : 2 * cur + 1;
        int term = mate[static_cast<size_t>(node)];
        if (term < 2 * n) throw std::logic_error("gadget_cycle: bad matching structure");
        int edge_id = (term - 2 * n) / 2;
        auto [a, b, c] = fedges[static_cast<size_t>(edge_id)];
        if ((c == EdgeColor::Red) != use_red)
            throw std::logic_error("gadget_cycle: colour mismatch in decode");
        int nxt = (cur == a) ? b : a;
        cycle.colors.push_back(c);
        if (nxt == w) break;
        cur = nxt;
        use_red = !use_red;
    }
    return cycle;
}

std::optional<AlternatingCycle> map_back(std::optional<AlternatingCycle> cycle,
                                         const std::vector<int>& labels) {
    if (cycle)
        for (int& v : cycle->vertices) v = labels[static_cast<size_t>(v)];
    return cycle;
}

} // namespace

std::vector<int> max_matching(const MatchingInstance& h) {
    BlossomMatcher bm(h.node_count);
    for (auto [a, b] : h.edges) bm.add_edge(a, b);
    // greedy seed
    {
        std::vector<int> mate(static_cast<size_t>(h.node_count), -1);
        for (auto [a, b] : h.edges)
            if (mate[static_cast<size_t>(a)] == -1 && mate[static_cast<size_t>(b)] == -1) {
                mate[static_cast<size_t>(a)] = b;
                mate[static_cast<size_t>(b)] = a;
                bm.set_mate(a, b);
            }
    }
    for (int v = 0; v < h.node_count; ++v)
        if (bm.mates()[static_cast<size_t>(v)] == -1) bm.augment(v);
    return bm.mates();
}

std::optional<AlternatingCycle> find_alternating_cycle(const ColoredGraph& f) {
    auto survivors = zero_colour_peel(f);
    if (survivors.empty()) return std::nullopt;
    ColoredGraph core = f.induced(survivors);
    for (int w = 0; w < core.vertex_count(); ++w) {
        if (auto cycle = gadget_cycle(core, w)) return map_back(std::move(cycle), survivors);
    }
    return std::nullopt;
}

std::optional<AlternatingCycle> find_alternating_cycle_through(const ColoredGraph& f, int w) {
    if (w < 0 || w >= f.vertex_count())
        throw std::out_of_range("find_alternating_cycle_through: w out of range");
    auto survivors = zero_colour_peel(f);
    auto it = std::lower_bound(survivors.begin(), survivors.end(), w);
    if (it == survivors.end() || *it != w) return std::nullopt;
    ColoredGraph core = f.induced(survivors);
    return map_back(gadget_cycle(core, static_cast<int>(it - survivors.begin())), survivors);
}

std::optional<AlternatingCycle> brute_force_alternating_cycle(const ColoredGraph& f) {
    const int n = f.vertex_count();
    if (n > 12)
        throw std::invalid_argument("brute_force_alternating_cycle: guard n <= 12 violated");
    std::vector<int> path;
    std::vector<EdgeColor> cols;
    std::vector<char> used(static_cast<size_t>(n), 0);
    std::optional<AlternatingCycle> found;

    std::function<bool(int, int)> dfs = [&](int start, int cur) -> bool {
        if (path.size() >= 4 && path.size() % 2 == 0) {
            auto c = f.color_of(cur, start);
            if (c && *c != cols.back()) {
                cols.push_back(*c);
                found = AlternatingCycle{path, cols};
                return true;
            }
        }
        auto try_next = [&](int nxt, EdgeColor c) -> bool {
            if (nxt <= start || used[static_cast<size_t>(nxt)]) return false;
            if (!cols.empty() && c == cols.back()) return false;
            path.push_back(nxt);
            cols.push_back(c);
            used[static_cast<size_t>(nxt)] = 1;
            if (dfs(start, nxt)) return true;
            used[static_cast<size_t>(nxt)] = 0;
            cols.pop_back();
            path.pop_back();
            return false;
        };
        for (int nxt : f.red_neighbors(cur))
            if (try_next(nxt, EdgeColor::Red)) return true;
        for (int nxt : f.blue_neighbors(cur))
            if (try_next(nxt, EdgeColor::Blue)) return true;
        return false;
    };

    for (int start = 0; start < n; ++start) {
        path.assign(1, start);
        cols.clear();
        std::fill(used.begin(), used.end(), 0);
        used[static_cast<size_t>(start)] = 1;
        if (dfs(start, start)) return found;
    }
    return std::nullopt;
}

} // namespace degseq
