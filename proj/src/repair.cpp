#include "degseq/repair.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "degseq/alt_cycle.hpp"
#include "degseq/colored_graph.hpp"
#include "degseq/degree_seq.hpp"
#include "degseq/rng.hpp"

namespace degseq {

long long discrepancy(const Graph& g, const std::vector<int>& target) {
    if (static_cast<int>(target.size()) != g.vertex_count())
        throw std::invalid_argument("discrepancy: length mismatch");
    long long sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        sum += std::llabs(static_cast<long long>(g.degree(v)) - target[static_cast<size_t>(v)]);
    return sum;
}

namespace {

struct FEdge {
    int u, v;
    EdgeColor c;
};

// Remove a toggled alternating structure from F and apply it to G':
// red edges leave G', blue edges enter it. Both kinds leave F.
void apply_edges(Graph& gp, ColoredGraph& f, const std::vector<FEdge>& chain) {
    for (const auto& e : chain) {
        if (e.c == EdgeColor::Red) {
            if (!gp.remove_edge(e.u, e.v)) throw std::logic_error("repair: red edge not in G'");
        } else {
            if (!gp.add_edge(e.u, e.v)) throw std::logic_error("repair: blue edge already in G'");
        }
        f.remove_edge(e.u, e.v);
    }
}

// One walk round: traverse colour-alternating walks over the unused edges,
// choosing any unused opposite-colour edge on arrival. Whenever the walk
// returns to a (vertex, entry-colour) state already on it, the stretch in
// between is a degree-neutral closed alternating trail and gets toggled.
// Dead ends retire their last edge for the rest of the round. Each edge is
// traversed at most once, so a round is linear in |F|. Returns the number of
// trails toggled.
int trail_round(Graph& gp, ColoredGraph& f, Rng& rng, std::vector<TraceStep>& trace) {
    const auto raw = f.edges();
    const int m = static_cast<int>(raw.size());
    if (m == 0) return 0;
    std::vector<FEdge> edges(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto [u, v, c] = raw[static_cast<size_t>(i)];
        edges[static_cast<size_t>(i)] = {u, v, c};
    }
    const int n = f.vertex_count();
    const auto cbit = [](EdgeColor c) { return c == EdgeColor::Red ? 0 : 1; };

    // adj[2v + colour]: incident edges of that colour, in random round order
    std::vector<std::vector<int>> adj(static_cast<size_t>(2 * n));
    for (int i = 0; i < m; ++i) {
        const auto& e = edges[static_cast<size_t>(i)];
        adj[static_cast<size_t>(2 * e.u + cbit(e.c))].push_back(i);
        adj[static_cast<size_t>(2 * e.v + cbit(e.c))].push_back(i);
    }
    for (auto& lst : adj) std::shuffle(lst.begin(), lst.end(), rng);

    std::vector<size_t> ptr(static_cast<size_t>(2 * n), 0);
    std::vector<char> used(static_cast<size_t>(m), 0);
    // the walk: edge stack, state stack (state = 2*vertex + entry colour) and
    // the position of each state on the walk (-1 if absent)
    std::vector<int> walk, states;
    std::vector<int> pos(static_cast<size_t>(2 * n), -1);
    int toggled = 0;

    std::vector<int> order(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) order[static_cast<size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);

    for (int start : order) {
        if (used[static_cast<size_t>(start)]) continue;
        const auto& se = edges[static_cast<size_t>(start)];
        // anchor at u as if entered via the opposite colour, then take `start`
        const int anchor = 2 * se.u + (1 - cbit(se.c));
        states.push_back(anchor);
        pos[static_cast<size_t>(anchor)] = 0;
        used[static_cast<size_t>(start)] = 1;
        walk.push_back(start);
        int state = 2 * se.v + cbit(se.c);

        while (true) {
            // arrival: close off a repeated state, otherwise record it
            const int at = pos[static_cast<size_t>(state)];
            if (at >= 0) {
                std::vector<FEdge> seg;
                seg.reserve(walk.size() - static_cast<size_t>(at));
                for (size_t i = static_cast<size_t>(at); i < walk.size(); ++i)
                    seg.push_back(edges[static_cast<size_t>(walk[i])]);
                if (seg.size() < 4 || seg.size() % 2 != 0)
                    throw std::logic_error("repair: malformed closed trail");
                apply_edges(gp, f, seg);
                trace.push_back({static_cast<int>(seg.size()), f.edge_count()});
                ++toggled;
                for (size_t i = states.size(); i-- > static_cast<size_t>(at) + 1;)
                    pos[static_cast<size_t>(states[i])] = -1;
                states.resize(static_cast<size_t>(at) + 1);
                walk.resize(static_cast<size_t>(at));
            } else {
                pos[static_cast<size_t>(state)] = static_cast<int>(states.size());
                states.push_back(state);
            }

            // extend from the top state; on a dead end retire the last edge
            int next_e = -1;
            while (true) {
                const int s = states.back();
                const size_t want = static_cast<size_t>(s ^ 1); // opposite colour
                auto& lst = adj[want];
                auto& p = ptr[want];
                while (p < lst.size() && used[static_cast<size_t>(lst[p])]) ++p;
                if (p < lst.size()) {
                    next_e = lst[p++];
                    break;
                }
                if (walk.empty()) break;
                walk.pop_back(); // stays retired for this round
                pos[static_cast<size_t>(states.back())] = -1;
                states.pop_back();
            }
            if (next_e == -1) break; // walk fully unwound

            used[static_cast<size_t>(next_e)] = 1;
            walk.push_back(next_e);
            const auto& e = edges[static_cast<size_t>(next_e)];
            const int from = states.back() / 2;
            state = 2 * (e.u == from ? e.v : e.u) + cbit(e.c);
        }
        pos[static_cast<size_t>(states.back())] = -1;
        states.pop_back();
        if (!states.empty()) throw std::logic_error("repair: walk stack not unwound");
    }
    return toggled;
}

} // namespace

RepairResult repair(const Graph& g, const std::vector<int>& target, const RepairOptions& opts) {
    const int n = g.vertex_count();
    if (static_cast<int>(target.size()) != n)
        throw std::invalid_argument("repair: target length mismatch");
    auto realization = opts.greedy_init ? realize_near(target, g) : realize(target);
    if (!realization) throw std::invalid_argument("repair: target sequence is not graphic");

    RepairResult res;
    res.discrepancy = discrepancy(g, target);
    Graph gp = std::move(*realization);
    ColoredGraph f = colored_symmetric_difference(g, gp);

    // deterministic internal stream for the pairing rounds
    Rng rng(mix_seed(0xD5EC5EEDULL, static_cast<std::uint64_t>(n)));

    // phase 1: bulk elimination of closed alternating trails
    int quiet = 0;
    while (f.edge_count() > 0 && quiet < 2) {
        if (trail_round(gp, f, rng, res.trace) == 0)
            ++quiet;
        else
            quiet = 0;
    }

    // phase 2: exact elimination of the remaining simple alternating cycles.
    // Only vertices surviving the zero-colour peel can lie on one, so each
    // sweep probes the current core in ascending order. F only shrinks, so a
    // vertex whose probe fails stays exhausted for good; once a sweep makes
    // no progress the whole graph is certified cycle-free.
    int w_floor = 0;
    while (f.edge_count() > 0) {
        bool progressed = false;
        for (int w : zero_colour_peel(f)) {
            if (w < w_floor) continue;
            auto cycle = find_alternating_cycle_through(f, w);
            if (!cycle) {
                w_floor = w + 1;
                continue;
            }
            std::vector<FEdge> chain;
            const int len = cycle->length();
            for (int i = 0; i < len; ++i) {
                chain.push_back({cycle->vertices[static_cast<size_t>(i)],
                                 cycle->vertices[static_cast<size_t>((i + 1) % len)],
                                 cycle->colors[static_cast<size_t>(i)]});
            }
            apply_edges(gp, f, chain);
            res.trace.push_back({len, f.edge_count()});
            // a toggled cycle reshuffles the trail structure; cheap pairing
            // rounds often clear whole batches before the next matcher call
            while (f.edge_count() > 0 && trail_round(gp, f, rng, res.trace) > 0) {
            }
            w_floor = w;
            progressed = true;
            break;
        }
        if (!progressed) break;
    }

    for (int v = 0; v < n; ++v)
        if (gp.degree(v) != target[static_cast<size_t>(v)])
            throw std::logic_error("repair: degree mismatch after repair");

    res.symdiff_size = f.edge_count();
    res.iterations = static_cast<long long>(res.trace.size());
    res.repaired = std::move(gp);
    return res;
}

bool check_edit_bound(const RepairResult& result, int n, double c) {
    if (result.discrepancy == 0) return result.symdiff_size == 0;
    const double n2 = static_cast<double>(n) * n;
    const double delta = static_cast<double>(result.discrepancy) / n2;
    return static_cast<double>(result.symdiff_size) <= c * std::sqrt(delta) * n2 + 1e-9;
}

} // namespace degseq
