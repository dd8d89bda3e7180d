#include "degseq/tester.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "degseq/estimator.hpp"

namespace degseq {

namespace {

constexpr double kTol = 1e-12;

std::vector<int> canonical(std::vector<int> d) {
    std::sort(d.begin(), d.end());
    return d;
}

bool regular_feasible(int n, int r) {
    return r >= 0 && r <= n - 1 && (static_cast<long long>(r) * n) % 2 == 0;
}

int fraction_to_r(double fraction, int n) {
    long long r = std::llround(fraction * (n - 1));
    if (r < 0) r = 0;
    if (r > n - 1) r = n - 1;
    return static_cast<int>(r);
}

} // namespace

double min_regular_distance(int n, const DegreeStatistic& stat) {
    validate_statistic(stat);
    if (n < 1) throw std::invalid_argument("min_regular_distance: n must be >= 1");
    const auto counts = bucket_counts(n, stat);
    std::vector<int> vals(static_cast<size_t>(stat.k));
    for (int ell = 1; ell <= stat.k; ++ell)
        vals[static_cast<size_t>(ell - 1)] = bucket_value(n, stat.k, ell);
    // The objective is convex and piecewise linear in r with breakpoints at
    // the bucket values, so the integer minimum sits on one of them.
    double best = -1.0;
    for (int j = 0; j < stat.k; ++j) {
        long long sum = 0;
        for (int i = 0; i < stat.k; ++i)
            sum += counts[static_cast<size_t>(i)] *
                   std::llabs(static_cast<long long>(vals[static_cast<size_t>(i)]) -
                              vals[static_cast<size_t>(j)]);
        const double dist = static_cast<double>(sum) / (static_cast<double>(n) * n);
        if (best < 0.0 || dist < best) best = dist;
    }
    return best;
}

Decision regular_near_decision(double delta, int n, const DegreeStatistic& stat) {
    return min_regular_distance(n, stat) <= delta + kTol ? Decision::Yes : Decision::No;
}

Decision explicit_list_near_decision(const std::vector<std::vector<int>>& sequences,
                                     double delta, int n, const DegreeStatistic& stat) {
    validate_statistic(stat);
    if (sequences.empty()) return Decision::No;
    const auto expanded = expand_statistic(n, stat);
    for (const auto& seq : sequences) {
        if (static_cast<int>(seq.size()) != n)
            throw std::invalid_argument("explicit_list_near_decision: sequence length != n");
        if (multiset_l1(expanded, seq) <= delta + kTol) return Decision::Yes;
    }
    return Decision::No;
}

TestOutcome run_tester(GraphOracle& oracle, const DegreeSequenceProperty& property,
                       const TesterConfig& cfg) {
    if (!(cfg.epsilon > 0.0) || cfg.epsilon > 1.0)
        throw std::invalid_argument("run_tester: epsilon must be in (0, 1]");
    if (!(cfg.c_const > 0.0))
        throw std::invalid_argument("run_tester: c_const must be positive");
    if (cfg.repeat < 1 || cfg.repeat % 2 == 0)
        throw std::invalid_argument("run_tester: repeat must be odd and >= 1");
    if (!property.exact_membership)
        throw std::invalid_argument("run_tester: property lacks exact_membership");

    TestOutcome out;
    const double ratio = cfg.epsilon / cfg.c_const;
    out.delta = cfg.delta_override ? *cfg.delta_override : ratio * ratio / 3.0;
    if (!(out.delta > 0.0) || out.delta > 1.0)
        throw std::invalid_argument("run_tester: delta must be in (0, 1]");

    const int n = oracle.vertex_count();
    const std::uint64_t before = oracle.query_count();

    if (static_cast<double>(n) < 1.0 / (out.delta * out.delta)) {
        // small n: read off the whole graph and decide exactly
        out.fallback = true;
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (oracle.adjacent(u, v)) g.add_edge(u, v);
        out.accept = property.exact_membership(canonical(degree_sequence(g)));
        out.queries = oracle.query_count() - before;
        return out;
    }

    if (!property.near_decision)
        throw std::invalid_argument("run_tester: property '" + property.name +
                                    "' has no near_decision");
    int yes = 0;
    for (int rep = 0; rep < cfg.repeat; ++rep) {
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(rep)));
        auto est = estimate_statistic(oracle, out.delta, rng);
        if (property.near_decision(out.delta, n, est.stat) == Decision::Yes) ++yes;
    }
    out.accept = 2 * yes > cfg.repeat;
    out.queries = oracle.query_count() - before;
    return out;
}

DegreeSequenceProperty any_regular_property() {
    DegreeSequenceProperty p;
    p.name = "any_regular";
    p.exact_membership = [](const std::vector<int>& d) {
        if (d.empty()) return false;
        if (!std::all_of(d.begin(), d.end(), [&](int x) { return x == d.front(); }))
            return false;
        return is_graphic(d);
    };
    p.near_decision = regular_near_decision;
    return p;
}

DegreeSequenceProperty fixed_regular_property(int r) {
    DegreeSequenceProperty p;
    p.name = "fixed_regular";
    p.exact_membership = [r](const std::vector<int>& d) {
        if (d.empty()) return false;
        const int n = static_cast<int>(d.size());
        if (!regular_feasible(n, r)) return false;
        return std::all_of(d.begin(), d.end(), [&](int x) { return x == r; });
    };
    p.near_decision = [r](double delta, int n, const DegreeStatistic& stat) {
        if (!regular_feasible(n, r)) return Decision::No; // no n-term member at all
        std::vector<std::vector<int>> witness{std::vector<int>(static_cast<size_t>(n), r)};
        return explicit_list_near_decision(witness, delta, n, stat);
    };
    return p;
}

DegreeSequenceProperty fixed_regular_fraction_property(double fraction) {
    if (fraction < 0.0 || fraction > 1.0)
        throw std::invalid_argument("fixed_regular_fraction_property: fraction in [0, 1]");
    DegreeSequenceProperty p;
    p.name = "fixed_regular_fraction";
    p.exact_membership = [fraction](const std::vector<int>& d) {
        if (d.empty()) return false;
        return fixed_regular_property(fraction_to_r(fraction, static_cast<int>(d.size())))
            .exact_membership(d);
    };
    p.near_decision = [fraction](double delta, int n, const DegreeStatistic& stat) {
        return fixed_regular_property(fraction_to_r(fraction, n))
            .near_decision(delta, n, stat);
    };
    return p;
}

DegreeSequenceProperty max_degree_property(double fraction) {
    if (fraction < 0.0 || fraction > 1.0)
        throw std::invalid_argument("max_degree_property: fraction in [0, 1]");
    DegreeSequenceProperty p;
    p.name = "max_degree";
    p.exact_membership = [fraction](const std::vector<int>& d) {
        if (d.empty()) return false;
        const int cap = static_cast<int>(fraction * (static_cast<int>(d.size()) - 1) + 1e-9);
        if (d.back() > cap) return false; // canonical input: max is last
        return is_graphic(d);
    };
    // no near_decision: the sampling path reports an explicit failure
    return p;
}

DegreeSequenceProperty explicit_list_property(std::vector<std::vector<int>> sequences) {
    auto canon = std::make_shared<std::vector<std::vector<int>>>();
    canon->reserve(sequences.size());
    for (auto& seq : sequences) {
        if (!is_graphic(seq))
            throw std::invalid_argument("explicit_list_property: sequence is not graphic");
        canon->push_back(canonical(std::move(seq)));
    }
    DegreeSequenceProperty p;
    p.name = "explicit";
    p.exact_membership = [canon](const std::vector<int>& d) {
        return std::any_of(canon->begin(), canon->end(),
                           [&](const std::vector<int>& s) { return s == d; });
    };
    p.near_decision = [canon](double delta, int n, const DegreeStatistic& stat) {
        std::vector<std::vector<int>> fitting;
        for (const auto& s : *canon)
            if (static_cast<int>(s.size()) == n) fitting.push_back(s);
        return explicit_list_near_decision(fitting, delta, n, stat);
    };
    return p;
}

DegreeSequenceProperty property_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const std::string type = j.at("type").get<std::string>();
    if (type == "any_regular") return any_regular_property();
    if (type == "fixed_regular") {
        if (j.contains("r")) return fixed_regular_property(j.at("r").get<int>());
        return fixed_regular_fraction_property(j.at("fraction").get<double>());
    }
    if (type == "max_degree") return max_degree_property(j.at("fraction").get<double>());
    if (type == "explicit")
        return explicit_list_property(j.at("sequences").get<std::vector<std::vector<int>>>());
    throw std::invalid_argument("property_from_json_text: unknown type '" + type + "'");
}

} // namespace degseq
