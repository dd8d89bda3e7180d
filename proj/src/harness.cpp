#include "degseq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "degseq/degree_seq.hpp"
#include "degseq/estimator.hpp"
#include "degseq/oracle.hpp"
#include "degseq/repair.hpp"
#include "degseq/rng.hpp"
#include "degseq/tester.hpp"

namespace degseq {

std::string family_name(InstanceFamily family) {
    switch (family) {
        case InstanceFamily::DriftedRealization: return "drifted-realization";
        case InstanceFamily::RandomVsRegular: return "random-vs-regular";
        case InstanceFamily::SplitVsRegular: return "split-vs-regular";
    }
    throw std::invalid_argument("family_name: bad enum value");
}

InstanceFamily family_from_name(const std::string& name) {
    if (name == "drifted-realization") return InstanceFamily::DriftedRealization;
    if (name == "random-vs-regular") return InstanceFamily::RandomVsRegular;
    if (name == "split-vs-regular") return InstanceFamily::SplitVsRegular;
    throw std::invalid_argument("family_from_name: unknown family '" + name + "'");
}

int default_jobs() {
    if (const char* env = std::getenv("DEGSEQ_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Index-addressed parallel loop; results keyed by index stay deterministic
// regardless of the worker count.
void parallel_trials(int count, const std::function<void(int)>& fn) {
    const int jobs = std::min(default_jobs(), count);
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int j = 0; j < jobs; ++j) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// closest feasible regular degree: r*n must be even, 0 <= r <= n-1
int fix_regular(int n, long long r) {
    if (r < 0) r = 0;
    if (r > n - 1) r = n - 1;
    if (n % 2 == 1 && r % 2 == 1) r = (r > 0) ? r - 1 : r + 1;
    return static_cast<int>(r);
}

GenInstance drifted_realization(int n, double target, std::uint64_t seed) {
    const Graph base = random_graph(n, 0.15, mix_seed(seed, 1));
    std::vector<int> d = degree_sequence(base);
    auto g0 = realize(d);
    if (!g0) throw std::logic_error("gen_instance: realization of a real sequence failed");
    GenInstance inst{std::move(*g0), std::move(d)};
    if (target == 0.0) return inst;
    const double n2 = static_cast<double>(n) * n;
    const double lo = 0.5 * target * n2, hi = 2.0 * target * n2;
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    for (int attempt = 0; attempt < 500; ++attempt) {
        const long long disc = discrepancy(inst.g, inst.target);
        if (disc >= lo && disc <= hi) return inst;
        if (disc > hi) break; // overshot; flips cannot reliably walk back
        // each flip moves the discrepancy by at most 2; aim for the centre
        long long flips = static_cast<long long>((target * n2 - disc) / 4.0);
        if (flips < 1) flips = 1;
        if (flips > pairs) flips = pairs;
        inst.g = perturb_edges(inst.g, flips, mix_seed(seed, 100 + attempt));
    }
    throw std::runtime_error("gen_instance: discrepancy window unreachable (drifted-realization)");
}

GenInstance random_vs_regular(int n, double target, std::uint64_t seed) {
    const int r0 = fix_regular(n, std::llround(0.3 * (n - 1)));
    if (target == 0.0) {
        std::vector<int> d(static_cast<size_t>(n), r0);
        auto g0 = realize(d);
        if (!g0) throw std::logic_error("gen_instance: regular sequence not realizable");
        return {std::move(*g0), std::move(d)};
    }
    Graph g = random_graph(n, 0.3, mix_seed(seed, 2));
    const double n2 = static_cast<double>(n) * n;
    const double lo = 0.5 * target * n2, hi = 2.0 * target * n2;
    for (int shift = 0; shift <= n; ++shift) {
        for (int sgn : {1, -1}) {
            if (shift == 0 && sgn < 0) continue;
            const int r = fix_regular(n, static_cast<long long>(r0) + sgn * shift);
            std::vector<int> d(static_cast<size_t>(n), r);
            const long long disc = discrepancy(g, d);
            if (disc >= lo && disc <= hi) return {std::move(g), std::move(d)};
        }
    }
    throw std::runtime_error("gen_instance: discrepancy window unreachable (random-vs-regular)");
}

GenInstance split_vs_regular(int n, double target, std::uint64_t /*seed*/) {
    const int half = n / 2;
    const long long degsum = static_cast<long long>(half) * (half - 1);
    const int r0 = fix_regular(n, std::llround(static_cast<double>(degsum) / n));
    if (target == 0.0) {
        std::vector<int> d(static_cast<size_t>(n), r0);
        auto g0 = realize(d);
        if (!g0) throw std::logic_error("gen_instance: regular sequence not realizable");
        return {std::move(*g0), std::move(d)};
    }
    Graph g = split_graph(n);
    const double n2 = static_cast<double>(n) * n;
    const double lo = 0.5 * target * n2, hi = 2.0 * target * n2;
    for (int shift = 0; shift <= n; ++shift) {
        for (int sgn : {1, -1}) {
            if (shift == 0 && sgn < 0) continue;
            const int r = fix_regular(n, static_cast<long long>(r0) + sgn * shift);
            std::vector<int> d(static_cast<size_t>(n), r);
            const long long disc = discrepancy(g, d);
            if (disc >= lo && disc <= hi) return {std::move(g), std::move(d)};
        }
    }
    throw std::runtime_error("gen_instance: discrepancy window unreachable (split-vs-regular)");
}

} // namespace

GenInstance gen_instance(InstanceFamily family, int n, double target_delta,
                         std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_instance: n must be >= 1");
    if (target_delta < 0.0) throw std::invalid_argument("gen_instance: negative target_delta");
    switch (family) {
        case InstanceFamily::DriftedRealization:
            return drifted_realization(n, target_delta, seed);
        case InstanceFamily::RandomVsRegular:
            return random_vs_regular(n, target_delta, seed);
        case InstanceFamily::SplitVsRegular:
            return split_vs_regular(n, target_delta, seed);
    }
    throw std::invalid_argument("gen_instance: bad family enum");
}

Graph circulant(int n, int h) {
    if (n < 1 || h < 0 || 2 * h > n - 1)
        throw std::invalid_argument("circulant: need 0 <= 2h <= n-1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n) * static_cast<size_t>(h));
    for (int v = 0; v < n; ++v)
        for (int o = 1; o <= h; ++o) {
            const int u = (v + o) % n;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(n, edges);
}

Graph split_graph(int n) {
    if (n < 1) throw std::invalid_argument("split_graph: n must be >= 1");
    const int half = n / 2;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(half) * (half - 1) / 2);
    for (int u = 0; u < half; ++u)
        for (int v = u + 1; v < half; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

ScalingReport exp_scaling(const ScalingSpec& spec) {
    if (spec.trials < 1) throw std::invalid_argument("exp_scaling: trials must be >= 1");
    if (spec.deltas.empty()) throw std::invalid_argument("exp_scaling: empty delta grid");
    struct Row {
        double delta_measured = 0.0, symdiff_norm = 0.0, ratio = 0.0;
        std::uint64_t seed = 0;
    };
    const int cells = static_cast<int>(spec.deltas.size());
    const int total = cells * spec.trials;
    std::vector<Row> rows(static_cast<size_t>(total));
    const double n2 = static_cast<double>(spec.n) * spec.n;
    parallel_trials(total, [&](int idx) {
        const int cell = idx / spec.trials;
        const int trial = idx % spec.trials;
        Row& row = rows[static_cast<size_t>(idx)];
        row.seed = mix_seed(spec.seed, static_cast<std::uint64_t>(cell) * 1000003u +
                                           static_cast<std::uint64_t>(trial));
        auto inst = gen_instance(spec.family, spec.n, spec.deltas[static_cast<size_t>(cell)],
                                 row.seed);
        auto res = repair(inst.g, inst.target);
        row.delta_measured = static_cast<double>(res.discrepancy) / n2;
        row.symdiff_norm = static_cast<double>(res.symdiff_size) / n2;
        row.ratio = row.delta_measured > 0.0
                        ? row.symdiff_norm / std::sqrt(row.delta_measured)
                        : 0.0;
    });

    ScalingReport rep;
    std::string& csv = rep.csv;
    csv += "# schema degseq-scaling-v1\n";
    csv += "n,delta_target,trial,seed,delta_measured,symdiff_norm,ratio\n";
    for (int idx = 0; idx < total; ++idx) {
        const int cell = idx / spec.trials;
        const Row& row = rows[static_cast<size_t>(idx)];
        csv += std::to_string(spec.n) + "," + num(spec.deltas[static_cast<size_t>(cell)]) +
               "," + std::to_string(idx % spec.trials) + "," + std::to_string(row.seed) +
               "," + num(row.delta_measured) + "," + num(row.symdiff_norm) + "," +
               num(row.ratio) + "\n";
        rep.max_ratio = std::max(rep.max_ratio, row.ratio);
    }

    // least-squares slope on per-cell means, log2-log2
    std::vector<std::pair<double, double>> pts;
    for (int cell = 0; cell < cells; ++cell) {
        double md = 0.0, ms = 0.0;
        for (int t = 0; t < spec.trials; ++t) {
            const Row& row = rows[static_cast<size_t>(cell * spec.trials + t)];
            md += row.delta_measured;
            ms += row.symdiff_norm;
        }
        md /= spec.trials;
        ms /= spec.trials;
        if (md > 0.0 && ms > 0.0) pts.emplace_back(std::log2(md), std::log2(ms));
    }
    if (pts.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [x, y] : pts) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double m = static_cast<double>(pts.size());
        rep.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    }
    return rep;
}

double calibrate_c(const ScalingSpec& spec) {
    auto rep = exp_scaling(spec);
    if (rep.max_ratio <= 0.0)
        throw std::invalid_argument("calibrate_c: grid produced no positive discrepancy");
    return rep.max_ratio * 1.5;
}

EstimatorReport exp_estimator(const EstimatorExpSpec& spec) {
    if (spec.trials < 1) throw std::invalid_argument("exp_estimator: trials must be >= 1");
    if (spec.families.empty()) throw std::invalid_argument("exp_estimator: no families");
    const auto params = derive_params(spec.delta);

    EstimatorReport rep;
    rep.min_success_rate = 1.0;
    rep.min_event_a_rate = 1.0;
    std::string& csv = rep.csv;
    csv += "# schema degseq-estimator-v1\n";
    csv += "family,n,delta,trials,seed,success_rate,event_a_rate,mean_anchor_dev,queries\n";

    for (size_t fi = 0; fi < spec.families.size(); ++fi) {
        const std::string& fam = spec.families[fi];
        const std::uint64_t fam_seed = mix_seed(spec.seed, 7000 + fi);
        Graph g;
        if (fam == "gnp-half")
            g = random_graph(spec.n, 0.5, fam_seed);
        else if (fam == "bimodal-split")
            g = split_graph(spec.n);
        else if (fam == "near-regular")
            g = perturb_edges(circulant(spec.n, std::max(1, spec.n / 8)), spec.n, fam_seed);
        else
            throw std::invalid_argument("exp_estimator: unknown family '" + fam + "'");

        struct Trial {
            bool success = false, event_a = false;
            double mean_dev = 0.0;
        };
        std::vector<Trial> results(static_cast<size_t>(spec.trials));
        parallel_trials(spec.trials, [&](int t) {
            Rng rng(mix_seed(spec.seed, fi * 1000000u + static_cast<std::uint64_t>(t)));
            MemoryGraphOracle oracle(g);
            auto est = estimate_statistic(oracle, spec.delta, rng);
            Trial& tr = results[static_cast<size_t>(t)];
            tr.success = delta_approximates(est.stat, g, spec.delta);
            double max_dev = 0.0, sum_dev = 0.0;
            for (const auto& sample : est.samples) {
                const double dev =
                    std::abs(static_cast<double>(sample.hits) / static_cast<double>(est.params.t) -
                             static_cast<double>(g.degree(sample.anchor)) / spec.n);
                max_dev = std::max(max_dev, dev);
                sum_dev += dev;
            }
            tr.event_a = max_dev < est.params.gamma;
            tr.mean_dev = sum_dev / static_cast<double>(est.samples.size());
        });

        int succ = 0, evA = 0;
        double dev = 0.0;
        for (const auto& tr : results) {
            succ += tr.success ? 1 : 0;
            evA += tr.event_a ? 1 : 0;
            dev += tr.mean_dev;
        }
        const double success_rate = static_cast<double>(succ) / spec.trials;
        const double event_a_rate = static_cast<double>(evA) / spec.trials;
        rep.min_success_rate = std::min(rep.min_success_rate, success_rate);
        rep.min_event_a_rate = std::min(rep.min_event_a_rate, event_a_rate);
        csv += fam + "," + std::to_string(spec.n) + "," + num(spec.delta) + "," +
               std::to_string(spec.trials) + "," + std::to_string(spec.seed) + "," +
               num(success_rate) + "," + num(event_a_rate) + "," + num(dev / spec.trials) +
               "," + std::to_string(params.s * params.t) + "\n";
    }
    return rep;
}

namespace {

struct FallbackCase {
    Graph g;
    DegreeSequenceProperty property;
    bool expected;
};

// Small deterministic membership suite with verdicts known by construction.
std::vector<FallbackCase> fallback_suite(int count, std::uint64_t seed) {
    std::vector<FallbackCase> cases;
    cases.reserve(static_cast<size_t>(count));
    for (int i = 0; cases.size() < static_cast<size_t>(count); ++i) {
        const int n = 5 + (i % 8); // 5..12, always < delta^-2 for honest epsilon
        switch (i % 5) {
            case 0: // cycle C_n is 2-regular
                cases.push_back({circulant(n, 1), fixed_regular_property(2), true});
                break;
            case 1: { // path P_n is not 2-regular
                std::vector<std::pair<int, int>> e;
                for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
                cases.push_back({Graph::from_edges(n, e), fixed_regular_property(2), false});
                break;
            }
            case 2: // dense circulant: always regular
                cases.push_back({circulant(n, (n - 1) / 2), any_regular_property(), true});
                break;
            case 3: { // G(n, 1/2) against its own degree sequence
                Graph g = random_graph(n, 0.5, mix_seed(seed, 300 + i));
                auto d = degree_sequence(g);
                std::sort(d.begin(), d.end());
                cases.push_back({std::move(g), explicit_list_property({d}), true});
                break;
            }
            default: // empty graph is 0-regular but not 1-regular
                cases.push_back({Graph(n), fixed_regular_property(1), false});
                break;
        }
    }
    return cases;
}

} // namespace

TesterReport exp_tester(const TesterExpSpec& spec) {
    if (spec.trials < 1) throw std::invalid_argument("exp_tester: trials must be >= 1");
    if (spec.n < 1000 || spec.n % 2 != 0)
        throw std::invalid_argument("exp_tester: n must be even and >= 1000");

    TesterReport rep;
    std::string& csv = rep.csv;
    csv += "# schema degseq-tester-v1\n";
    csv += "case,n,delta,trials,seed,rate\n";

    auto run_case = [&](const std::string& name, const Graph& g,
                        const DegreeSequenceProperty& prop, bool expect_accept,
                        std::uint64_t case_tag) {
        std::vector<char> ok(static_cast<size_t>(spec.trials), 0);
        parallel_trials(spec.trials, [&](int t) {
            MemoryGraphOracle oracle(g);
            TesterConfig cfg;
            cfg.epsilon = 0.5;
            cfg.delta_override = spec.delta_override;
            cfg.seed = mix_seed(spec.seed, case_tag * 1000000u + static_cast<std::uint64_t>(t));
            const auto out = run_tester(oracle, prop, cfg);
            ok[static_cast<size_t>(t)] = (out.accept == expect_accept) ? 1 : 0;
        });
        int good = 0;
        for (char c : ok) good += c;
        const double rate = static_cast<double>(good) / spec.trials;
        csv += name + "," + std::to_string(g.vertex_count()) + "," +
               num(spec.delta_override) + "," + std::to_string(spec.trials) + "," +
               std::to_string(spec.seed) + "," + num(rate) + "\n";
        return rate;
    };

    {
        const int r = 500; // 2*250-regular circulant, genuinely in-property
        const Graph g = circulant(spec.n, r / 2);
        rep.completeness_rate = run_case("completeness-circulant", g,
                                         fixed_regular_property(r), true, 1);
    }
    {
        // split graph vs (n-1)-regular: degree distance 3/4 certifies farness
        const Graph g = split_graph(spec.n);
        rep.soundness_rate = run_case("soundness-split", g,
                                      fixed_regular_property(spec.n - 1), false, 2);
    }
    {
        const auto cases = fallback_suite(spec.fallback_cases, spec.seed);
        int good = 0;
        for (const auto& c : cases) {
            MemoryGraphOracle oracle(c.g);
            TesterConfig cfg;
            cfg.epsilon = 0.1; // honest epsilon: delta^-2 >> n forces the fallback
            cfg.seed = spec.seed;
            const auto out = run_tester(oracle, c.property, cfg);
            if (out.fallback && out.accept == c.expected) ++good;
        }
        rep.fallback_rate = static_cast<double>(good) / static_cast<double>(cases.size());
        csv += "fallback-suite,12,0,"  + std::to_string(spec.fallback_cases) + "," +
               std::to_string(spec.seed) + "," + num(rep.fallback_rate) + "\n";
    }
    return rep;
}

} // namespace degseq
