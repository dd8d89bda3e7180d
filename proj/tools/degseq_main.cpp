#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "degseq/estimator.hpp"
#include "degseq/harness.hpp"
#include "degseq/io.hpp"
#include "degseq/oracle.hpp"
#include "degseq/repair.hpp"
#include "degseq/tester.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + output);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// property argument: inline JSON, or @path to a JSON file
degseq::DegreeSequenceProperty parse_property(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@')
        return degseq::property_from_json_text(read_text_file(arg.substr(1)));
    return degseq::property_from_json_text(arg);
}

json experiment_json(const std::string& csv, json summary) {
    summary["csv"] = csv;
    return summary;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-sequence repair and dense-model property testing"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    std::string output;
    std::string format = "csv";
    app.add_option("--seed", seed, "root seed for all randomized work");
    app.add_option("--output", output, "write the result here instead of stdout");
    app.add_option("--format", format, "experiment output format")
        ->check(CLI::IsMember({"csv", "json"}));

    // gen
    auto* gen = app.add_subcommand("gen", "generate a (graph, target sequence) instance");
    std::string gen_family = "drifted-realization";
    int gen_n = 100;
    double gen_target = 0.05;
    std::string gen_graph_out, gen_target_out;
    gen->add_option("--family", gen_family, "instance family");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--target-delta", gen_target, "normalized discrepancy target");
    gen->add_option("--graph-out", gen_graph_out, "edge-list output path")->required();
    gen->add_option("--target-out", gen_target_out, "degree-file output path")->required();

    // repair
    auto* rep = app.add_subcommand("repair", "repair a graph to a target degree sequence");
    std::string rep_graph, rep_target, rep_out;
    double rep_c = 10.0;
    bool rep_greedy = false, rep_trace = false;
    rep->add_option("--graph", rep_graph, "edge-list input")->required();
    rep->add_option("--target", rep_target, "degree-file input")->required();
    rep->add_option("--c-const", rep_c, "bound constant for the conformance report");
    rep->add_flag("--greedy-init", rep_greedy, "seed the realization with edges of G");
    rep->add_flag("--trace", rep_trace, "include the per-step trace in the JSON");
    rep->add_option("--repaired-out", rep_out, "write the repaired graph here");

    // estimate
    auto* est = app.add_subcommand("estimate", "sampled degree statistic of a graph");
    std::string est_graph;
    double est_delta = 0.5;
    est->add_option("--graph", est_graph, "edge-list input")->required();
    est->add_option("--delta", est_delta, "approximation parameter")->required();

    // test
    auto* tst = app.add_subcommand("test", "dense-model property test");
    std::string tst_graph, tst_property;
    double tst_eps = 0.1, tst_c = 10.0;
    std::optional<double> tst_delta;
    int tst_repeat = 1;
    tst->add_option("--graph", tst_graph, "edge-list input")->required();
    tst->add_option("--property", tst_property, "property JSON, or @file")->required();
    tst->add_option("--epsilon", tst_eps, "distance parameter")->required();
    tst->add_option("--c-const", tst_c, "repair-bound constant");
    tst->add_option("--delta-override", tst_delta, "pin delta directly");
    tst->add_option("--repeat", tst_repeat, "odd majority-vote repetitions");

    // experiments
    auto* exps = app.add_subcommand("exp-scaling", "symmetric-difference scaling experiment");
    degseq::ScalingSpec sspec;
    std::string sfam = "drifted-realization";
    exps->add_option("--n", sspec.n, "vertex count");
    exps->add_option("--deltas", sspec.deltas, "target delta grid");
    exps->add_option("--trials", sspec.trials, "trials per cell");
    exps->add_option("--family", sfam, "instance family");
    exps->add_option("--c-const", sspec.c_const, "bound constant");

    auto* expe = app.add_subcommand("exp-estimator", "estimator concentration experiment");
    degseq::EstimatorExpSpec espec;
    expe->add_option("--n", espec.n, "vertex count");
    expe->add_option("--delta", espec.delta, "approximation parameter");
    expe->add_option("--trials", espec.trials, "trials per family");
    expe->add_option("--families", espec.families, "graph families");

    auto* expt = app.add_subcommand("exp-tester", "tester completeness/soundness experiment");
    degseq::TesterExpSpec tspec;
    expt->add_option("--n", tspec.n, "vertex count");
    expt->add_option("--delta-override", tspec.delta_override, "pinned delta");
    expt->add_option("--trials", tspec.trials, "trials per case");
    expt->add_option("--fallback-cases", tspec.fallback_cases, "small-n suite size");

    auto* cal = app.add_subcommand("calibrate-c", "estimate the scaling-bound constant");
    degseq::ScalingSpec cspec;
    std::string cfam = "drifted-realization";
    cal->add_option("--n", cspec.n, "vertex count");
    cal->add_option("--deltas", cspec.deltas, "target delta grid");
    cal->add_option("--trials", cspec.trials, "trials per cell");
    cal->add_option("--family", cfam, "instance family");

    try {
        app.parse(argc, argv);

        if (*gen) {
            auto inst = degseq::gen_instance(degseq::family_from_name(gen_family), gen_n,
                                             gen_target, seed);
            degseq::save_graph(inst.g, gen_graph_out);
            degseq::save_degrees(inst.target, gen_target_out);
            const double n2 = static_cast<double>(gen_n) * gen_n;
            json j{{"n", gen_n},
                   {"family", gen_family},
                   {"target_delta", gen_target},
                   {"delta_measured",
                    static_cast<double>(degseq::discrepancy(inst.g, inst.target)) / n2},
                   {"seed", seed}};
            emit(j.dump(2), output);
        } else if (*rep) {
            const auto g = degseq::load_graph(rep_graph);
            const auto d = degseq::load_degrees(rep_target);
            degseq::RepairOptions opts;
            opts.greedy_init = rep_greedy;
            auto res = degseq::repair(g, d, opts);
            if (!rep_out.empty()) degseq::save_graph(res.repaired, rep_out);
            const double n2 = static_cast<double>(g.vertex_count()) * g.vertex_count();
            json j{{"n", g.vertex_count()},
                   {"discrepancy", res.discrepancy},
                   {"delta_measured", static_cast<double>(res.discrepancy) / n2},
                   {"symdiff_size", res.symdiff_size},
                   {"symdiff_norm", static_cast<double>(res.symdiff_size) / n2},
                   {"iterations", res.iterations},
                   {"c_const", rep_c},
                   {"bound_ok",
                    degseq::check_edit_bound(res, g.vertex_count(), rep_c)}};
            if (rep_trace) {
                json steps = json::array();
                for (const auto& s : res.trace)
                    steps.push_back({{"length", s.cycle_length},
                                     {"symdiff_after", s.symdiff_after}});
                j["trace"] = std::move(steps);
            }
            emit(j.dump(2), output);
        } else if (*est) {
            const auto g = degseq::load_graph(est_graph);
            degseq::MemoryGraphOracle oracle(g);
            degseq::Rng rng(seed);
            auto res = degseq::estimate_statistic(oracle, est_delta, rng);
            json j = json::parse(degseq::statistic_to_json_text(res.stat));
            j["queries"] = res.queries;
            j["s"] = res.params.s;
            j["t"] = res.params.t;
            j["gamma"] = res.params.gamma;
            j["seed"] = seed;
            emit(j.dump(2), output);
        } else if (*tst) {
            const auto g = degseq::load_graph(tst_graph);
            const auto prop = parse_property(tst_property);
            degseq::MemoryGraphOracle oracle(g);
            degseq::TesterConfig cfg;
            cfg.epsilon = tst_eps;
            cfg.c_const = tst_c;
            cfg.delta_override = tst_delta;
            cfg.seed = seed;
            cfg.repeat = tst_repeat;
            const auto out = degseq::run_tester(oracle, prop, cfg);
            json j{{"accept", out.accept},
                   {"queries", out.queries},
                   {"delta", out.delta},
                   {"fallback", out.fallback},
                   {"property", prop.name},
                   {"seed", seed}};
            emit(j.dump(2), output);
            return out.accept ? 0 : 1;
        } else if (*exps) {
            sspec.seed = seed;
            sspec.family = degseq::family_from_name(sfam);
            const auto rep2 = degseq::exp_scaling(sspec);
            if (format == "json")
                emit(experiment_json(rep2.csv, {{"max_ratio", rep2.max_ratio},
                                                {"slope", rep2.slope}})
                         .dump(2),
                     output);
            else
                emit(rep2.csv, output);
        } else if (*expe) {
            espec.seed = seed;
            const auto rep2 = degseq::exp_estimator(espec);
            if (format == "json")
                emit(experiment_json(rep2.csv,
                                     {{"min_success_rate", rep2.min_success_rate},
                                      {"min_event_a_rate", rep2.min_event_a_rate}})
                         .dump(2),
                     output);
            else
                emit(rep2.csv, output);
        } else if (*expt) {
            tspec.seed = seed;
            const auto rep2 = degseq::exp_tester(tspec);
            if (format == "json")
                emit(experiment_json(rep2.csv,
                                     {{"completeness_rate", rep2.completeness_rate},
                                      {"soundness_rate", rep2.soundness_rate},
                                      {"fallback_rate", rep2.fallback_rate}})
                         .dump(2),
                     output);
            else
                emit(rep2.csv, output);
        } else if (*cal) {
            cspec.seed = seed;
            cspec.family = degseq::family_from_name(cfam);
            const double c = degseq::calibrate_c(cspec);
            emit(json{{"c", c}}.dump(2), output);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
