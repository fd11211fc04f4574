// Copyright 2026 The WalkNN Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "walknn/bench/config.hpp"
#include "walknn/bench/experiments.hpp"
#include "walknn/bench/report.hpp"
#include "walknn/graph/snapshot.hpp"
#include "walknn/simd/distance.hpp"
#include "walknn/verify/property_suite.hpp"

namespace {

using namespace walknn;
using namespace walknn::bench;

constexpr int kExitPropertyFailure = 2;

struct Options {
    ExperimentConfig cfg;
    std::string strategy = "spatch_pernode";
    std::optional<double> alpha;
    std::string mode = "greedy";
    std::string selection = "top_m";
    std::string format;
    std::string index_path;
    double verify_scale = 1.0;
    std::vector<std::string> verify_only;
};

std::string env_name(const std::string& flag) {
    std::string out = "WALKNN_";
    for (char c : flag) out += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

template <typename T>
CLI::Option* add(CLI::App& app, const std::string& flag, T& target, const std::string& help) {
    return app.add_option("--" + flag, target, help)->envname(env_name(flag))->capture_default_str();
}

void register_options(CLI::App& app, Options& o) {
    ExperimentConfig& c = o.cfg;
    add(app, "base", c.base_path, "base vectors (.fvecs/.bvecs); synthetic data when omitted");
    add(app, "queries", c.query_path, "query vectors (.fvecs/.bvecs)");
    add(app, "truth", c.truth_path, "precomputed neighbor ids (.ivecs), informational");
    add(app, "n", c.subsample, "base rows to keep (0 = all)");
    add(app, "query-count", c.query_count, "query rows to keep (0 = all)");
    add(app, "synthetic-n", c.synthetic.base, "synthetic base size");
    add(app, "synthetic-queries", c.synthetic.queries, "synthetic query count");
    add(app, "synthetic-dim", c.synthetic.dim, "synthetic dimension");
    add(app, "synthetic-seed", c.synthetic.seed, "synthetic generator seed");

    add(app, "m", c.build.m, "degree parameter");
    add(app, "m-max-upper", c.build.m_max_upper, "degree cap at layers >= 1");
    add(app, "m-max-bottom", c.build.m_max_bottom, "degree cap at layer 0");
    add(app, "ef-construction", c.build.ef_construction, "construction beam width");
    add(app, "level-multiplier", c.build.level_multiplier, "layer assignment base");
    add(app, "selection", o.selection, "neighbor selection: top_m or heuristic");
    add(app, "build-seed", c.build.seed, "layer assignment seed");

    add(app, "mode", o.mode, "walk mode: greedy or softmax");
    add(app, "ef", c.search.ef, "search beam width");
    add(app, "k", c.search.k, "neighbors per query");
    add(app, "rhat", c.search.r_hat, "softmax sharpness");
    add(app, "threads", c.threads, "query worker threads");

    add(app, "strategy", o.strategy,
        "deletion strategy: tombstone nopatch local fresh spatch_global spatch_pernode clique "
        "global_reconnect rebuild");
    app.add_option("--alpha", o.alpha, "spatch fan-out or fresh prune slack (default per dataset)")
        ->envname("WALKNN_ALPHA");
    add(app, "rhat-delete", c.deletion.r_hat_delete, "deletion-time softmax scale");
    app.add_option("--keep-existing", c.deletion.keep_existing, "spatch keeps pre-existing edges")
        ->envname("WALKNN_KEEP_EXISTING")
        ->capture_default_str();

    add(app, "delete-fraction", c.delete_fraction, "mass deletion: total fraction removed");
    add(app, "batch-fraction", c.batch_fraction, "mass deletion: fraction removed per sample");
    add(app, "rounds", c.steady_rounds, "steady state: delete/reinsert rounds");
    add(app, "slice", c.steady_slice, "steady state: fraction cycled per round");
    add(app, "horizon", c.turnover_horizon_s, "turnover: insertion horizon (simulated seconds)");
    add(app, "lifetime", c.turnover_mean_lifetime_s, "turnover: mean lifetime (simulated seconds)");
    add(app, "sample-every", c.turnover_sample_every_s, "turnover: sampling period (simulated seconds)");
    app.add_option("--rhat-values", c.rhat_values, "r-hat sweep values")
        ->envname("WALKNN_RHAT_VALUES")
        ->delimiter(',')
        ->capture_default_str();
    add(app, "rhat-seeds", c.rhat_seeds, "r-hat sweep seeds");

    add(app, "seed", c.seed, "experiment seed");
    add(app, "output", c.output, "output path (stdout when empty)");
    add(app, "format", o.format, "csv or json (default from the output extension)");
    add(app, "index", o.index_path, "graph snapshot to query instead of building");
    add(app, "scale", o.verify_scale, "verify-spectral: trial count multiplier");
    app.add_option("--only", o.verify_only, "verify-spectral: run only these properties")->delimiter(',');
}

// Resolves string-typed choices into the config; throws on bad values.
void finalize(Options& o, const Dataset& ds, bool steady) {
    ExperimentConfig& c = o.cfg;
    c.search.mode = parse_walk_mode(o.mode);
    c.build.selection = parse_neighbor_selection(o.selection);
    c.rebuild = o.strategy == "rebuild";
    c.deletion.strategy = c.rebuild ? DeletionStrategy::tombstone : parse_deletion_strategy(o.strategy);
    if (o.alpha) {
        c.deletion.alpha = *o.alpha;
    } else {
        c.deletion.alpha = c.deletion.strategy == DeletionStrategy::fresh ? kDefaultPruneAlpha
                           : steady ? default_steady_spatch_alpha(ds.name)
                                    : default_spatch_alpha(ds.name);
    }
    c.validate();
}

ReportFormat output_format(const Options& o) {
    if (!o.format.empty()) return parse_report_format(o.format);
    return o.cfg.output.empty() ? ReportFormat::csv : format_from_path(o.cfg.output);
}

void write_text(const Options& o, const std::string& text) {
    if (o.cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.cfg.output);
    if (!out) throw std::runtime_error("cannot write " + o.cfg.output);
    out << text;
}

void write_rows(const Options& o, const std::vector<MetricRow>& rows) {
    if (rows.empty()) return;
    if (o.cfg.output.empty()) {
        write_report(std::cout, rows, output_format(o));
    } else {
        emit_report(rows, o.cfg.output, output_format(o));
    }
}

Dataset load(Options& o, bool steady = false) {
    Dataset ds = load_experiment_dataset(o.cfg);
    finalize(o, ds, steady);
    std::fprintf(stderr, "dataset %s: %zu base x %zu dim, %zu queries; kernel %s\n", ds.name.c_str(),
                 ds.base.rows, ds.dim(), ds.queries.rows, std::string(simd::isa_name(simd::active_isa())).c_str());
    return ds;
}

int cmd_build(Options& o) {
    const Dataset ds = load(o);
    if (o.cfg.output.empty()) throw std::invalid_argument("build needs --output for the snapshot");
    const HnswIndex index = build_index(ds.base, o.cfg.build);
    write_snapshot_file(index.graph(), o.cfg.output);
    std::fprintf(stderr, "built %zu nodes, %d layers, %zu layer-0 edges -> %s\n", index.size(),
                 index.graph().num_layers(), index.graph().edge_count(0), o.cfg.output.c_str());
    return 0;
}

int cmd_query(Options& o) {
    const Dataset ds = load(o);
    HnswIndex index = [&] {
        if (o.index_path.empty()) return build_index(ds.base, o.cfg.build);
        VectorStore store(ds.dim());
        for (std::size_t i = 0; i < ds.base.rows; ++i) store.add(ds.base.row(i));
        return HnswIndex::adopt(std::move(store), read_snapshot_file(o.index_path), o.cfg.build);
    }();
    const Truth truth = live_truth(index, ds.queries, o.cfg.search.k);
    SearchParams params = o.cfg.search;
    params.seed = o.cfg.seed;
    const QueryStats stats = run_queries(index, ds.queries, truth, params, o.cfg.threads);
    MetricRow row;
    row.points_remaining = index.graph().live_count();
    row.recall_at_10 = stats.recall;
    row.distance_computations = stats.distance_computations;
    row.bottom_layer_edges = index.graph().edge_count(0);
    row.vertex_count = index.graph().total_vertex_count();
    write_rows(o, {row});
    return 0;
}

template <typename Run>
int run_rows(Options& o, Run run, bool steady = false) {
    const Dataset ds = load(o, steady);
    std::vector<MetricRow> rows;
    const RowSink sink = [&](const MetricRow& r) {
        rows.push_back(r);
        std::fprintf(stderr, "step %zu: remaining %zu recall %.4f dc %.1f\n", r.step, r.points_remaining,
                     r.recall_at_10, r.distance_computations);
    };
    try {
        run(ds, sink);
    } catch (...) {
        write_rows(o, rows);
        throw;
    }
    write_rows(o, rows);
    return 0;
}

int cmd_rhat_sweep(Options& o) {
    const Dataset ds = load(o);
    const RhatSweep sweep = run_rhat_sweep(o.cfg, ds);
    std::ostringstream out;
    char buf[256];
    if (output_format(o) == ReportFormat::json) {
        std::snprintf(buf, sizeof buf, "{\"greedy_recall\": %.6g, \"greedy_distance_computations\": %.6g, \"points\": [",
                      sweep.greedy_recall, sweep.greedy_distance_computations);
        out << buf;
        for (std::size_t i = 0; i < sweep.mean.size(); ++i) {
            const RhatPoint& p = sweep.mean[i];
            std::snprintf(buf, sizeof buf,
                          "%s\n {\"r_hat\": %.6g, \"greedy_step_frequency\": %.6g, \"uniform_frequency\": %.6g, "
                          "\"recall\": %.6g, \"distance_computations\": %.6g}",
                          i ? "," : "", p.r_hat, p.greedy_step_frequency, p.uniform_frequency, p.recall,
                          p.distance_computations);
            out << buf;
        }
        out << "\n]}\n";
    } else {
        out << "r_hat,greedy_step_frequency,uniform_frequency,recall,distance_computations\n";
        for (const RhatPoint& p : sweep.mean) {
            std::snprintf(buf, sizeof buf, "%.6g,%.6g,%.6g,%.6g,%.6g\n", p.r_hat, p.greedy_step_frequency,
                          p.uniform_frequency, p.recall, p.distance_computations);
            out << buf;
        }
        std::snprintf(buf, sizeof buf, "greedy,1,,%.6g,%.6g\n", sweep.greedy_recall,
                      sweep.greedy_distance_computations);
        out << buf;
    }
    write_text(o, out.str());
    return 0;
}

int cmd_verify(Options& o) {
    verify::SuiteOptions opts;
    opts.seed = o.cfg.seed;
    opts.scale = o.verify_scale;
    const auto outcomes = verify::run_spectral_properties(opts, o.verify_only, [](const verify::PropertyOutcome& r) {
        std::fprintf(stderr, "%s %s (%.2fs): %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                     r.detail.c_str());
    });
    write_text(o, verify::suite_json(outcomes, opts));
    for (const auto& r : outcomes) {
        if (!r.passed) return kExitPropertyFailure;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"walknn: dynamic graph ANN index with random-walk-preserving deletion"};
    app.set_config("--config", "", "flat key=value configuration file");
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    register_options(app, o);

    auto* build = app.add_subcommand("build", "build an index and write its graph snapshot");
    auto* query = app.add_subcommand("query", "answer the query set and report recall");
    auto* mass = app.add_subcommand("mass-delete", "delete most points in batches, sampling after each");
    auto* steady = app.add_subcommand("steady-state", "delete and reinsert slices repeatedly");
    auto* turnover = app.add_subcommand("turnover", "simulated insert/expire stream");
    auto* sweep = app.add_subcommand("rhat-sweep", "softmax sharpness sweep against greedy search");
    auto* verify = app.add_subcommand("verify-spectral", "run the spectral property suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(o);
        if (query->parsed()) return cmd_query(o);
        if (mass->parsed()) {
            return run_rows(o, [&](const Dataset& ds, const RowSink& sink) { run_mass_deletion(o.cfg, ds, sink); });
        }
        if (steady->parsed()) {
            return run_rows(o, [&](const Dataset& ds, const RowSink& sink) { run_steady_state(o.cfg, ds, sink); }, true);
        }
        if (turnover->parsed()) {
            return run_rows(o, [&](const Dataset& ds, const RowSink& sink) { run_turnover(o.cfg, ds, sink); });
        }
        if (sweep->parsed()) return cmd_rhat_sweep(o);
        if (verify->parsed()) return cmd_verify(o);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
