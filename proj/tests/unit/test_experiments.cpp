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

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <thread>

#include "walknn/bench/experiments.hpp"

namespace {

using namespace walknn;
using namespace walknn::bench;

Dataset small_dataset(std::size_t n = 1000, std::size_t q = 50) {
    SyntheticSpec spec;
    spec.base = n;
    spec.queries = q;
    spec.dim = 16;
    spec.latent_dim = 6;
    spec.clusters = 8;
    return synthetic_clustered(spec);
}

ExperimentConfig small_config(DeletionStrategy strategy = DeletionStrategy::spatch_pernode) {
    ExperimentConfig cfg;
    cfg.build = BuildParams::for_degree(8);
    cfg.build.ef_construction = 40;
    cfg.search.ef = 32;
    cfg.deletion.strategy = strategy;
    return cfg;
}

void expect_same_except_time(const std::vector<MetricRow>& a, const std::vector<MetricRow>& b) {
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        MetricRow x = a[i], y = b[i];
        x.deletion_seconds = y.deletion_seconds = 0.0;
        EXPECT_EQ(x, y) << "row " << i;
    }
}

TEST(Synthetic, ShapeAndDeterminism) {
    const auto a = small_dataset(300, 20);
    const auto b = small_dataset(300, 20);
    EXPECT_EQ(a.base.rows, 300u);
    EXPECT_EQ(a.queries.rows, 20u);
    EXPECT_EQ(a.dim(), 16u);
    EXPECT_EQ(a.base.data, b.base.data);
    EXPECT_EQ(a.name, "synthetic");
}

TEST(Config, AlphaDefaultsAndValidation) {
    EXPECT_DOUBLE_EQ(default_spatch_alpha("SIFT1M"), 0.6);
    EXPECT_DOUBLE_EQ(default_spatch_alpha("gist"), 0.4);
    EXPECT_DOUBLE_EQ(default_spatch_alpha("mpnet-768"), 1.2);
    EXPECT_DOUBLE_EQ(default_spatch_alpha("MiniLM"), 1.2);
    EXPECT_DOUBLE_EQ(default_spatch_alpha("synthetic"), 0.6);
    EXPECT_DOUBLE_EQ(default_steady_spatch_alpha("sift"), 0.5);
    EXPECT_DOUBLE_EQ(default_steady_spatch_alpha("mbread"), 1.6);
    ExperimentConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.delete_fraction = 1.5;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = ExperimentConfig{};
    cfg.search.k = 100;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = ExperimentConfig{};
    cfg.base_path = "x.fvecs";
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Queries, IdMapTranslatesResults) {
    const auto ds = small_dataset(200, 10);
    const auto index = build_index(ds.base, BuildParams::for_degree(8));
    const Truth truth = live_truth(index, ds.queries, 10);
    std::vector<NodeId> shift(200);
    for (NodeId i = 0; i < 200; ++i) shift[i] = i + 1000;
    Truth shifted = truth;
    for (auto& ids : shifted) {
        for (NodeId& id : ids) id += 1000;
    }
    SearchParams p;
    p.ef = 64;
    const auto a = run_queries(index, ds.queries, truth, p);
    const auto b = run_queries(index, ds.queries, shifted, p, 1, &shift);
    EXPECT_DOUBLE_EQ(a.recall, b.recall);
    EXPECT_GT(a.recall, 0.9);
    const auto c = run_queries(index, ds.queries, truth, p, 3);
    EXPECT_DOUBLE_EQ(a.recall, c.recall);
    EXPECT_DOUBLE_EQ(a.distance_computations, c.distance_computations);
}

TEST(MassDeletion, RowCountArithmetic) {
    const auto ds = small_dataset();
    auto cfg = small_config(DeletionStrategy::tombstone);
    const auto r = run_mass_deletion(cfg, ds);
    ASSERT_EQ(r.rows.size(), 100u);
    EXPECT_EQ(r.initial.points_remaining, 1000u);
    EXPECT_EQ(r.rows.back().points_remaining, 200u);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        EXPECT_EQ(r.rows[i].step, i + 1);
        EXPECT_EQ(r.rows[i].points_remaining, 1000u - 8u * (i + 1));
        EXPECT_EQ(r.rows[i].bottom_layer_edges, r.initial.bottom_layer_edges);
        EXPECT_EQ(r.rows[i].vertex_count, r.initial.vertex_count);
    }
    cfg.batch_fraction = 0.3;
    EXPECT_THROW(run_mass_deletion(cfg, ds), std::invalid_argument);
}

TEST(MassDeletion, DeterministicAcrossRuns) {
    const auto ds = small_dataset(600, 30);
    auto cfg = small_config();
    cfg.batch_fraction = 0.1;
    const auto a = run_mass_deletion(cfg, ds);
    const auto b = run_mass_deletion(cfg, ds);
    expect_same_except_time(a.rows, b.rows);
    TruthCache cache;
    const auto c = run_mass_deletion(cfg, ds, {}, &cache);
    const auto d = run_mass_deletion(cfg, ds, {}, &cache);
    expect_same_except_time(a.rows, c.rows);
    expect_same_except_time(c.rows, d.rows);
}

TEST(MassDeletion, SinkSeesEveryRow) {
    const auto ds = small_dataset(400, 20);
    auto cfg = small_config(DeletionStrategy::nopatch);
    cfg.batch_fraction = 0.2;
    std::vector<MetricRow> seen;
    const auto r = run_mass_deletion(cfg, ds, [&](const MetricRow& row) { seen.push_back(row); });
    EXPECT_EQ(seen, r.rows);
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
        EXPECT_LT(r.rows[i].points_remaining, r.rows[i - 1].points_remaining);
        EXPECT_LE(r.rows[i].bottom_layer_edges, r.rows[i - 1].bottom_layer_edges);
        EXPECT_GE(r.rows[i].deletion_seconds, r.rows[i - 1].deletion_seconds);
    }
}

TEST(MassDeletion, MeasurementNotTimedAsDeletion) {
    const auto ds = small_dataset(400, 20);
    auto cfg = small_config(DeletionStrategy::tombstone);
    cfg.delete_fraction = 0.5;
    cfg.batch_fraction = 0.1;
    // Each distance evaluation during measurement now costs 20 microseconds.
    cfg.search.on_distance = [] { std::this_thread::sleep_for(std::chrono::microseconds(20)); };
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = run_mass_deletion(cfg, ds);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ASSERT_EQ(r.rows.size(), 5u);
    EXPECT_GT(wall, 0.2);
    EXPECT_LT(r.rows.back().deletion_seconds, 0.02 * wall);
}

TEST(MassDeletion, TruthCoversSurvivorsOnly) {
    const auto ds = small_dataset(300, 30);
    auto index = build_index(ds.base, BuildParams::for_degree(8));
    for (NodeId i = 0; i < 300; i += 2) delete_tombstone(index, i);
    for (NodeId i = 1; i < 300; i += 4) delete_nopatch(index, i);
    const Truth t = live_truth(index, ds.queries, 10);
    for (const auto& ids : t) {
        ASSERT_EQ(ids.size(), 10u);
        for (NodeId id : ids) EXPECT_TRUE(index.graph().is_live(id));
    }
    for (NodeId i = 3; i < 300; i += 4) delete_nopatch(index, i);
    const Truth none = live_truth(index, ds.queries, 10);
    for (const auto& ids : none) EXPECT_TRUE(ids.empty());
}

TEST(MassDeletion, RebuildBaselineReproducible) {
    const auto ds = small_dataset(500, 30);
    auto cfg = small_config();
    cfg.rebuild = true;
    cfg.batch_fraction = 0.2;
    const auto a = run_mass_deletion(cfg, ds);
    const auto b = run_mass_deletion(cfg, ds);
    expect_same_except_time(a.rows, b.rows);
    // A rebuilt index is as good as the initial full build, up to build noise.
    for (const auto& row : a.rows) EXPECT_GE(row.recall_at_10, a.initial.recall_at_10 - 0.05);
    EXPECT_LT(a.rows.back().bottom_layer_edges, a.initial.bottom_layer_edges);
}

TEST(SteadyState, SlicesPartitionTheRows) {
    const auto slices = steady_state_slices(1000, 0.1, 10, 3);
    ASSERT_EQ(slices.size(), 10u);
    std::set<std::size_t> seen;
    for (const auto& s : slices) {
        EXPECT_EQ(s.size(), 100u);
        seen.insert(s.begin(), s.end());
    }
    EXPECT_EQ(seen.size(), 1000u);
    EXPECT_EQ(*seen.rbegin(), 999u);
}

TEST(SteadyState, RowsKeepEveryPoint) {
    const auto ds = small_dataset(500, 30);
    for (auto strategy : {DeletionStrategy::spatch_pernode, DeletionStrategy::tombstone}) {
        auto cfg = small_config(strategy);
        const auto r = run_steady_state(cfg, ds);
        ASSERT_EQ(r.rows.size(), 10u);
        for (const auto& row : r.rows) {
            EXPECT_EQ(row.points_remaining, 500u);
            EXPECT_GT(row.recall_at_10, r.initial.recall_at_10 - 0.15);
        }
        const auto again = run_steady_state(cfg, ds);
        expect_same_except_time(r.rows, again.rows);
    }
}

TEST(SteadyState, RebuildRowsMatchFreshBuild) {
    const auto ds = small_dataset(400, 30);
    auto cfg = small_config();
    cfg.rebuild = true;
    cfg.steady_rounds = 3;
    const auto r = run_steady_state(cfg, ds);
    for (const auto& row : r.rows) {
        MetricRow x = row, y = r.initial;
        x.deletion_seconds = y.deletion_seconds = 0.0;
        x.step = y.step = 0;
        EXPECT_EQ(x, y);
    }
}

ExperimentConfig turnover_config(DeletionStrategy strategy) {
    auto cfg = small_config(strategy);
    cfg.turnover_horizon_s = 600.0;
    cfg.turnover_mean_lifetime_s = 60.0;
    cfg.turnover_sample_every_s = 30.0;
    return cfg;
}

TEST(Turnover, TombstoneNeverFrees) {
    const auto ds = small_dataset(700, 20);
    const auto r = run_turnover(turnover_config(DeletionStrategy::tombstone), ds);
    const auto& rows = r.metrics.rows;
    ASSERT_GT(rows.size(), 20u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_GE(rows[i].vertex_count, rows[i - 1].vertex_count);
        EXPECT_GE(rows[i].bottom_layer_edges, rows[i - 1].bottom_layer_edges);
    }
    EXPECT_EQ(rows.back().points_remaining, 0u);
    EXPECT_DOUBLE_EQ(r.expected_live, 60.0);
    EXPECT_EQ(r.sample_times.size(), rows.size());
}

TEST(Turnover, LiveCountFollowsLittlesLaw) {
    const auto ds = small_dataset(700, 20);
    const auto r = run_turnover(turnover_config(DeletionStrategy::spatch_pernode), ds);
    const double sigma = std::sqrt(r.expected_live);
    int checked = 0;
    for (std::size_t i = 0; i < r.tail_begin; ++i) {
        if (r.sample_times[i] < 4 * 60.0) continue;
        EXPECT_NEAR(static_cast<double>(r.metrics.rows[i].points_remaining), r.expected_live, 4 * sigma);
        ++checked;
    }
    EXPECT_GT(checked, 5);
}

TEST(Turnover, SPatchTailShedsEdges) {
    const auto ds = small_dataset(700, 20);
    const auto r = run_turnover(turnover_config(DeletionStrategy::spatch_pernode), ds);
    const auto& rows = r.metrics.rows;
    ASSERT_LT(r.tail_begin, rows.size());
    EXPECT_GE(r.sample_times[r.tail_begin], 600.0);
    for (std::size_t i = r.tail_begin + 1; i < rows.size(); ++i) {
        if (rows[i - 1].bottom_layer_edges == 0) break;
        EXPECT_LT(rows[i].bottom_layer_edges, rows[i - 1].bottom_layer_edges);
    }
    EXPECT_EQ(rows.back().bottom_layer_edges, 0u);
}

TEST(Turnover, Errors) {
    const auto ds = small_dataset(100, 5);
    auto cfg = turnover_config(DeletionStrategy::tombstone);
    EXPECT_THROW(run_turnover(cfg, ds), std::invalid_argument);
    cfg.turnover_horizon_s = 50.0;
    cfg.rebuild = true;
    EXPECT_THROW(run_turnover(cfg, ds), std::invalid_argument);
}

TEST(RhatSweep, SharpLimitIsGreedy) {
    const auto ds = small_dataset(600, 40);
    auto cfg = small_config();
    cfg.rhat_values = {0.01, 1e6};
    cfg.rhat_seeds = 2;
    const auto s = run_rhat_sweep(cfg, ds);
    ASSERT_EQ(s.mean.size(), 2u);
    ASSERT_EQ(s.per_seed.size(), 2u);
    EXPECT_DOUBLE_EQ(s.mean[1].greedy_step_frequency, 1.0);
    EXPECT_DOUBLE_EQ(s.mean[1].recall, s.greedy_recall);
    EXPECT_DOUBLE_EQ(s.mean[1].distance_computations, s.greedy_distance_computations);
    // The flat limit picks the nearest about as often as a uniform draw would.
    EXPECT_NEAR(s.mean[0].greedy_step_frequency, s.mean[0].uniform_frequency, 0.05);
    EXPECT_LT(s.mean[0].greedy_step_frequency, 0.5);
}

}  // namespace
