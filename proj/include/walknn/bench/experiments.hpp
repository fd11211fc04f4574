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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "walknn/bench/config.hpp"
#include "walknn/bench/dataset.hpp"
#include "walknn/bench/report.hpp"
#include "walknn/index/hnsw_index.hpp"

namespace walknn::bench {

using Truth = std::vector<std::vector<NodeId>>;
using RowSink = std::function<void(const MetricRow&)>;

struct ExperimentResult {
    /// State right after the initial build, before any deletion.
    MetricRow initial;
    std::vector<MetricRow> rows;
};

/// Inserts every base row in order, so node i holds row i.
HnswIndex build_index(const FloatMatrix& base, const BuildParams& params);
/// Inserts the listed rows in order; node j holds rows[j].
HnswIndex build_index(const FloatMatrix& base, std::span<const std::size_t> rows, const BuildParams& params);

/// Per-query RNG seed derived from the run seed.
std::uint64_t query_seed(std::uint64_t seed, std::size_t query_index);

struct QueryStats {
    double recall = 0.0;
    double distance_computations = 0.0;
    std::uint64_t pops = 0;
    std::uint64_t greedy_pops = 0;
    double uniform_mass = 0.0;

    double greedy_step_frequency() const { return pops ? static_cast<double>(greedy_pops) / pops : 1.0; }
    double uniform_frequency() const { return pops ? uniform_mass / static_cast<double>(pops) : 1.0; }
};

/// Exact k nearest live nodes of the index; k shrinks to the live count.
Truth live_truth(const HnswIndex& index, const FloatMatrix& queries, std::size_t k);

/// Runs the whole query set with query i seeded by query_seed(params.seed, i),
/// spread over `threads` workers. Recall uses each truth list's own length;
/// an empty truth list scores 1. `id_map`, when given, translates result ids
/// into the id space of `truth`.
QueryStats run_queries(const HnswIndex& index, const FloatMatrix& queries, const Truth& truth,
                       const SearchParams& params, std::size_t threads = 1,
                       const std::vector<NodeId>* id_map = nullptr);

/// Truth per measurement step, shared by runs that delete in the same order.
class TruthCache {
 public:
    const Truth& get(std::size_t step, const std::function<Truth()>& compute);

 private:
    std::map<std::size_t, Truth> entries_;
};

ExperimentResult run_mass_deletion(const ExperimentConfig& cfg, const Dataset& ds, const RowSink& sink = {},
                                   TruthCache* cache = nullptr);
/// Starts from `index`, which must hold the base rows as nodes 0..n-1.
ExperimentResult run_mass_deletion(const ExperimentConfig& cfg, const Dataset& ds, HnswIndex index,
                                   const RowSink& sink = {}, TruthCache* cache = nullptr);

/// Rows deleted and reinserted in each steady-state round: consecutive
/// windows of a seeded permutation of 0..n-1, wrapping around.
std::vector<std::vector<std::size_t>> steady_state_slices(std::size_t n, double slice_fraction, std::size_t rounds,
                                                          std::uint64_t seed);

ExperimentResult run_steady_state(const ExperimentConfig& cfg, const Dataset& ds, const RowSink& sink = {});
ExperimentResult run_steady_state(const ExperimentConfig& cfg, const Dataset& ds, HnswIndex index,
                                  const RowSink& sink = {});

struct TurnoverResult {
    /// `initial` stays zeroed; the index starts empty.
    ExperimentResult metrics;
    /// Simulated time of each row, aligned with metrics.rows.
    std::vector<double> sample_times;
    /// Insertion rate times mean lifetime.
    double expected_live = 0.0;
    /// Index of the first row sampled at or after the insertion horizon. The
    /// last row is the first sample with nothing left to expire.
    std::size_t tail_begin = 0;
};

TurnoverResult run_turnover(const ExperimentConfig& cfg, const Dataset& ds, const RowSink& sink = {});

struct RhatPoint {
    double r_hat = 0.0;
    double greedy_step_frequency = 0.0;
    double uniform_frequency = 0.0;
    double recall = 0.0;
    double distance_computations = 0.0;
};

struct RhatSweep {
    double greedy_recall = 0.0;
    double greedy_distance_computations = 0.0;
    /// Means over seeds, one per r_hat value in config order.
    std::vector<RhatPoint> mean;
    /// per_seed[s][i] for seed s and r_hat value i.
    std::vector<std::vector<RhatPoint>> per_seed;
};

RhatSweep run_rhat_sweep(const ExperimentConfig& cfg, const Dataset& ds);
RhatSweep run_rhat_sweep(const ExperimentConfig& cfg, const Dataset& ds, const HnswIndex& index);

}  // namespace walknn::bench
