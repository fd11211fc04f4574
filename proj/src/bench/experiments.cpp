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

#include "walknn/bench/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <thread>

#include "walknn/bench/ground_truth.hpp"

namespace walknn::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t count_of(double fraction, std::size_t n) {
    return static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
}

void fill_counts(MetricRow& row, const HnswIndex& index) {
    row.bottom_layer_edges = index.graph().edge_count(0);
    row.vertex_count = index.graph().total_vertex_count();
}

MetricRow measure(const ExperimentConfig& cfg, const HnswIndex& index, const FloatMatrix& queries,
                  const Truth& truth, std::size_t step, double deletion_seconds, std::size_t live,
                  const std::vector<NodeId>* id_map = nullptr) {
    MetricRow row;
    row.step = step;
    row.points_remaining = live;
    row.deletion_seconds = deletion_seconds;
    fill_counts(row, index);
    if (live == 0) {
        row.recall_at_10 = 1.0;
        return row;
    }
    SearchParams params = cfg.search;
    params.seed = cfg.seed;
    const QueryStats stats = run_queries(index, queries, truth, params, cfg.threads, id_map);
    row.recall_at_10 = stats.recall;
    row.distance_computations = stats.distance_computations;
    return row;
}

std::vector<std::size_t> shuffled_rows(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

void emit(const RowSink& sink, ExperimentResult& out, const MetricRow& row) {
    out.rows.push_back(row);
    if (sink) sink(row);
}

}  // namespace

HnswIndex build_index(const FloatMatrix& base, const BuildParams& params) {
    std::vector<std::size_t> rows(base.rows);
    std::iota(rows.begin(), rows.end(), 0);
    return build_index(base, rows, params);
}

HnswIndex build_index(const FloatMatrix& base, std::span<const std::size_t> rows, const BuildParams& params) {
    HnswIndex index(base.dim, params);
    for (std::size_t r : rows) index.insert(base.row(r));
    return index;
}

std::uint64_t query_seed(std::uint64_t seed, std::size_t query_index) {
    // splitmix64 finalizer over the pair.
    std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(query_index) + 1;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Truth live_truth(const HnswIndex& index, const FloatMatrix& queries, std::size_t k) {
    const LayeredGraph& g = index.graph();
    const std::size_t n = index.size();
    std::vector<char> alive(n, 0);
    for (NodeId i = 0; i < n; ++i) alive[i] = g.is_live(i);
    const std::size_t live = g.live_count();
    if (live == 0) return Truth(queries.rows);
    const auto& store = index.vectors();
    const std::span<const float> base(store.row(0), n * index.dim());
    return brute_force_topk(base, index.dim(), queries.data, std::min(k, live), alive);
}

QueryStats run_queries(const HnswIndex& index, const FloatMatrix& queries, const Truth& truth,
                       const SearchParams& params, std::size_t threads, const std::vector<NodeId>* id_map) {
    if (truth.size() != queries.rows) throw std::invalid_argument("run_queries: truth/query count mismatch");
    struct PerQuery {
        double recall = 1.0;
        std::uint64_t dc = 0, pops = 0, greedy = 0;
        double uniform = 0.0;
    };
    std::vector<PerQuery> per(queries.rows);
    auto work = [&](std::size_t begin, std::size_t end) {
        SearchParams p = params;
        for (std::size_t i = begin; i < end; ++i) {
            if (truth[i].empty()) continue;
            p.k = std::min(params.k, truth[i].size());
            p.seed = query_seed(params.seed, i);
            QueryResult r = index.search(queries.row(i), p);
            if (id_map) {
                for (NodeId& id : r.ids) id = (*id_map)[id];
            }
            per[i] = {recall_at_k(r.ids, truth[i], truth[i].size()), r.distance_computations, r.pops,
                      r.greedy_pops, r.uniform_pick_mass};
        }
    };
    threads = std::max<std::size_t>(1, std::min(threads, queries.rows));
    if (threads == 1) {
        work(0, queries.rows);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (queries.rows + threads - 1) / threads;
        for (std::size_t t = 0; t < threads; ++t) {
            const std::size_t b = t * chunk, e = std::min(queries.rows, b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }
    QueryStats s;
    if (queries.rows == 0) return s;
    double recall = 0.0, dc = 0.0;
    for (const PerQuery& q : per) {
        recall += q.recall;
        dc += static_cast<double>(q.dc);
        s.pops += q.pops;
        s.greedy_pops += q.greedy;
        s.uniform_mass += q.uniform;
    }
    s.recall = recall / static_cast<double>(queries.rows);
    s.distance_computations = dc / static_cast<double>(queries.rows);
    return s;
}

const Truth& TruthCache::get(std::size_t step, const std::function<Truth()>& compute) {
    auto it = entries_.find(step);
    if (it == entries_.end()) it = entries_.emplace(step, compute()).first;
    return it->second;
}

ExperimentResult run_mass_deletion(const ExperimentConfig& cfg, const Dataset& ds, const RowSink& sink,
                                   TruthCache* cache) {
    cfg.validate();
    return run_mass_deletion(cfg, ds, build_index(ds.base, cfg.build), sink, cache);
}

ExperimentResult run_mass_deletion(const ExperimentConfig& cfg, const Dataset& ds, HnswIndex index,
                                   const RowSink& sink, TruthCache* cache) {
    cfg.validate();
    const std::size_t n = ds.base.rows;
    if (index.size() != n) throw std::invalid_argument("run_mass_deletion: index does not match the dataset");
    const std::size_t total = count_of(cfg.delete_fraction, n);
    const std::size_t batch = std::max<std::size_t>(1, count_of(cfg.batch_fraction, n));
    if (total == 0 || total % batch != 0) {
        throw std::invalid_argument("run_mass_deletion: batch size must divide the deletion count");
    }
    const auto order = shuffled_rows(n, cfg.seed);
    const std::size_t k = cfg.search.k;
    auto truth_for = [&](std::size_t step, Truth& local) -> const Truth& {
        if (cache) return cache->get(step, [&] { return live_truth(index, ds.queries, k); });
        local = live_truth(index, ds.queries, k);
        return local;
    };

    ExperimentResult out;
    Truth local;
    out.initial = measure(cfg, index, ds.queries, truth_for(0, local), 0, 0.0, index.graph().live_count());

    double seconds = 0.0;
    for (std::size_t b = 0; b < total / batch; ++b) {
        const std::span<const std::size_t> ids(order.data() + b * batch, batch);
        if (cfg.rebuild) {
            // The original index only tracks survivors; the searched index is
            // rebuilt from scratch over them.
            for (std::size_t id : ids) delete_tombstone(index, static_cast<NodeId>(id));
            const auto t0 = Clock::now();
            std::vector<std::size_t> survivors;
            std::vector<NodeId> id_map;
            for (NodeId i = 0; i < n; ++i) {
                if (index.graph().is_live(i)) {
                    survivors.push_back(i);
                    id_map.push_back(i);
                }
            }
            const HnswIndex fresh = build_index(ds.base, survivors, cfg.build);
            seconds += seconds_since(t0);
            emit(sink, out,
                 measure(cfg, fresh, ds.queries, truth_for(b + 1, local), b + 1, seconds,
                         index.graph().live_count(), &id_map));
            continue;
        }
        const auto t0 = Clock::now();
        for (std::size_t id : ids) delete_point(index, static_cast<NodeId>(id), cfg.deletion);
        seconds += seconds_since(t0);
        emit(sink, out,
             measure(cfg, index, ds.queries, truth_for(b + 1, local), b + 1, seconds, index.graph().live_count()));
    }
    return out;
}

std::vector<std::vector<std::size_t>> steady_state_slices(std::size_t n, double slice_fraction, std::size_t rounds,
                                                          std::uint64_t seed) {
    const std::size_t slice = std::max<std::size_t>(1, count_of(slice_fraction, n));
    const auto order = shuffled_rows(n, seed);
    std::vector<std::vector<std::size_t>> out(rounds, std::vector<std::size_t>(slice));
    for (std::size_t r = 0; r < rounds; ++r) {
        for (std::size_t j = 0; j < slice; ++j) out[r][j] = order[(r * slice + j) % n];
    }
    return out;
}

ExperimentResult run_steady_state(const ExperimentConfig& cfg, const Dataset& ds, const RowSink& sink) {
    cfg.validate();
    return run_steady_state(cfg, ds, build_index(ds.base, cfg.build), sink);
}

ExperimentResult run_steady_state(const ExperimentConfig& cfg, const Dataset& ds, HnswIndex index,
                                  const RowSink& sink) {
    cfg.validate();
    const std::size_t n = ds.base.rows;
    if (index.size() != n) throw std::invalid_argument("run_steady_state: index does not match the dataset");
    const auto slices = steady_state_slices(n, cfg.steady_slice, cfg.steady_rounds, cfg.seed);
    std::vector<NodeId> row_to_node(n);
    std::iota(row_to_node.begin(), row_to_node.end(), 0);

    ExperimentResult out;
    out.initial = measure(cfg, index, ds.queries, live_truth(index, ds.queries, cfg.search.k), 0, 0.0,
                          index.graph().live_count());
    double seconds = 0.0;
    for (std::size_t r = 0; r < cfg.steady_rounds; ++r) {
        const std::vector<std::size_t>& rows = slices[r];
        if (cfg.rebuild) {
            // The slice is gone and back again, so the rebuilt index holds every row.
            const auto t0 = Clock::now();
            index = build_index(ds.base, cfg.build);
            seconds += seconds_since(t0);
        } else {
            const auto t0 = Clock::now();
            for (std::size_t row : rows) delete_point(index, row_to_node[row], cfg.deletion);
            seconds += seconds_since(t0);
            for (std::size_t row : rows) row_to_node[row] = index.insert(ds.base.row(row));
        }
        emit(sink, out,
             measure(cfg, index, ds.queries, live_truth(index, ds.queries, cfg.search.k), r + 1, seconds,
                     index.graph().live_count()));
    }
    return out;
}

TurnoverResult run_turnover(const ExperimentConfig& cfg, const Dataset& ds, const RowSink& sink) {
    cfg.validate();
    if (cfg.rebuild) throw std::invalid_argument("turnover has no rebuild baseline");
    const auto inserts = static_cast<std::size_t>(std::ceil(cfg.turnover_horizon_s));
    if (ds.base.rows < inserts) {
        throw std::invalid_argument("run_turnover: vector stream exhausted before the horizon");
    }
    HnswIndex index(ds.dim(), cfg.build);
    Rng rng(cfg.seed);
    std::exponential_distribution<double> lifetime(1.0 / cfg.turnover_mean_lifetime_s);
    using Event = std::pair<double, NodeId>;
    std::priority_queue<Event, std::vector<Event>, std::greater<>> expiries;

    TurnoverResult result;
    result.expected_live = cfg.turnover_mean_lifetime_s;  // one insertion per simulated second
    double seconds = 0.0;
    std::size_t step = 0;
    auto expire_until = [&](double t) {
        const auto t0 = Clock::now();
        while (!expiries.empty() && expiries.top().first <= t) {
            delete_point(index, expiries.top().second, cfg.deletion);
            expiries.pop();
        }
        seconds += seconds_since(t0);
    };
    auto sample = [&](double t) {
        expire_until(t);
        const std::size_t live = index.graph().live_count();
        const Truth truth = live_truth(index, ds.queries, cfg.search.k);
        MetricRow row = measure(cfg, index, ds.queries, truth, ++step, seconds, live);
        result.sample_times.push_back(t);
        emit(sink, result.metrics, row);
    };

    double next_sample = cfg.turnover_sample_every_s;
    for (std::size_t s = 0; s < inserts; ++s) {
        const auto now = static_cast<double>(s);
        while (next_sample <= now) {
            sample(next_sample);
            next_sample += cfg.turnover_sample_every_s;
        }
        expire_until(now);
        const NodeId id = index.insert(ds.base.row(s));
        expiries.emplace(now + lifetime(rng), id);
    }
    result.tail_begin = result.metrics.rows.size();
    while (true) {
        sample(next_sample);
        next_sample += cfg.turnover_sample_every_s;
        if (expiries.empty()) break;
    }
    return result;
}

RhatSweep run_rhat_sweep(const ExperimentConfig& cfg, const Dataset& ds) {
    cfg.validate();
    return run_rhat_sweep(cfg, ds, build_index(ds.base, cfg.build));
}

RhatSweep run_rhat_sweep(const ExperimentConfig& cfg, const Dataset& ds, const HnswIndex& index) {
    cfg.validate();
    const Truth truth = live_truth(index, ds.queries, cfg.search.k);
    RhatSweep sweep;
    SearchParams greedy = cfg.search;
    greedy.mode = WalkMode::greedy;
    greedy.seed = cfg.seed;
    const QueryStats g = run_queries(index, ds.queries, truth, greedy, cfg.threads);
    sweep.greedy_recall = g.recall;
    sweep.greedy_distance_computations = g.distance_computations;

    sweep.mean.resize(cfg.rhat_values.size());
    for (std::size_t s = 0; s < cfg.rhat_seeds; ++s) {
        std::vector<RhatPoint> points;
        for (double r_hat : cfg.rhat_values) {
            SearchParams p = cfg.search;
            p.mode = WalkMode::softmax;
            p.r_hat = r_hat;
            p.seed = query_seed(cfg.seed, s);
            const QueryStats q = run_queries(index, ds.queries, truth, p, cfg.threads);
            points.push_back({r_hat, q.greedy_step_frequency(), q.uniform_frequency(), q.recall,
                              q.distance_computations});
        }
        sweep.per_seed.push_back(points);
    }
    const auto seeds = static_cast<double>(cfg.rhat_seeds);
    for (std::size_t i = 0; i < cfg.rhat_values.size(); ++i) {
        RhatPoint& m = sweep.mean[i];
        m.r_hat = cfg.rhat_values[i];
        for (const auto& points : sweep.per_seed) {
            m.greedy_step_frequency += points[i].greedy_step_frequency / seeds;
            m.uniform_frequency += points[i].uniform_frequency / seeds;
            m.recall += points[i].recall / seeds;
            m.distance_computations += points[i].distance_computations / seeds;
        }
    }
    return sweep;
}

}  // namespace walknn::bench
