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

#include "walknn/deletion/strategies.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace walknn {

namespace {

constexpr std::array kStrategies = {
    DeletionStrategy::tombstone,      DeletionStrategy::nopatch,        DeletionStrategy::local,
    DeletionStrategy::fresh,          DeletionStrategy::spatch_global,  DeletionStrategy::spatch_pernode,
    DeletionStrategy::clique,         DeletionStrategy::global_reconnect,
};

constexpr std::array<std::string_view, 8> kNames = {
    "tombstone", "nopatch", "local", "fresh", "spatch_global", "spatch_pernode", "clique", "global_reconnect",
};

double euclid(const HnswIndex& index, NodeId a, NodeId b) {
    return std::sqrt(static_cast<double>(index.distance(a, b)));
}

double log_add_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

std::vector<NodeId> copy_ids(std::span<const NodeId> ids) { return {ids.begin(), ids.end()}; }

void require_bottom(const HnswIndex& index, NodeId p) {
    if (!index.graph().contains(p, 0)) {
        throw GraphError("delete: node " + std::to_string(p) + " is not present at layer 0");
    }
}

std::size_t hard_remove(HnswIndex& index, NodeId p) {
    const auto summary =
        index.graph().remove_node(p, RemovalMode::hard, RemovalScope::bottom_layer, index.pair_distance());
    return summary.removed_edges.empty() ? 0 : summary.removed_edges[0];
}

std::size_t add_if_missing(LayeredGraph& g, NodeId u, NodeId v) {
    if (u == v || g.has_edge(0, u, v)) return 0;
    g.add_edge(0, u, v);
    return 1;
}

// Higher weight first, then lexicographic (from, to).
bool heavier(const PatchEdge& a, const PatchEdge& b) {
    if (a.log_weight != b.log_weight) return a.log_weight > b.log_weight;
    if (a.from != b.from) return a.from < b.from;
    return a.to < b.to;
}

}  // namespace

std::string_view to_string(DeletionStrategy strategy) { return kNames[static_cast<std::size_t>(strategy)]; }

DeletionStrategy parse_deletion_strategy(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) return kStrategies[i];
    }
    if (name == "spatch") return DeletionStrategy::spatch_pernode;
    throw std::invalid_argument("unknown deletion strategy: " + std::string(name));
}

std::span<const DeletionStrategy> all_deletion_strategies() { return kStrategies; }

void DeletionConfig::validate() const {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (!(r_hat_delete > 0.0)) throw std::invalid_argument("r_hat_delete must be positive");
}

std::vector<PatchEdge> spatch_plan(const HnswIndex& index, NodeId p, const DeletionConfig& cfg,
                                   bool* degraded) {
    cfg.validate();
    require_bottom(index, p);
    const LayeredGraph& g = index.graph();
    const auto left = copy_ids(g.in_neighbors(0, p));
    const auto right = copy_ids(g.out_neighbors(0, p));
    if (degraded) *degraded = left.empty() || right.empty();
    if (left.empty() || right.empty()) return {};

    // Every distance the patch looks at, once.
    std::vector<double> d_left(left.size()), d_right(right.size());
    std::vector<double> d_pair(left.size() * right.size(), 0.0);
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < left.size(); ++i) {
        d_left[i] = euclid(index, left[i], p);
        sum += d_left[i];
        ++count;
    }
    for (std::size_t j = 0; j < right.size(); ++j) {
        d_right[j] = euclid(index, p, right[j]);
        sum += d_right[j];
        ++count;
    }
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (left[i] == right[j]) continue;
            d_pair[i * right.size() + j] = euclid(index, left[i], right[j]);
            sum += d_pair[i * right.size() + j];
            ++count;
        }
    }
    const double mu = sum / static_cast<double>(count);
    const double r = mu > 0.0 ? cfg.r_hat_delete / mu : 0.0;
    const double r2 = r * r;
    auto log_w = [r2](double d) { return -r2 * d * d; };

    double log_deg = -std::numeric_limits<double>::infinity();
    for (double d : d_left) log_deg = log_add_exp(log_deg, log_w(d));
    for (double d : d_right) log_deg = log_add_exp(log_deg, log_w(d));

    const std::size_t fan = left.size() + right.size();
    std::vector<PatchEdge> plan;
    if (cfg.strategy == DeletionStrategy::spatch_global) {
        std::vector<PatchEdge> pairs;
        pairs.reserve(left.size() * right.size());
        for (std::size_t i = 0; i < left.size(); ++i) {
            for (std::size_t j = 0; j < right.size(); ++j) {
                if (left[i] == right[j]) continue;
                const double lw = log_add_exp(log_w(d_pair[i * right.size() + j]),
                                              log_w(d_left[i]) + log_w(d_right[j]) - log_deg);
                pairs.push_back({left[i], right[j], lw});
            }
        }
        const auto t = static_cast<std::size_t>(std::llround(cfg.alpha * static_cast<double>(fan)));
        std::sort(pairs.begin(), pairs.end(), heavier);
        pairs.resize(std::min(t, pairs.size()));
        return pairs;
    }

    const double per = std::ceil(static_cast<double>(fan) / static_cast<double>(right.size()));
    const auto t = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(cfg.alpha * per)));
    std::vector<PatchEdge> column;
    for (std::size_t j = 0; j < right.size(); ++j) {
        column.clear();
        for (std::size_t i = 0; i < left.size(); ++i) {
            if (left[i] == right[j]) continue;
            const double lw = log_add_exp(log_w(d_pair[i * right.size() + j]),
                                          log_w(d_left[i]) + log_w(d_right[j]) - log_deg);
            column.push_back({left[i], right[j], lw});
        }
        std::sort(column.begin(), column.end(), heavier);
        column.resize(std::min(t, column.size()));
        plan.insert(plan.end(), column.begin(), column.end());
    }
    return plan;
}

std::vector<NodeId> robust_prune(const HnswIndex& index, NodeId u, std::span<const NodeId> candidates,
                                 double alpha, std::size_t cap) {
    std::vector<std::pair<double, NodeId>> pool;
    pool.reserve(candidates.size());
    for (NodeId c : candidates) {
        if (c != u) pool.emplace_back(euclid(index, u, c), c);
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end(),
                           [](const auto& a, const auto& b) { return a.second == b.second; }),
               pool.end());
    std::vector<char> pruned(pool.size(), 0);
    std::vector<NodeId> kept;
    for (std::size_t i = 0; i < pool.size() && kept.size() < cap; ++i) {
        if (pruned[i]) continue;
        const NodeId c = pool[i].second;
        kept.push_back(c);
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            if (!pruned[j] && alpha * euclid(index, c, pool[j].second) <= pool[j].first) pruned[j] = 1;
        }
    }
    return kept;
}

DeletionSummary delete_tombstone(HnswIndex& index, NodeId p) {
    if (!index.graph().contains(p)) throw GraphError("delete: unknown node " + std::to_string(p));
    index.graph().remove_node(p, RemovalMode::tombstone);
    return {};
}

DeletionSummary delete_nopatch(HnswIndex& index, NodeId p) {
    require_bottom(index, p);
    DeletionSummary s;
    s.edges_removed = hard_remove(index, p);
    return s;
}

DeletionSummary delete_local_reconnect(HnswIndex& index, NodeId p) {
    require_bottom(index, p);
    LayeredGraph& g = index.graph();
    const auto left = copy_ids(g.in_neighbors(0, p));
    const auto right = copy_ids(g.out_neighbors(0, p));
    DeletionSummary s;
    s.degraded = left.empty() || right.empty();
    s.edges_removed = hard_remove(index, p);
    for (NodeId u : left) {
        NodeId best = kInvalidNode;
        float best_d = 0.0f;
        for (NodeId v : right) {
            if (v == u) continue;
            const float d = index.distance(u, v);
            if (best == kInvalidNode || d < best_d || (d == best_d && v < best)) {
                best = v;
                best_d = d;
            }
        }
        if (best != kInvalidNode) s.edges_added += add_if_missing(g, u, best);
    }
    return s;
}

DeletionSummary delete_freshdiskann(HnswIndex& index, NodeId p, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    require_bottom(index, p);
    LayeredGraph& g = index.graph();
    const auto left = copy_ids(g.in_neighbors(0, p));
    const auto right = copy_ids(g.out_neighbors(0, p));
    DeletionSummary s;
    s.degraded = left.empty();
    s.edges_removed = hard_remove(index, p);
    const std::size_t cap = index.degree_cap(0);
    for (NodeId u : left) {
        std::vector<NodeId> cands = copy_ids(g.out_neighbors(0, u));
        for (NodeId v : right) {
            if (v != u && std::find(cands.begin(), cands.end(), v) == cands.end()) cands.push_back(v);
        }
        const std::size_t before = g.out_neighbors(0, u).size();
        const std::set<NodeId> old(g.out_neighbors(0, u).begin(), g.out_neighbors(0, u).end());
        const auto kept = robust_prune(index, u, cands, alpha, cap);
        std::size_t retained = 0;
        for (NodeId v : kept) retained += old.count(v);
        s.edges_added += kept.size() - retained;
        s.edges_removed += before - retained;
        g.replace_out_neighbors(0, u, kept);
    }
    return s;
}

DeletionSummary delete_clique(HnswIndex& index, NodeId p) {
    require_bottom(index, p);
    LayeredGraph& g = index.graph();
    const auto left = copy_ids(g.in_neighbors(0, p));
    const auto right = copy_ids(g.out_neighbors(0, p));
    DeletionSummary s;
    s.degraded = left.empty() || right.empty();
    s.edges_removed = hard_remove(index, p);
    for (NodeId u : left) {
        for (NodeId v : right) s.edges_added += add_if_missing(g, u, v);
    }
    return s;
}

DeletionSummary delete_global_reconnect(HnswIndex& index, NodeId p) {
    require_bottom(index, p);
    LayeredGraph& g = index.graph();
    std::vector<NodeId> hood = copy_ids(g.in_neighbors(0, p));
    for (NodeId v : g.out_neighbors(0, p)) hood.push_back(v);
    std::sort(hood.begin(), hood.end());
    hood.erase(std::unique(hood.begin(), hood.end()), hood.end());
    DeletionSummary s;
    s.edges_removed = hard_remove(index, p);
    if (!g.entry_point()) return s;
    for (NodeId u : hood) {
        if (!g.is_live(u)) continue;
        const std::size_t before = g.edge_count(0);
        index.relink_bottom(u);
        const std::size_t after = g.edge_count(0);
        if (after >= before) {
            s.edges_added += after - before;
        } else {
            s.edges_removed += before - after;
        }
        ++s.relinked;
    }
    return s;
}

DeletionSummary delete_spatch(HnswIndex& index, NodeId p, const DeletionConfig& cfg) {
    bool degraded = false;
    const auto plan = spatch_plan(index, p, cfg, &degraded);
    LayeredGraph& g = index.graph();
    const auto left = copy_ids(g.in_neighbors(0, p));
    const auto right = copy_ids(g.out_neighbors(0, p));
    DeletionSummary s;
    s.degraded = degraded;
    s.edges_removed = hard_remove(index, p);
    if (degraded) return s;
    if (!cfg.keep_existing) {
        std::set<std::pair<NodeId, NodeId>> chosen;
        for (const PatchEdge& e : plan) chosen.emplace(e.from, e.to);
        for (NodeId u : left) {
            for (NodeId v : right) {
                if (u != v && !chosen.count({u, v}) && g.remove_edge(0, u, v)) ++s.edges_removed;
            }
        }
    }
    for (const PatchEdge& e : plan) s.edges_added += add_if_missing(g, e.from, e.to);
    return s;
}

DeletionSummary delete_point(HnswIndex& index, NodeId p, const DeletionConfig& cfg) {
    cfg.validate();
    if (!index.graph().is_live(p)) throw GraphError("delete: node " + std::to_string(p) + " is not live");
    switch (cfg.strategy) {
        case DeletionStrategy::tombstone: return delete_tombstone(index, p);
        case DeletionStrategy::nopatch: return delete_nopatch(index, p);
        case DeletionStrategy::local: return delete_local_reconnect(index, p);
        case DeletionStrategy::fresh: return delete_freshdiskann(index, p, cfg.alpha);
        case DeletionStrategy::clique: return delete_clique(index, p);
        case DeletionStrategy::global_reconnect: return delete_global_reconnect(index, p);
        case DeletionStrategy::spatch_global:
        case DeletionStrategy::spatch_pernode: return delete_spatch(index, p, cfg);
    }
    throw std::invalid_argument("unknown deletion strategy");
}

}  // namespace walknn
