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

#include "walknn/index/hnsw_index.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace walknn {

std::string_view to_string(WalkMode mode) { return mode == WalkMode::greedy ? "greedy" : "softmax"; }

WalkMode parse_walk_mode(std::string_view name) {
    if (name == "greedy") return WalkMode::greedy;
    if (name == "softmax") return WalkMode::softmax;
    throw std::invalid_argument("unknown walk mode: " + std::string(name));
}

std::string_view to_string(NeighborSelection selection) {
    return selection == NeighborSelection::top_m ? "top_m" : "heuristic";
}

NeighborSelection parse_neighbor_selection(std::string_view name) {
    if (name == "top_m") return NeighborSelection::top_m;
    if (name == "heuristic") return NeighborSelection::heuristic;
    throw std::invalid_argument("unknown neighbor selection: " + std::string(name));
}

void SearchParams::validate() const {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (ef < k) throw std::invalid_argument("ef must be at least k");
    if (!(r_hat > 0.0)) throw std::invalid_argument("r_hat must be positive");
}

BuildParams BuildParams::for_degree(std::size_t m) {
    BuildParams p;
    p.m = m;
    p.m_max_upper = m;
    p.m_max_bottom = 2 * m;
    p.ef_construction = std::max<std::size_t>(p.ef_construction, m);
    p.level_multiplier = static_cast<double>(m);
    return p;
}

void BuildParams::validate() const {
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    if (m_max_upper < m) throw std::invalid_argument("m_max_upper must be >= m");
    if (m_max_bottom < m_max_upper) throw std::invalid_argument("m_max_bottom must be >= m_max_upper");
    if (ef_construction < m) throw std::invalid_argument("ef_construction must be >= m");
    if (!(level_multiplier > 1.0)) throw std::invalid_argument("level_multiplier must exceed 1");
}

int layer_from_uniform(double u, double level_multiplier) {
    return static_cast<int>(std::floor(-std::log(u) / std::log(level_multiplier)));
}

int assign_layer(Rng& rng, double level_multiplier) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double u = 0.0;
    while (u <= 0.0) u = unif(rng);
    return layer_from_uniform(u, level_multiplier);
}

HnswIndex::HnswIndex(std::size_t dim, BuildParams params)
    : params_(params), vectors_(dim), rng_(params.seed), kernel_(simd::active_l2_sq()) {
    if (dim == 0) throw IndexError("index dimension must be positive");
    params_.validate();
}

HnswIndex HnswIndex::adopt(VectorStore vectors, LayeredGraph graph, BuildParams params) {
    if (graph.capacity() > vectors.size()) {
        throw IndexError("graph references " + std::to_string(graph.capacity()) + " nodes but only " +
                         std::to_string(vectors.size()) + " vectors are stored");
    }
    HnswIndex index(vectors.dim(), params);
    index.vectors_ = std::move(vectors);
    index.graph_ = std::move(graph);
    return index;
}

NodeId HnswIndex::insert(std::span<const float> point) {
    return insert_at_level(point, assign_layer(rng_, params_.level_multiplier));
}

NodeId HnswIndex::insert_at_level(std::span<const float> point, int level) {
    if (point.size() != dim()) {
        throw IndexError("dimension mismatch: expected " + std::to_string(dim()) + ", got " +
                         std::to_string(point.size()));
    }
    if (level < 0) throw std::invalid_argument("level must be non-negative");
    const auto old_entry = graph_.entry_point();
    const NodeId id = vectors_.add(point);
    graph_.upsert_node(id, level);
    if (old_entry) link_new_node(id, vectors_.row(id), level, *old_entry);
    return id;
}

void HnswIndex::link_new_node(NodeId id, const float* point, int level, EntryPoint start) {
    DistanceEvaluator dist(vectors_, kernel_);
    NodeId ep = start.node;
    LayerSearchOptions descent;
    descent.ef = 1;
    descent.retain = RetainPolicy::bottom_present;
    descent.exclude = id;
    for (int lc = start.layer; lc > level; --lc) {
        const auto found = layer_search(graph_, dist, point, lc, ep, descent);
        if (!found.empty()) ep = found.front().id;
    }
    LayerSearchOptions build;
    build.ef = params_.ef_construction;
    build.retain = RetainPolicy::live;
    build.exclude = id;
    for (int lc = std::min(start.layer, level); lc >= 0; --lc) {
        const auto found = layer_search(graph_, dist, point, lc, ep, build);
        connect(id, lc, found);
        if (!found.empty()) ep = found.front().id;
    }
}

void HnswIndex::connect(NodeId id, int layer, std::span<const Candidate> candidates) {
    const auto chosen = select_neighbors(candidates, params_.m, params_.selection, pair_distance());
    for (const Candidate& c : chosen) {
        graph_.add_edge(layer, id, c.id);
        graph_.add_edge(layer, c.id, id);
    }
    for (const Candidate& c : chosen) {
        if (graph_.out_neighbors(layer, c.id).size() > degree_cap(layer)) shrink_to_cap(c.id, layer);
    }
}

void HnswIndex::shrink_to_cap(NodeId u, int layer) {
    const auto out = graph_.out_neighbors(layer, u);
    std::vector<Candidate> cands;
    cands.reserve(out.size());
    for (NodeId v : out) cands.push_back({distance(u, v), v});
    const auto kept = select_neighbors(cands, degree_cap(layer), params_.selection, pair_distance());
    std::vector<NodeId> ids;
    ids.reserve(kept.size());
    for (const Candidate& c : kept) ids.push_back(c.id);
    graph_.replace_out_neighbors(layer, u, ids);
}

void HnswIndex::relink_bottom(NodeId id) {
    if (!graph_.is_live(id)) throw GraphError("relink_bottom: node " + std::to_string(id) + " is not live");
    const float* point = vectors_.row(id);
    DistanceEvaluator dist(vectors_, kernel_);
    const NodeId ep = descend(point, 0, dist, WalkMode::greedy, 1.0, nullptr);
    LayerSearchOptions build;
    build.ef = params_.ef_construction;
    build.retain = RetainPolicy::live;
    build.exclude = id;
    const auto found = layer_search(graph_, dist, point, 0, ep, build);
    const auto chosen = select_neighbors(found, params_.m, params_.selection, pair_distance());
    std::vector<NodeId> ids;
    ids.reserve(chosen.size());
    for (const Candidate& c : chosen) ids.push_back(c.id);
    graph_.replace_out_neighbors(0, id, ids);
    for (NodeId n : ids) {
        graph_.add_edge(0, n, id);
        if (graph_.out_neighbors(0, n).size() > degree_cap(0)) shrink_to_cap(n, 0);
    }
}

NodeId HnswIndex::descend(const float* query, int to_layer, DistanceEvaluator& dist, WalkMode mode,
                          double r_hat, Rng* rng, std::uint64_t* pops,
                          std::uint64_t* greedy_pops, double* uniform_mass) const {
    const auto entry = graph_.entry_point();
    if (!entry) throw IndexError("index is empty");
    NodeId ep = entry->node;
    LayerSearchOptions opt;
    opt.mode = mode;
    opt.ef = 1;
    opt.r_hat = r_hat;
    opt.retain = RetainPolicy::bottom_present;
    opt.rng = rng;
    opt.pops = pops;
    opt.greedy_pops = greedy_pops;
    opt.uniform_mass = uniform_mass;
    for (int lc = entry->layer; lc > to_layer; --lc) {
        const auto found = layer_search(graph_, dist, query, lc, ep, opt);
        if (!found.empty()) ep = found.front().id;
    }
    return ep;
}

QueryResult HnswIndex::search(std::span<const float> query, const SearchParams& params) const {
    params.validate();
    if (query.size() != dim()) {
        throw IndexError("dimension mismatch: expected " + std::to_string(dim()) + ", got " +
                         std::to_string(query.size()));
    }
    if (!graph_.entry_point() || graph_.live_count() == 0) throw IndexError("index is empty");

    QueryResult result;
    DistanceEvaluator dist(vectors_, kernel_, &params.on_distance);
    Rng rng(params.seed);
    const NodeId ep = descend(query.data(), 0, dist, params.mode, params.r_hat, &rng, &result.pops,
                              &result.greedy_pops, &result.uniform_pick_mass);
    LayerSearchOptions opt;
    opt.mode = params.mode;
    opt.ef = std::max(params.ef, params.k);
    opt.r_hat = params.r_hat;
    opt.retain = RetainPolicy::live;
    opt.rng = &rng;
    opt.pops = &result.pops;
    opt.greedy_pops = &result.greedy_pops;
    opt.uniform_mass = &result.uniform_pick_mass;
    const auto found = layer_search(graph_, dist, query.data(), 0, ep, opt);
    const std::size_t k = std::min(params.k, found.size());
    result.ids.reserve(k);
    result.distances.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        result.ids.push_back(found[i].id);
        result.distances.push_back(found[i].dist);
    }
    result.distance_computations = dist.count();
    return result;
}

}  // namespace walknn
