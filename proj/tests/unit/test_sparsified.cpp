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
#include <random>

#include "walknn/index/sparsified_construction.hpp"

namespace {

using namespace walknn;

VectorStore clustered(std::size_t n, std::size_t dim, std::size_t clusters, Rng& rng) {
    std::normal_distribution<float> g(0.0f, 1.0f);
    std::vector<std::vector<float>> centers(clusters, std::vector<float>(dim));
    for (auto& c : centers) {
        for (float& x : c) x = 4.0f * g(rng);
    }
    VectorStore s(dim);
    std::vector<float> p(dim);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = centers[rng() % clusters];
        for (std::size_t d = 0; d < dim; ++d) p[d] = c[d] + g(rng);
        s.add(p);
    }
    return s;
}

TEST(Sparsified, TwoPointsShareOneEdge) {
    VectorStore s(2);
    s.add(std::vector<float>{0, 0});
    s.add(std::vector<float>{1, 1});
    Rng rng(1);
    const auto layer = construct_layer_sparsified(s, 4, 15.0, rng);
    EXPECT_EQ(layer.edge_count(), 1u);
    EXPECT_EQ(layer.neighbors[0], std::vector<NodeId>{1});
    EXPECT_EQ(layer.neighbors[1], std::vector<NodeId>{0});
}

TEST(Sparsified, SinglePoint) {
    VectorStore s(2);
    s.add(std::vector<float>{0, 0});
    Rng rng(1);
    EXPECT_EQ(construct_layer_sparsified(s, 4, 15.0, rng).edge_count(), 0u);
    EXPECT_THROW(construct_layer_sparsified(VectorStore(2), 4, 15.0, rng), std::invalid_argument);
}

TEST(Sparsified, DegreeCapAndSymmetry) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        const auto s = clustered(200, 6, 4, rng);
        const auto layer = construct_layer_sparsified(s, 8, 15.0, rng);
        EXPECT_LE(layer.max_degree(), 8u);
        for (NodeId u = 0; u < layer.neighbors.size(); ++u) {
            auto sorted = layer.neighbors[u];
            std::sort(sorted.begin(), sorted.end());
            EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
            for (NodeId v : layer.neighbors[u]) {
                EXPECT_NE(v, u);
                const auto& back = layer.neighbors[v];
                EXPECT_NE(std::find(back.begin(), back.end(), u), back.end());
            }
        }
    }
}

int connected_runs(double r_hat) {
    int connected = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        const auto s = clustered(256, 8, 8, rng);
        connected += construct_layer_sparsified(s, 8, r_hat, rng).is_connected();
    }
    return connected;
}

TEST(Sparsified, ConnectedOnClusteredDataWhenSoft) { EXPECT_GE(connected_runs(0.5), 95); }

// Sharp kernels prune the long edges first, at both endpoints, and the layer
// falls apart.
TEST(Sparsified, FragmentsWhenSharp) { EXPECT_LT(connected_runs(15.0), 50); }

}  // namespace
