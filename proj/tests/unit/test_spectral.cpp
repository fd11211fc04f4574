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

#include <cmath>
#include <limits>

#include "walknn/common.hpp"
#include "walknn/spectral/bound_check.hpp"
#include "walknn/spectral/expansion.hpp"
#include "walknn/spectral/generators.hpp"
#include "walknn/spectral/hitting_time.hpp"
#include "walknn/spectral/laplacian.hpp"
#include "walknn/spectral/resistance.hpp"
#include "walknn/spectral/sparsify.hpp"

namespace {

using namespace walknn;
using namespace walknn::spectral;

UndirectedWeightedGraph path3() {
    UndirectedWeightedGraph g(3);
    g.add_edge(0, 1, 1.0);
    g.add_edge(1, 2, 1.0);
    return g;
}

UndirectedWeightedGraph two_triangles() {
    UndirectedWeightedGraph g(6);
    for (std::size_t base : {0u, 3u}) {
        g.add_edge(base, base + 1, 1.0);
        g.add_edge(base + 1, base + 2, 1.0);
        g.add_edge(base, base + 2, 1.0);
    }
    g.add_edge(2, 3, 0.1);
    return g;
}

TEST(Laplacian, SingleEdge) {
    UndirectedWeightedGraph g(2);
    g.add_edge(0, 1, 3.0);
    Eigen::MatrixXd want(2, 2);
    want << 3, -3, -3, 3;
    EXPECT_TRUE(laplacian(g).isApprox(want));
    EXPECT_TRUE(laplacian_factored(g).isApprox(want));
    EXPECT_EQ(incidence(g).rows(), 1);
}

TEST(Laplacian, FormsAgreeAndRowsSumToZero) {
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        const auto g = erdos_renyi(2 + rng() % 18, 0.5, 0.1, 4.0, rng);
        const Eigen::MatrixXd l = laplacian(g);
        // D - A assembled here from the edge list.
        Eigen::MatrixXd ref = Eigen::MatrixXd::Zero(l.rows(), l.cols());
        for (const auto& e : g.edges()) {
            ref(e.u, e.v) -= e.weight;
            ref(e.v, e.u) -= e.weight;
            ref(e.u, e.u) += e.weight;
            ref(e.v, e.v) += e.weight;
        }
        EXPECT_LE((l - ref).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LE((laplacian_factored(g) - ref).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LE(l.rowwise().sum().cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_GE(symmetric_eigenvalues(l)(0), -1e-9);
    }
}

TEST(Laplacian, RankMatchesConnectivity) {
    const auto connected = path3();
    UndirectedWeightedGraph split(4);
    split.add_edge(0, 1, 1.0);
    split.add_edge(2, 3, 1.0);
    EXPECT_GT(symmetric_eigenvalues(laplacian(connected))(1), 1e-9);
    EXPECT_NEAR(symmetric_eigenvalues(laplacian(split))(1), 0.0, 1e-12);
}

TEST(Sparsify, SamplingProbabilities) {
    UndirectedWeightedGraph g(3);
    g.add_edge(0, 1, 1.0);
    g.add_edge(1, 2, 3.0);
    const auto p = sampling_probabilities(g);
    ASSERT_EQ(p.size(), 2u);
    EXPECT_DOUBLE_EQ(p[0], 0.25);
    EXPECT_DOUBLE_EQ(p[1], 0.75);
    EXPECT_EQ(draws_for_epsilon(0.5), 800u);
    EXPECT_EQ(draws_for_epsilon(0.25), 3200u);
}

TEST(Sparsify, ReweightsEveryDraw) {
    Rng rng(2);
    const auto g = connected_erdos_renyi(8, 0.6, 0.5, 2.0, rng);
    const std::size_t s = 37;
    const auto out = row_norm_sparsify(g, s, rng);
    EXPECT_EQ(out.samples, s);
    EXPECT_DOUBLE_EQ(out.trace_w, g.total_weight());
    // Each draw carries w_e / (p_e s) = sum(w) / s, so the total is sum(w).
    EXPECT_NEAR(out.graph.total_weight(), g.total_weight(), 1e-9);
    for (const auto& e : out.graph.edges()) {
        const double draws = e.weight / (g.total_weight() / s);
        EXPECT_NEAR(draws, std::round(draws), 1e-9);
        EXPECT_TRUE(g.weight(e.u, e.v).has_value());
    }
    EXPECT_NEAR(out.frobenius_error, (laplacian(out.graph) - laplacian(g)).norm(), 1e-9);
}

TEST(Sparsify, UnbiasedDiagonal) {
    Rng rng(8);
    const auto g = connected_erdos_renyi(6, 0.7, 0.5, 2.0, rng);
    const Eigen::MatrixXd l = laplacian(g);
    const int trials = 10000;
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(6), sq = Eigen::VectorXd::Zero(6);
    for (int t = 0; t < trials; ++t) {
        const Eigen::VectorXd d = laplacian(row_norm_sparsify(g, 10, rng).graph).diagonal();
        sum += d;
        sq += d.cwiseProduct(d);
    }
    for (int i = 0; i < 6; ++i) {
        const double mean = sum(i) / trials;
        const double sigma = std::sqrt((sq(i) / trials - mean * mean) / trials);
        EXPECT_NEAR(mean, l(i, i), 3.0 * sigma + 1e-12);
    }
}

TEST(Sparsify, FrobeniusGuarantee) {
    Rng rng(6);
    int good = 0;
    for (int t = 0; t < 100; ++t) {
        const auto g = connected_erdos_renyi(12, 0.5, 0.5, 2.0, rng);
        const auto out = row_norm_sparsify(g, draws_for_epsilon(0.5), rng);
        good += out.frobenius_error <= 0.5 * out.trace_w;
    }
    EXPECT_GE(good, 90);
}

TEST(Resistance, Examples) {
    UndirectedWeightedGraph edge(2);
    edge.add_edge(0, 1, 1.0);
    EXPECT_NEAR(effective_resistance(edge, 0, 1), 1.0, 1e-12);
    EXPECT_NEAR(effective_resistance(path3(), 0, 2), 2.0, 1e-12);
    const auto k3 = complete_graph(3);
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            EXPECT_NEAR(effective_resistance(k3, a, b), a == b ? 0.0 : 2.0 / 3.0, 1e-12);
        }
    }
}

TEST(Resistance, InfiniteAcrossComponents) {
    UndirectedWeightedGraph g(4);
    g.add_edge(0, 1, 1.0);
    g.add_edge(2, 3, 1.0);
    EXPECT_EQ(effective_resistance(g, 0, 3), std::numeric_limits<double>::infinity());
    EXPECT_NEAR(effective_resistance(g, 0, 1), 1.0, 1e-12);
    EXPECT_THROW(resistance_matrix(g), GraphError);
}

TEST(Resistance, MetricOnRandomGraphs) {
    Rng rng(10);
    for (int t = 0; t < 30; ++t) {
        const auto g = connected_erdos_renyi(3 + rng() % 9, 0.5, 0.2, 3.0, rng);
        const auto r = resistance_matrix(g);
        for (Eigen::Index a = 0; a < r.rows(); ++a) {
            EXPECT_NEAR(r(a, a), 0.0, 1e-12);
            for (Eigen::Index b = 0; b < r.rows(); ++b) {
                EXPECT_NEAR(r(a, b), r(b, a), 1e-12);
                if (a != b) EXPECT_GT(r(a, b), 0.0);
                for (Eigen::Index c = 0; c < r.rows(); ++c) EXPECT_LE(r(a, c), r(a, b) + r(b, c) + 1e-9);
            }
        }
    }
}

TEST(HittingTime, CompleteGraph) {
    for (auto method : {HittingMethod::direct, HittingMethod::tetali}) {
        const auto h = hitting_times(complete_graph(3), method);
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) EXPECT_NEAR(h(a, b), a == b ? 0.0 : 2.0, 1e-12);
        }
    }
}

TEST(HittingTime, PathEndToEnd) {
    const auto h = hitting_times(path3(), HittingMethod::direct);
    EXPECT_NEAR(h(0, 2), 4.0, 1e-12);
    EXPECT_NEAR(h(1, 2), 3.0, 1e-12);
    EXPECT_NEAR(h(1, 0), 3.0, 1e-12);
}

TEST(HittingTime, MethodsAgree) {
    Rng rng(12);
    for (int t = 0; t < 60; ++t) {
        const auto g = connected_erdos_renyi(2 + rng() % 15, 0.4, 0.1, 3.0, rng);
        const auto a = hitting_times(g, HittingMethod::direct);
        const auto b = hitting_times(g, HittingMethod::tetali);
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            for (Eigen::Index j = 0; j < a.rows(); ++j) {
                if (i == j) continue;
                EXPECT_GE(a(i, j), 1.0 - 1e-12);
                EXPECT_NEAR(a(i, j), b(i, j), 1e-8 * a(i, j));
            }
        }
    }
}

TEST(HittingTime, SelfLoopsActAsLazySteps) {
    // A unit edge plus a unit loop at 0: from 0 the walk stays with
    // probability 1/2, so h(0,1) = 2.
    UndirectedWeightedGraph g(2);
    g.add_edge(0, 1, 1.0);
    g.add_self_loop(0, 1.0);
    for (auto method : {HittingMethod::direct, HittingMethod::tetali}) {
        EXPECT_NEAR(hitting_times(g, method)(0, 1), 2.0, 1e-12);
        EXPECT_NEAR(hitting_times(g, method)(1, 0), 1.0, 1e-12);
    }
}

TEST(HittingTime, DisconnectedRejected) {
    UndirectedWeightedGraph g(3);
    g.add_edge(0, 1, 1.0);
    EXPECT_THROW(hitting_times(g, HittingMethod::direct), GraphError);
    EXPECT_THROW(hitting_times(g, HittingMethod::tetali), GraphError);
}

TEST(Expansion, Examples) {
    EXPECT_NEAR(edge_expansion(complete_graph(3)).phi, 2.0, 1e-12);
    EXPECT_EQ(edge_expansion(complete_graph(3)).witness.size(), 1u);
    const auto bridged = edge_expansion(two_triangles());
    EXPECT_NEAR(bridged.phi, 0.1 / 3.0, 1e-12);
    const bool left = bridged.witness == std::vector<std::size_t>{0, 1, 2};
    const bool right = bridged.witness == std::vector<std::size_t>{3, 4, 5};
    EXPECT_TRUE(left || right);
    UndirectedWeightedGraph edge(2);
    edge.add_edge(0, 1, 2.5);
    EXPECT_NEAR(edge_expansion(edge).phi, 2.5, 1e-12);
    EXPECT_THROW(edge_expansion(complete_graph(25)), std::invalid_argument);
}

TEST(Cheeger, CompleteGraph) {
    const auto r = cheeger_check(complete_graph(3));
    EXPECT_NEAR(r.lambda2, 3.0, 1e-9);
    EXPECT_NEAR(r.lower, 1.0, 1e-12);
    EXPECT_NEAR(r.upper, 4.0, 1e-12);
    EXPECT_TRUE(r.holds);
}

TEST(Cheeger, DisconnectedIsDegenerate) {
    UndirectedWeightedGraph g(4);
    g.add_edge(0, 1, 1.0);
    g.add_edge(2, 3, 1.0);
    const auto r = cheeger_check(g);
    EXPECT_NEAR(r.lambda2, 0.0, 1e-12);
    EXPECT_EQ(r.phi, 0.0);
    EXPECT_TRUE(r.holds);
}

TEST(Cheeger, RandomSweep) {
    Rng rng(14);
    for (int t = 0; t < 100; ++t) EXPECT_TRUE(cheeger_check(connected_erdos_renyi(10, 0.4, 0.1, 2.0, rng)).holds);
}

TEST(Lambda2, WeylPerturbation) {
    Rng rng(16);
    for (int t = 0; t < 50; ++t) {
        const auto g = connected_erdos_renyi(4 + rng() % 10, 0.6, 0.5, 2.0, rng);
        const auto out = row_norm_sparsify(g, 10 + rng() % 500, rng);
        const Eigen::MatrixXd l = laplacian(g), lp = laplacian(out.graph);
        EXPECT_LE(std::abs(symmetric_eigenvalues(l)(1) - symmetric_eigenvalues(lp)(1)), (l - lp).norm() + 1e-9);
    }
}

TEST(BoundCheck, IdenticalGraphsHoldWithEquality) {
    const auto g = complete_graph(5);
    const auto r = hitting_time_bound_check(g, g);
    EXPECT_EQ(r.delta, 0.0);
    EXPECT_FALSE(r.vacuous);
    EXPECT_TRUE(r.holds());
    EXPECT_NEAR(r.lhs.cwiseAbs().maxCoeff(), 0.0, 1e-9);
    EXPECT_NEAR(r.rhs.cwiseAbs().maxCoeff(), 0.0, 1e-12);
}

TEST(BoundCheck, CompleteGraphSparsified) {
    Rng rng(18);
    const auto g = complete_graph(5);
    const auto out = row_norm_sparsify(g, draws_for_epsilon(0.1), rng);
    const auto r = hitting_time_bound_check(g, out.graph);
    EXPECT_NEAR(r.delta, out.frobenius_error, 1e-9);
    // Best cut of unit K_5 splits 2 | 3: six edges over two vertices.
    EXPECT_NEAR(r.phi, 3.0, 1e-12);
    if (!r.vacuous) EXPECT_TRUE(r.holds());
}

TEST(BoundCheck, VacuousWhenPerturbationLarge) {
    const auto g = complete_graph(4);
    UndirectedWeightedGraph far(4);
    far.add_edge(0, 1, 50.0);
    far.add_edge(1, 2, 50.0);
    far.add_edge(2, 3, 50.0);
    const auto r = hitting_time_bound_check(g, far);
    EXPECT_TRUE(r.vacuous);
    EXPECT_FALSE(r.holds());
}

TEST(BoundCheck, SingleClusterRegime) {
    Rng rng(20);
    const std::size_t n = 32;
    const auto g = complete_graph(n);
    int good = 0;
    for (int t = 0; t < 10; ++t) {
        const auto out = row_norm_sparsify(g, (n - 1) * n, rng);
        good += single_cluster_bound_check(g, out.graph).holds();
    }
    EXPECT_GE(good, 9);
    EXPECT_TRUE(single_cluster_bound_check(g, g).holds());
}

TEST(Generators, Shapes) {
    const auto k = complete_graph(6, 2.0);
    EXPECT_EQ(k.edge_count(), 15u);
    EXPECT_DOUBLE_EQ(k.total_weight(), 30.0);
    const auto c = planted_clusters(2, 4, 1.0, 1.0);
    EXPECT_EQ(c.edge_count(), 2u * 6u + 16u);
    EXPECT_DOUBLE_EQ(*c.weight(0, 4), 1.0 / 8.0);
    Rng rng(1);
    EXPECT_TRUE(connected_erdos_renyi(12, 0.05, 1.0, 1.0, rng).is_connected());
}

}  // namespace
