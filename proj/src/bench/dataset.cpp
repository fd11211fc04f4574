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

#include "walknn/bench/dataset.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "walknn/index/params.hpp"

namespace walknn::bench {

Dataset synthetic_clustered(const SyntheticSpec& spec) {
    if (spec.dim == 0 || spec.latent_dim == 0 || spec.clusters == 0) {
        throw std::invalid_argument("synthetic_clustered: dimensions and clusters must be positive");
    }
    Rng rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<double> embed(spec.latent_dim * spec.dim);
    for (double& x : embed) x = gauss(rng) / std::sqrt(static_cast<double>(spec.latent_dim));
    std::vector<double> centers(spec.clusters * spec.latent_dim);
    for (double& x : centers) x = gauss(rng);
    std::uniform_int_distribution<std::size_t> pick(0, spec.clusters - 1);

    std::vector<double> latent(spec.latent_dim);
    auto draw = [&](FloatMatrix& m, std::size_t rows) {
        m.rows = rows;
        m.dim = spec.dim;
        m.data.assign(rows * spec.dim, 0.0f);
        for (std::size_t i = 0; i < rows; ++i) {
            const std::size_t c = pick(rng);
            for (std::size_t j = 0; j < spec.latent_dim; ++j) {
                latent[j] = centers[c * spec.latent_dim + j] + spec.cluster_spread * gauss(rng);
            }
            for (std::size_t k = 0; k < spec.dim; ++k) {
                double v = spec.ambient_noise * gauss(rng);
                for (std::size_t j = 0; j < spec.latent_dim; ++j) v += latent[j] * embed[j * spec.dim + k];
                m.data[i * spec.dim + k] = static_cast<float>(v);
            }
        }
    };
    Dataset ds;
    ds.name = "synthetic";
    draw(ds.base, spec.base);
    draw(ds.queries, spec.queries);
    return ds;
}

namespace {

FloatMatrix truncate(FloatMatrix m, std::size_t max_rows) {
    if (max_rows != 0 && m.rows > max_rows) {
        m.rows = max_rows;
        m.data.resize(max_rows * m.dim);
    }
    return m;
}

}  // namespace

Dataset load_dataset(const std::string& base_path, const std::string& query_path,
                     const std::string& truth_path, std::size_t max_base, std::size_t max_queries) {
    Dataset ds;
    ds.name = base_path;
    ds.base = truncate(read_vecs(base_path, kind_from_extension(base_path), max_base), max_base);
    ds.queries = truncate(read_vecs(query_path, kind_from_extension(query_path), max_queries), max_queries);
    if (ds.base.rows == 0) throw FormatError("empty base file: " + base_path);
    if (ds.queries.rows == 0) throw FormatError("empty query file: " + query_path);
    if (ds.queries.dim != ds.base.dim) throw FormatError("query and base dimensions differ");
    if (!truth_path.empty()) ds.ground_truth = read_ivecs(truth_path, ds.queries.rows);
    return ds;
}

}  // namespace walknn::bench
