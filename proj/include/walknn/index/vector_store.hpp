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
#include <span>
#include <vector>

#include "walknn/common.hpp"

namespace walknn {

/// Row-major fixed-dimension point store; row i belongs to NodeId i. Rows are
/// append-only, so a removed node keeps its coordinates.
class VectorStore {
 public:
    explicit VectorStore(std::size_t dim = 0) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }

    NodeId add(std::span<const float> point);

    const float* row(NodeId id) const { return data_.data() + static_cast<std::size_t>(id) * dim_; }
    std::span<const float> get(NodeId id) const;

    void reserve(std::size_t rows) { data_.reserve(rows * dim_); }

 private:
    std::size_t dim_;
    std::vector<float> data_;
};

}  // namespace walknn
