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

#include "walknn/index/vector_store.hpp"

#include <string>

namespace walknn {

NodeId VectorStore::add(std::span<const float> point) {
    if (dim_ == 0) throw IndexError("vector store has zero dimension");
    if (point.size() != dim_) {
        throw IndexError("dimension mismatch: expected " + std::to_string(dim_) + ", got " +
                         std::to_string(point.size()));
    }
    const auto id = static_cast<NodeId>(size());
    data_.insert(data_.end(), point.begin(), point.end());
    return id;
}

std::span<const float> VectorStore::get(NodeId id) const {
    if (id >= size()) throw IndexError("vector id " + std::to_string(id) + " out of range");
    return {row(id), dim_};
}

}  // namespace walknn
