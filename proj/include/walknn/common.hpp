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

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace walknn {

/// Dense node identifier. Ids are assigned in insertion order and never
/// recycled within one index.
using NodeId = std::uint32_t;

inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();

/// Raised on contract violations by graph mutation and lookup.
class GraphError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by index-level operations (dimension mismatch, empty index, ...).
class IndexError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

}  // namespace walknn
