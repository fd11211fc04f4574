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
#include <iosfwd>
#include <string>

#include "walknn/graph/layered_graph.hpp"

namespace walknn {

/// Binary layered-graph snapshot, little-endian throughout:
///
///   "WNNG" | version u32 | layer count u32 | node capacity u64
///   per layer: edge count u64, then (u u64, v u64) per directed edge
///
/// Only topology is stored. On read, a node exists from layer 0 up to the
/// highest layer where it has an edge, and the entry point is the lowest id at
/// the highest populated layer.
inline constexpr std::uint32_t kSnapshotVersion = 1;

void write_snapshot(const LayeredGraph& g, std::ostream& out);
LayeredGraph read_snapshot(std::istream& in);

void write_snapshot_file(const LayeredGraph& g, const std::string& path);
LayeredGraph read_snapshot_file(const std::string& path);

}  // namespace walknn
