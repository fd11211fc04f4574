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

#include "walknn/graph/snapshot.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <utility>
#include <vector>

namespace walknn {

namespace {

constexpr std::array<char, 4> kMagic{'W', 'N', 'N', 'G'};

template <typename T>
void put_le(std::ostream& out, T value) {
    std::array<char, sizeof(T)> bytes{};
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        bytes[i] = static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xffu);
    }
    out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& in) {
    std::array<unsigned char, sizeof(T)> bytes{};
    in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
    if (!in) throw GraphError("snapshot: truncated input");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    return static_cast<T>(value);
}

}  // namespace

void write_snapshot(const LayeredGraph& g, std::ostream& out) {
    out.write(kMagic.data(), kMagic.size());
    put_le<std::uint32_t>(out, kSnapshotVersion);
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(g.num_layers()));
    put_le<std::uint64_t>(out, g.capacity());
    for (int l = 0; l < g.num_layers(); ++l) {
        put_le<std::uint64_t>(out, g.edge_count(l));
        for (NodeId u = 0; u < g.capacity(); ++u) {
            if (!g.contains(u, l)) continue;
            for (NodeId v : g.out_neighbors(l, u)) {
                put_le<std::uint64_t>(out, u);
                put_le<std::uint64_t>(out, v);
            }
        }
    }
    if (!out) throw GraphError("snapshot: write failed");
}

LayeredGraph read_snapshot(std::istream& in) {
    std::array<char, 4> magic{};
    in.read(magic.data(), magic.size());
    if (!in || magic != kMagic) throw GraphError("snapshot: bad magic");
    const auto version = get_le<std::uint32_t>(in);
    if (version != kSnapshotVersion) throw GraphError("snapshot: unsupported version");
    const auto layers = get_le<std::uint32_t>(in);
    const auto capacity = get_le<std::uint64_t>(in);
    if (layers > 100) throw GraphError("snapshot: implausible layer count");
    if (capacity >= kInvalidNode) throw GraphError("snapshot: node capacity too large");

    std::vector<std::vector<std::pair<NodeId, NodeId>>> edges(layers);
    std::vector<int> top(capacity, -1);
    for (std::uint32_t l = 0; l < layers; ++l) {
        const auto count = get_le<std::uint64_t>(in);
        edges[l].reserve(count);
        for (std::uint64_t e = 0; e < count; ++e) {
            const auto u = get_le<std::uint64_t>(in);
            const auto v = get_le<std::uint64_t>(in);
            if (u >= capacity || v >= capacity) throw GraphError("snapshot: node id out of range");
            edges[l].emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
            top[u] = std::max<int>(top[u], static_cast<int>(l));
            top[v] = std::max<int>(top[v], static_cast<int>(l));
        }
    }

    LayeredGraph g;
    for (NodeId id = 0; id < capacity; ++id) {
        if (top[id] >= 0) g.upsert_node(id, top[id]);
    }
    for (std::uint32_t l = 0; l < layers; ++l) {
        for (const auto& [u, v] : edges[l]) g.add_edge(static_cast<int>(l), u, v);
    }
    std::optional<EntryPoint> entry;
    for (NodeId id = 0; id < capacity; ++id) {
        if (top[id] >= 0 && (!entry || top[id] > entry->layer)) entry = EntryPoint{id, top[id]};
    }
    g.set_entry_point(entry);
    return g;
}

void write_snapshot_file(const LayeredGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError("snapshot: cannot open " + path + " for writing");
    write_snapshot(g, out);
}

LayeredGraph read_snapshot_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("snapshot: cannot open " + path);
    return read_snapshot(in);
}

}  // namespace walknn
