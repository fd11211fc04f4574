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

#include "walknn/bench/vecs_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace walknn::bench {

namespace {

static_assert(std::endian::native == std::endian::little, "vecs files are read in native byte order");

// Reads exactly n bytes; false on clean EOF before the first byte.
bool read_exact(std::istream& in, char* dst, std::size_t n, bool allow_eof) {
    in.read(dst, static_cast<std::streamsize>(n));
    const auto got = static_cast<std::size_t>(in.gcount());
    if (got == n) return true;
    if (got == 0 && allow_eof) return false;
    throw FormatError("truncated vecs record");
}

template <typename Payload, typename Out>
Matrix<Out> read_records(std::istream& in, std::size_t max_rows) {
    Matrix<Out> m;
    std::vector<Payload> buf;
    while (max_rows == 0 || m.rows < max_rows) {
        std::int32_t d = 0;
        if (!read_exact(in, reinterpret_cast<char*>(&d), sizeof d, true)) break;
        if (d <= 0) throw FormatError("non-positive vecs dimension " + std::to_string(d));
        const auto dim = static_cast<std::size_t>(d);
        if (m.rows == 0) {
            m.dim = dim;
        } else if (dim != m.dim) {
            throw FormatError("inconsistent vecs dimension: " + std::to_string(m.dim) + " then " +
                              std::to_string(dim));
        }
        buf.resize(dim);
        read_exact(in, reinterpret_cast<char*>(buf.data()), dim * sizeof(Payload), false);
        for (Payload x : buf) m.data.push_back(static_cast<Out>(x));
        ++m.rows;
    }
    return m;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path.string());
    return out;
}

template <typename T>
void write_records(std::ostream& out, const Matrix<T>& m) {
    const auto d = static_cast<std::int32_t>(m.dim);
    for (std::size_t i = 0; i < m.rows; ++i) {
        out.write(reinterpret_cast<const char*>(&d), sizeof d);
        out.write(reinterpret_cast<const char*>(m.row_ptr(i)), static_cast<std::streamsize>(m.dim * sizeof(T)));
    }
    if (!out) throw FormatError("write failed");
}

}  // namespace

FloatMatrix read_vecs(std::istream& in, VecsKind kind, std::size_t max_rows) {
    switch (kind) {
        case VecsKind::fvecs: return read_records<float, float>(in, max_rows);
        case VecsKind::bvecs: return read_records<std::uint8_t, float>(in, max_rows);
        case VecsKind::ivecs: return read_records<std::int32_t, float>(in, max_rows);
    }
    throw FormatError("unknown vecs kind");
}

FloatMatrix read_vecs(const std::filesystem::path& path, VecsKind kind, std::size_t max_rows) {
    auto in = open_in(path);
    return read_vecs(in, kind, max_rows);
}

IntMatrix read_ivecs(std::istream& in, std::size_t max_rows) {
    return read_records<std::int32_t, std::int32_t>(in, max_rows);
}

IntMatrix read_ivecs(const std::filesystem::path& path, std::size_t max_rows) {
    auto in = open_in(path);
    return read_ivecs(in, max_rows);
}

void write_fvecs(std::ostream& out, const FloatMatrix& m) { write_records(out, m); }
void write_fvecs(const std::filesystem::path& path, const FloatMatrix& m) {
    auto out = open_out(path);
    write_records(out, m);
}
void write_ivecs(std::ostream& out, const IntMatrix& m) { write_records(out, m); }
void write_ivecs(const std::filesystem::path& path, const IntMatrix& m) {
    auto out = open_out(path);
    write_records(out, m);
}

VecsKind kind_from_extension(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".fvecs") return VecsKind::fvecs;
    if (ext == ".bvecs") return VecsKind::bvecs;
    if (ext == ".ivecs") return VecsKind::ivecs;
    throw FormatError("unrecognised vecs extension: " + path.string());
}

}  // namespace walknn::bench
