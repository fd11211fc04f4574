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
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace walknn::bench {

enum class VecsKind { fvecs, bvecs, ivecs };

/// Malformed or truncated vector file.
class FormatError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Row-major matrix of `rows` x `dim` elements.
template <typename T>
struct Matrix {
    std::size_t rows = 0;
    std::size_t dim = 0;
    std::vector<T> data;

    std::span<const T> row(std::size_t i) const { return {data.data() + i * dim, dim}; }
    const T* row_ptr(std::size_t i) const { return data.data() + i * dim; }
};

using FloatMatrix = Matrix<float>;
using IntMatrix = Matrix<std::int32_t>;

/// Records are a little-endian int32 dimension followed by that many float32
/// (fvecs), uint8 (bvecs) or int32 (ivecs) values. bvecs and ivecs payloads
/// are widened to float. `max_rows` stops early when nonzero.
FloatMatrix read_vecs(std::istream& in, VecsKind kind, std::size_t max_rows = 0);
FloatMatrix read_vecs(const std::filesystem::path& path, VecsKind kind, std::size_t max_rows = 0);

IntMatrix read_ivecs(std::istream& in, std::size_t max_rows = 0);
IntMatrix read_ivecs(const std::filesystem::path& path, std::size_t max_rows = 0);

void write_fvecs(std::ostream& out, const FloatMatrix& m);
void write_fvecs(const std::filesystem::path& path, const FloatMatrix& m);
void write_ivecs(std::ostream& out, const IntMatrix& m);
void write_ivecs(const std::filesystem::path& path, const IntMatrix& m);

/// fvecs, bvecs or ivecs from the file extension.
VecsKind kind_from_extension(const std::filesystem::path& path);

}  // namespace walknn::bench
