// Copyright 2026 The ragcol Authors
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
#include <memory>
#include <span>
#include <string_view>
#include <vector>

namespace ragcol {

/// Element types a Buffer can hold. bool8 is one byte per element, 0 or 1.
enum class dtype : std::uint8_t { bool8, int8, uint8, int64, float64 };

std::size_t dtype_width(dtype t) noexcept;

/// Short name used in container manifests: "bool8", "i8", "u8", "i64", "f64".
std::string_view dtype_name(dtype t) noexcept;
bool dtype_from_name(std::string_view name, dtype& out) noexcept;

/// Immutable, reference-counted run of fixed-width values. Copying a Buffer
/// shares the underlying memory; data() serves as the identity for sharing
/// assertions. data() may be null when length() == 0.
class Buffer {
 public:
  Buffer() noexcept : dtype_(dtype::uint8), length_(0) {}

  static Buffer i64(std::vector<std::int64_t> values);
  static Buffer f64(std::vector<double> values);
  static Buffer u8(std::vector<std::uint8_t> values);
  static Buffer i8(std::vector<std::int8_t> values);
  static Buffer b8(std::vector<std::uint8_t> values);  // 0/1 per element

  /// Takes ownership of raw bytes already in the target representation.
  static Buffer from_bytes(dtype t, std::vector<std::uint8_t> bytes);

  dtype type() const noexcept { return dtype_; }
  std::int64_t length() const noexcept { return length_; }
  std::size_t byte_length() const noexcept {
    return static_cast<std::size_t>(length_) * dtype_width(dtype_);
  }
  const void* data() const noexcept { return data_.get(); }

  bool same_memory(const Buffer& other) const noexcept {
    return data_.get() == other.data_.get();
  }

  /// First `count` elements, sharing the same memory (no copy).
  Buffer prefix(std::int64_t count) const noexcept {
    return Buffer(dtype_, count < length_ ? count : length_, data_);
  }

  template <class T>
  std::span<const T> as() const noexcept {
    return {static_cast<const T*>(data_.get()), static_cast<std::size_t>(length_)};
  }

  std::span<const std::int64_t> as_i64() const noexcept { return as<std::int64_t>(); }
  std::span<const double> as_f64() const noexcept { return as<double>(); }
  std::span<const std::uint8_t> as_u8() const noexcept { return as<std::uint8_t>(); }
  std::span<const std::int8_t> as_i8() const noexcept { return as<std::int8_t>(); }

 private:
  Buffer(dtype t, std::int64_t length, std::shared_ptr<const void> data) noexcept
      : dtype_(t), length_(length), data_(std::move(data)) {}

  template <class T>
  static Buffer adopt(dtype t, std::vector<T>&& values);

  dtype dtype_;
  std::int64_t length_;
  std::shared_ptr<const void> data_;
};

}  // namespace ragcol
