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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ragcol/layout.hpp"

namespace ragcol {

/// Appendable structure that discovers its type while being filled.
///
/// Values are appended one at a time through method calls; the accumulator
/// tree restructures itself as new value kinds arrive. A field that has only
/// held integers starts holding floats: the integers already accumulated are
/// converted once and the float accumulator is used from then on. A kind
/// with no numeric widening (a string after floats) replaces the accumulator
/// with a tagged union that adopts the existing accumulator as its first
/// variant, buffers and all. Missing record fields become option-typed, with
/// earlier records back-filled as missing.
///
/// Dispatch here is dynamic by design: this is the one part of the library
/// where element-scaling decisions cannot live in the kernel functions,
/// because the accumulated arrays change type mid-pass. Bulk conversions
/// still go through kernels.
///
/// A Builder is exclusively owned by one thread at a time; snapshots are
/// immutable layouts that can be shared freely.
class Builder {
 public:
  Builder();
  ~Builder();
  Builder(Builder&&) noexcept;
  Builder& operator=(Builder&&) noexcept;
  Builder(const Builder&) = delete;
  Builder& operator=(const Builder&) = delete;

  void null_();
  void boolean(bool v);
  void integer(std::int64_t v);
  void real(double v);
  void string_(std::string_view v);

  void begin_list();
  void end_list();

  void begin_record();
  void field(std::string_view name);
  void end_record();

  /// Completed top-level entries.
  std::int64_t length() const noexcept;

  /// Immutable layout of everything filled so far. The builder stays usable;
  /// later fills extend, never alter, what an earlier snapshot captured.
  /// Requires a balanced fill state (no open list or record).
  NodePtr snapshot() const;

  /// Number of int64 -> float64 accumulator conversions so far.
  std::int64_t promotion_count() const noexcept;

  /// Data addresses of the live accumulator buffers, labeled by their place
  /// in the accumulator tree (diagnostics; used to assert buffer reuse).
  std::vector<std::pair<std::string, const void*>> buffer_addresses() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Builds a layout from nested plain values by replaying their structure
/// through a Builder. The top-level value must be an array.
NodePtr from_values(const value& values);

}  // namespace ragcol
