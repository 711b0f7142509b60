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
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ragcol/layout.hpp"

namespace ragcol {

// One element of a selection tuple. A tuple mixes field names, integers,
// ranges, flat index/mask arrays, and jagged index/mask arrays, applied left
// to right across successive dimensions of the array.

struct FieldSelector {
  std::string name;
};

/// Selects one element of the current dimension (removing it). Negative
/// values count from the end; out-of-range raises.
struct AtSelector {
  std::int64_t index = 0;
};

/// Selects a range of the current dimension (keeping it). Out-of-bounds
/// bounds clamp; step must be nonzero.
struct RangeSelector {
  std::optional<std::int64_t> start;
  std::optional<std::int64_t> stop;
  std::optional<std::int64_t> step;
};

/// Selects listed elements of the outermost dimension, negatives normalized.
struct FlatIndexSelector {
  std::vector<std::int64_t> indices;
};

/// Keeps flagged elements of the outermost dimension; length must match.
struct FlatMaskSelector {
  std::vector<std::uint8_t> mask;
};

/// Per-sublist index selection one depth below; the selector's nesting must
/// match the array's offsets level by level.
struct JaggedIndexSelector {
  value lists;  // nested arrays of integers
};

/// Per-sublist boolean selection one depth below; element-for-element.
struct JaggedMaskSelector {
  value lists;  // nested arrays of booleans
};

using Selector = std::variant<FieldSelector, AtSelector, RangeSelector,
                              FlatIndexSelector, FlatMaskSelector,
                              JaggedIndexSelector, JaggedMaskSelector>;

struct GetitemResult {
  NodePtr node;        // length 1 when scalar
  bool scalar = false; // every dimension consumed by integer selectors
};

/// Applies the selector tuple left to right. Field selectors project at the
/// shallowest record and do not consume a dimension; AtSelector consumes the
/// current dimension; Range/FlatIndex/FlatMask/Jagged selectors filter it
/// and move on to the next. Flat and jagged array selectors are accepted at
/// the outermost unconsumed dimension only, and at most one flat index/mask
/// per call.
GetitemResult getitem(const NodePtr& node, std::span<const Selector> selectors);

/// The single plain value for a fully-consumed selection, the layout
/// otherwise.
std::variant<NodePtr, value> scalar_or_layout(const GetitemResult& result);

}  // namespace ragcol
