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

#include <istream>
#include <string>
#include <string_view>

#include "ragcol/layout.hpp"

namespace ragcol {

struct JsonOptions {
  /// One JSON value per line instead of a single top-level array.
  bool ndjson = false;
  /// Maximum container nesting (arrays and objects both count).
  std::int64_t depth_limit = 64;
};

/// Parses JSON into a layout in a single event-driven pass: parser events
/// drive a Builder one-to-one, with no intermediate tree. The input must be
/// one top-level array whose elements become the array's entries (or, with
/// ndjson, one JSON value per line, each line one entry). Integer and float
/// literals are told apart lexically: a '.', 'e', or 'E' makes a float.
NodePtr from_json(std::string_view text, const JsonOptions& options = {});
NodePtr from_json(std::istream& input, const JsonOptions& options = {});

/// Specialized reader for nested lists of numbers with uniform nesting
/// `depth` (the top-level array counts as depth 1). Produces exactly what
/// from_json would, through fixed accumulators instead of type discovery:
/// one offsets buffer per list level and one numeric leaf that widens to
/// float64 at the first float literal. Anything but numbers at the leaf
/// level, or a depth deviation, is a structure-deviation error.
NodePtr from_json_numbers(std::string_view text, std::int64_t depth);
NodePtr from_json_numbers(std::istream& input, std::int64_t depth);

/// JSON text of the layout's values: strings as JSON strings, missing as
/// null, floats in shortest round-trip form, record fields in stored order,
/// no insignificant whitespace, no trailing newline.
std::string to_json(const NodePtr& node);

}  // namespace ragcol
