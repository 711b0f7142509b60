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

#include <string_view>
#include <variant>

#include "ragcol/layout.hpp"

namespace ragcol {

/// Elementwise application through nested structure: offsets, field names,
/// tags, and option indices are preserved (and shared where possible); only
/// numeric leaves transform.

/// ops: "sin", "negate", "abs", "identity-as-float". Integer leaves widen to
/// float64. String-flagged and boolean leaves raise non-numeric-leaf.
NodePtr map_unary(std::string_view op, const NodePtr& a);

using Scalar = std::variant<std::int64_t, double>;

/// ops: "add", "multiply". The operands must match structurally: equal list
/// offsets, identical record field names, equal tags/indices. int64 pairs
/// produce int64, anything else float64.
NodePtr map_binary(std::string_view op, const NodePtr& a, const NodePtr& b);

/// Scalar broadcast: the scalar combines with every leaf element of a.
NodePtr map_binary(std::string_view op, const NodePtr& a, Scalar b);

}  // namespace ragcol
