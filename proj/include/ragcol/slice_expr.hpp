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
#include <vector>

#include "ragcol/slicing.hpp"

namespace ragcol {

/// Parses the textual slice mini-language into selectors. Terms are comma
/// separated; whitespace is insignificant:
///   "name"            field            (single quotes work too)
///   3, -1             integer
///   1:, :2, ::-1, :   range with optional start:stop:step
///   [0, 2]            flat index array
///   [true, false]     flat mask array
///   [[0], [1, 0]]     jagged index or mask array (by leaf type)
/// The empty expression selects everything. Errors are expression_error.
std::vector<Selector> parse_slice_expression(std::string_view text);

}  // namespace ragcol
