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

#include <filesystem>

#include "ragcol/layout.hpp"

namespace ragcol {

/// On-disk container: a directory holding 'manifest.json' (format version 1
/// plus the node tree: kind, dtype, length, parameters, buffer references,
/// children) and one raw little-endian file per buffer, named 'b0.raw',
/// 'b1.raw', ... in depth-first node order. Writing the same layout twice
/// produces byte-identical directories.
void write(const NodePtr& node, const std::filesystem::path& directory);

/// Reads a version-1 container back into a layout; the result is validated
/// before it is returned.
NodePtr read(const std::filesystem::path& directory);

}  // namespace ragcol
