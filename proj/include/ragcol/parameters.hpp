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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace ragcol {

/// Ordered key -> JSON value metadata attached to a layout node. Parameters
/// drive interpretation ("__class__" = "string" marks byte lists as text,
/// "__str__" overrides a record's type rendering); they never change the
/// stored bytes.
class Parameters {
 public:
  using value_type = nlohmann::ordered_json;

  Parameters() = default;

  /// Null pointer when the key is absent.
  const value_type* get(std::string_view key) const noexcept;

  bool string_equals(std::string_view key, std::string_view want) const noexcept;

  /// Copy with `key` set to `value`; a null value removes the key.
  Parameters with(std::string_view key, value_type value) const;

  bool empty() const noexcept { return entries_.empty(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool operator==(const Parameters& other) const = default;

 private:
  std::vector<std::pair<std::string, value_type>> entries_;
};

}  // namespace ragcol
