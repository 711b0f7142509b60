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

#include "ragcol/parameters.hpp"

#include <algorithm>

namespace ragcol {

const Parameters::value_type* Parameters::get(std::string_view key) const noexcept {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const auto& e) { return e.first == key; });
  return it == entries_.end() ? nullptr : &it->second;
}

bool Parameters::string_equals(std::string_view key, std::string_view want) const noexcept {
  const value_type* v = get(key);
  return v != nullptr && v->is_string() && v->template get_ref<const std::string&>() == want;
}

Parameters Parameters::with(std::string_view key, value_type value) const {
  Parameters out = *this;
  auto it = std::find_if(out.entries_.begin(), out.entries_.end(),
                         [&](const auto& e) { return e.first == key; });
  if (value.is_null()) {
    if (it != out.entries_.end()) out.entries_.erase(it);
  } else if (it != out.entries_.end()) {
    it->second = std::move(value);
  } else {
    out.entries_.emplace_back(std::string(key), std::move(value));
  }
  return out;
}

}  // namespace ragcol
