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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ragcol/layout.hpp"

namespace ragcol {

/// Logical type of a layout, independent of how the bytes are arranged.
/// Values are immutable and cheap to copy (shared representation).
class ArrayType {
 public:
  enum class tag : std::uint8_t {
    primitive,  // bool, int64, float64, uint8
    var_list,
    record,
    union_type,
    option,
    unknown,
    string,
  };

  static ArrayType primitive(std::string name);
  static ArrayType var_list(ArrayType item);
  static ArrayType record(std::vector<std::pair<std::string, ArrayType>> fields,
                          std::optional<std::string> label = std::nullopt);
  static ArrayType union_of(std::vector<ArrayType> members);
  /// Collapses option(option(T)) to option(T).
  static ArrayType option(ArrayType item);
  static ArrayType unknown();
  static ArrayType string();

  tag kind() const noexcept;
  const std::string& primitive_name() const;   // primitive only
  const ArrayType& item() const;               // var_list / option
  const std::vector<std::pair<std::string, ArrayType>>& fields() const;  // record
  const std::optional<std::string>& label() const;                       // record
  const std::vector<ArrayType>& members() const;                         // union

  bool operator==(const ArrayType& other) const;

  /// The type body without the length prefix, e.g. 'var * float64'.
  std::string to_string() const;

 private:
  struct Repr;
  explicit ArrayType(std::shared_ptr<const Repr> repr) : repr_(std::move(repr)) {}
  std::shared_ptr<const Repr> repr_;
};

/// Logical type of a layout node. String-flagged byte lists map to String,
/// and a record node's "__str__" parameter becomes the type's display label.
ArrayType type_of(const NodePtr& node);

/// Full rendering with the outer length: '3 * var * {"x": int64, ...}'.
std::string render(std::int64_t length, const ArrayType& type);

}  // namespace ragcol
