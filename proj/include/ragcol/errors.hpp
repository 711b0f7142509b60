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
#include <stdexcept>
#include <string>

namespace ragcol {

/// Error categories carried by every ragcol::error. The category, not the
/// message text, is the stable contract: the C API maps each category to an
/// error code and the CLI maps codes to exit codes.
enum class errc {
  structure_error,            // a layout invariant does not hold
  field_not_found,            // record has no such field
  no_record,                  // field selection on a record-free layout
  index_out_of_range,         // integer selection outside [-length, length)
  mask_length_mismatch,       // boolean mask length != selected dimension
  jagged_structure_mismatch,  // jagged selector offsets differ from array's
  too_many_selectors,         // positional selector with no dimension left
  fill_state_error,           // builder method not legal in current state
  duplicate_field,            // same field twice in one record
  parse_error,                // malformed JSON; offset() is the byte offset
  depth_limit_exceeded,       // JSON nesting beyond the configured limit
  integer_overflow,           // integer literal outside 64-bit signed range
  structure_deviation,        // numbers-only fast path met a non-conforming token
  encoding_error,             // string bytes are not valid UTF-8
  io_error,                   // filesystem failure
  format_error,               // container manifest unreadable or wrong version
  unsupported_value,          // value kind the builder cannot ingest
  unknown_op,                 // elementwise op name not in the registry
  non_numeric_leaf,           // elementwise op reached a string/bool leaf
  structure_mismatch,         // binary op operands differ in structure
  expression_error,           // slice expression syntax error
};

class error : public std::runtime_error {
 public:
  error(errc code, std::string message, std::int64_t offset = -1)
      : std::runtime_error(std::move(message)), code_(code), offset_(offset) {}

  errc code() const noexcept { return code_; }

  /// Byte offset into the input for parse-class errors, -1 otherwise.
  std::int64_t offset() const noexcept { return offset_; }

 private:
  errc code_;
  std::int64_t offset_;
};

}  // namespace ragcol
