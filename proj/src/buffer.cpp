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

#include "ragcol/buffer.hpp"

namespace ragcol {

std::size_t dtype_width(dtype t) noexcept {
  switch (t) {
    case dtype::bool8:
    case dtype::int8:
    case dtype::uint8:
      return 1;
    case dtype::int64:
    case dtype::float64:
      return 8;
  }
  return 0;
}

std::string_view dtype_name(dtype t) noexcept {
  switch (t) {
    case dtype::bool8:
      return "bool8";
    case dtype::int8:
      return "i8";
    case dtype::uint8:
      return "u8";
    case dtype::int64:
      return "i64";
    case dtype::float64:
      return "f64";
  }
  return "?";
}

bool dtype_from_name(std::string_view name, dtype& out) noexcept {
  if (name == "bool8") out = dtype::bool8;
  else if (name == "i8") out = dtype::int8;
  else if (name == "u8") out = dtype::uint8;
  else if (name == "i64") out = dtype::int64;
  else if (name == "f64") out = dtype::float64;
  else return false;
  return true;
}

template <class T>
Buffer Buffer::adopt(dtype t, std::vector<T>&& values) {
  auto length = static_cast<std::int64_t>(values.size());
  auto owner = std::make_shared<std::vector<T>>(std::move(values));
  std::shared_ptr<const void> data(owner, owner->data());
  return Buffer(t, length, std::move(data));
}

Buffer Buffer::i64(std::vector<std::int64_t> values) {
  return adopt(dtype::int64, std::move(values));
}

Buffer Buffer::f64(std::vector<double> values) {
  return adopt(dtype::float64, std::move(values));
}

Buffer Buffer::u8(std::vector<std::uint8_t> values) {
  return adopt(dtype::uint8, std::move(values));
}

Buffer Buffer::i8(std::vector<std::int8_t> values) {
  return adopt(dtype::int8, std::move(values));
}

Buffer Buffer::b8(std::vector<std::uint8_t> values) {
  return adopt(dtype::bool8, std::move(values));
}

Buffer Buffer::from_bytes(dtype t, std::vector<std::uint8_t> bytes) {
  auto length = static_cast<std::int64_t>(bytes.size() / dtype_width(t));
  auto owner = std::make_shared<std::vector<std::uint8_t>>(std::move(bytes));
  std::shared_ptr<const void> data(owner, owner->data());
  return Buffer(t, length, std::move(data));
}

}  // namespace ragcol
