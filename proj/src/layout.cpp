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

#include "ragcol/layout.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "ragcol/errors.hpp"
#include "ragcol/kernels.h"

namespace ragcol {

namespace {

[[noreturn]] void bad_construction(const std::string& message) {
  throw error(errc::structure_error, message);
}

void check_kernel(const rc_kernel_status& status, errc code) {
  if (status.code != 0) {
    std::string message = status.message;
    if (status.position >= 0) {
      message += " (element " + std::to_string(status.position) + ")";
    }
    throw error(code, message);
  }
}

}  // namespace

NumericArray::NumericArray(Buffer buffer, Parameters params)
    : Node(std::move(params)), buffer_(std::move(buffer)) {
  if (buffer_.type() == dtype::int8) {
    bad_construction("int8 buffers are reserved for union tags, not leaves");
  }
}

NodePtr NumericArray::with_parameters(Parameters params) const {
  return std::make_shared<NumericArray>(buffer_, std::move(params));
}

ListOffsetArray::ListOffsetArray(Buffer offsets, NodePtr content, Parameters params)
    : Node(std::move(params)), offsets_(std::move(offsets)), content_(std::move(content)) {
  if (offsets_.type() != dtype::int64 || offsets_.length() < 1) {
    bad_construction("list offsets must be a non-empty int64 buffer");
  }
  if (content_ == nullptr) {
    bad_construction("list content must not be null");
  }
}

NodePtr ListOffsetArray::with_parameters(Parameters params) const {
  return std::make_shared<ListOffsetArray>(offsets_, content_, std::move(params));
}

bool ListOffsetArray::is_string() const noexcept {
  if (!parameters_.string_equals("__class__", "string")) return false;
  const auto* numeric = dynamic_cast<const NumericArray*>(content_.get());
  return numeric != nullptr && numeric->buffer().type() == dtype::uint8;
}

RecordArray::RecordArray(std::vector<std::string> names, std::vector<NodePtr> contents,
                         std::int64_t length, Parameters params)
    : Node(std::move(params)),
      names_(std::move(names)),
      contents_(std::move(contents)),
      length_(length) {
  if (names_.size() != contents_.size()) {
    bad_construction("record needs one content per field name");
  }
  if (length_ < 0) {
    bad_construction("record length must be non-negative");
  }
}

NodePtr RecordArray::with_parameters(Parameters params) const {
  return std::make_shared<RecordArray>(names_, contents_, length_, std::move(params));
}

std::optional<std::size_t> RecordArray::field_index(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); i++) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

UnionArray::UnionArray(Buffer tags, Buffer index, std::vector<NodePtr> contents,
                       Parameters params)
    : Node(std::move(params)),
      tags_(std::move(tags)),
      index_(std::move(index)),
      contents_(std::move(contents)) {
  if (tags_.type() != dtype::int8 || index_.type() != dtype::int64) {
    bad_construction("union needs int8 tags and int64 index");
  }
  if (tags_.length() != index_.length()) {
    bad_construction("union tags and index must have equal length");
  }
}

NodePtr UnionArray::with_parameters(Parameters params) const {
  return std::make_shared<UnionArray>(tags_, index_, contents_, std::move(params));
}

IndexedOptionArray::IndexedOptionArray(Buffer index, NodePtr content, Parameters params)
    : Node(std::move(params)), index_(std::move(index)), content_(std::move(content)) {
  if (index_.type() != dtype::int64) {
    bad_construction("option index must be an int64 buffer");
  }
  if (content_ == nullptr) {
    bad_construction("option content must not be null");
  }
}

NodePtr IndexedOptionArray::with_parameters(Parameters params) const {
  return std::make_shared<IndexedOptionArray>(index_, content_, std::move(params));
}

EmptyArray::EmptyArray(Parameters params) : Node(std::move(params)) {}

NodePtr EmptyArray::with_parameters(Parameters params) const {
  return std::make_shared<EmptyArray>(std::move(params));
}

namespace {

std::optional<ValidationIssue> validate_at(const NodePtr& node, const std::string& path) {
  switch (node->kind()) {
    case node_kind::numeric:
    case node_kind::empty:
      return std::nullopt;

    case node_kind::list_offset: {
      const auto& list = static_cast<const ListOffsetArray&>(*node);
      auto offsets = list.offsets().as_i64();
      std::int64_t n = list.length();
      if (offsets[0] != 0) {
        return ValidationIssue{path, "offsets do not start at zero"};
      }
      std::vector<std::int64_t> lengths(static_cast<std::size_t>(n));
      rc_kernel_status status = rc_list_lengths(lengths.data(), offsets.data(), n);
      if (status.code != 0) {
        return ValidationIssue{path, status.message};
      }
      if (offsets[static_cast<std::size_t>(n)] > list.content()->length()) {
        return ValidationIssue{path, "offsets exceed content length"};
      }
      return validate_at(list.content(), path + ".content");
    }

    case node_kind::record: {
      const auto& record = static_cast<const RecordArray&>(*node);
      std::unordered_set<std::string_view> seen;
      for (const auto& name : record.names()) {
        if (!seen.insert(name).second) {
          return ValidationIssue{path, "duplicate field name \"" + name + "\""};
        }
      }
      for (std::size_t i = 0; i < record.names().size(); i++) {
        if (record.contents()[i]->length() < record.length()) {
          return ValidationIssue{path, "field \"" + record.names()[i] +
                                           "\" content shorter than record"};
        }
        auto issue = validate_at(record.contents()[i],
                                 path + ".fields[" + record.names()[i] + "]");
        if (issue) return issue;
      }
      return std::nullopt;
    }

    case node_kind::union_tagged: {
      const auto& u = static_cast<const UnionArray&>(*node);
      if (u.contents().size() < 2) {
        return ValidationIssue{path, "union has fewer than two contents"};
      }
      std::vector<std::int64_t> lengths;
      lengths.reserve(u.contents().size());
      for (const auto& c : u.contents()) lengths.push_back(c->length());
      rc_kernel_status status =
          rc_validate_union(u.tags().as_i8().data(), u.index().as_i64().data(),
                            u.length(), static_cast<std::int64_t>(lengths.size()),
                            lengths.data());
      if (status.code != 0) {
        return ValidationIssue{path, status.message};
      }
      for (std::size_t i = 0; i < u.contents().size(); i++) {
        auto issue =
            validate_at(u.contents()[i], path + ".contents[" + std::to_string(i) + "]");
        if (issue) return issue;
      }
      return std::nullopt;
    }

    case node_kind::indexed_option: {
      const auto& option = static_cast<const IndexedOptionArray&>(*node);
      rc_kernel_status status = rc_validate_option_index(
          option.index().as_i64().data(), option.length(), option.content()->length());
      if (status.code != 0) {
        return ValidationIssue{path, status.message};
      }
      return validate_at(option.content(), path + ".content");
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ValidationIssue> validate(const NodePtr& node) {
  return validate_at(node, "");
}

NodePtr set_parameter(const NodePtr& node, std::string_view key, value v) {
  return node->with_parameters(node->parameters().with(key, std::move(v)));
}

namespace {

bool utf8_valid(std::span<const std::uint8_t> bytes) {
  std::size_t i = 0;
  while (i < bytes.size()) {
    std::uint8_t b = bytes[i];
    std::size_t extra;
    std::uint32_t cp;
    if (b < 0x80) {
      i++;
      continue;
    } else if ((b & 0xE0) == 0xC0) {
      extra = 1;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      extra = 2;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      extra = 3;
      cp = b & 0x07;
    } else {
      return false;
    }
    if (i + extra >= bytes.size()) return false;
    for (std::size_t k = 1; k <= extra; k++) {
      if ((bytes[i + k] & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (bytes[i + k] & 0x3F);
    }
    // overlong encodings, surrogates, and > U+10FFFF are invalid
    if ((extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) ||
        (extra == 3 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

std::string string_at(const ListOffsetArray& list, std::int64_t i) {
  auto offsets = list.offsets().as_i64();
  const auto& bytes = static_cast<const NumericArray&>(*list.content()).buffer();
  auto data = bytes.as_u8();
  auto begin = static_cast<std::size_t>(offsets[static_cast<std::size_t>(i)]);
  auto end = static_cast<std::size_t>(offsets[static_cast<std::size_t>(i) + 1]);
  std::span<const std::uint8_t> run{data.data() + begin, end - begin};
  if (!utf8_valid(run)) {
    throw error(errc::encoding_error,
                "string bytes are not valid UTF-8 (element " + std::to_string(i) + ")");
  }
  return {reinterpret_cast<const char*>(run.data()), run.size()};
}

}  // namespace

value value_at(const Node& node, std::int64_t i) {
  switch (node.kind()) {
    case node_kind::numeric: {
      const auto& buffer = static_cast<const NumericArray&>(node).buffer();
      auto k = static_cast<std::size_t>(i);
      switch (buffer.type()) {
        case dtype::bool8:
          return buffer.as_u8()[k] != 0;
        case dtype::uint8:
          return buffer.as_u8()[k];
        case dtype::int64:
          return buffer.as_i64()[k];
        case dtype::float64:
          return buffer.as_f64()[k];
        case dtype::int8:
          break;  // unreachable: rejected at construction
      }
      return nullptr;
    }
    case node_kind::list_offset: {
      const auto& list = static_cast<const ListOffsetArray&>(node);
      if (list.is_string()) {
        return string_at(list, i);
      }
      auto offsets = list.offsets().as_i64();
      value out = value::array();
      for (std::int64_t p = offsets[static_cast<std::size_t>(i)];
           p < offsets[static_cast<std::size_t>(i) + 1]; p++) {
        out.push_back(value_at(*list.content(), p));
      }
      return out;
    }
    case node_kind::record: {
      const auto& record = static_cast<const RecordArray&>(node);
      value out = value::object();
      for (std::size_t f = 0; f < record.names().size(); f++) {
        out[record.names()[f]] = value_at(*record.contents()[f], i);
      }
      return out;
    }
    case node_kind::union_tagged: {
      const auto& u = static_cast<const UnionArray&>(node);
      auto k = static_cast<std::size_t>(i);
      return value_at(*u.contents()[static_cast<std::size_t>(u.tags().as_i8()[k])],
                      u.index().as_i64()[k]);
    }
    case node_kind::indexed_option: {
      const auto& option = static_cast<const IndexedOptionArray&>(node);
      std::int64_t p = option.index().as_i64()[static_cast<std::size_t>(i)];
      if (p == -1) return nullptr;
      return value_at(*option.content(), p);
    }
    case node_kind::empty:
      break;
  }
  throw error(errc::index_out_of_range, "element " + std::to_string(i) + " of empty array");
}

value to_values(const NodePtr& node) {
  if (auto issue = validate(node)) {
    throw error(errc::structure_error,
                issue->message + " at root" + issue->path);
  }
  value out = value::array();
  for (std::int64_t i = 0; i < node->length(); i++) {
    out.push_back(value_at(*node, i));
  }
  return out;
}

NodePtr trim(const NodePtr& node, std::int64_t length) {
  if (node->length() == length) return node;
  switch (node->kind()) {
    case node_kind::numeric: {
      const auto& leaf = static_cast<const NumericArray&>(*node);
      return std::make_shared<NumericArray>(leaf.buffer().prefix(length),
                                            leaf.parameters());
    }
    case node_kind::list_offset: {
      const auto& list = static_cast<const ListOffsetArray&>(*node);
      return std::make_shared<ListOffsetArray>(list.offsets().prefix(length + 1),
                                               list.content(), list.parameters());
    }
    case node_kind::record: {
      const auto& record = static_cast<const RecordArray&>(*node);
      return std::make_shared<RecordArray>(record.names(), record.contents(), length,
                                           record.parameters());
    }
    case node_kind::union_tagged: {
      const auto& u = static_cast<const UnionArray&>(*node);
      return std::make_shared<UnionArray>(u.tags().prefix(length),
                                          u.index().prefix(length), u.contents(),
                                          u.parameters());
    }
    case node_kind::indexed_option: {
      const auto& option = static_cast<const IndexedOptionArray&>(*node);
      return std::make_shared<IndexedOptionArray>(option.index().prefix(length),
                                                  option.content(), option.parameters());
    }
    case node_kind::empty:
      return node;
  }
  return node;
}

NodePtr project_field(const NodePtr& node, std::string_view name) {
  switch (node->kind()) {
    case node_kind::record: {
      const auto& record = static_cast<const RecordArray&>(*node);
      auto idx = record.field_index(name);
      if (!idx) {
        std::string available;
        for (std::size_t i = 0; i < record.names().size(); i++) {
          if (i > 0) available += ", ";
          available += record.names()[i];
        }
        throw error(errc::field_not_found, "field \"" + std::string(name) +
                                               "\" not found; available: " + available);
      }
      return trim(record.contents()[*idx], record.length());
    }
    case node_kind::list_offset: {
      const auto& list = static_cast<const ListOffsetArray&>(*node);
      return std::make_shared<ListOffsetArray>(
          list.offsets(), project_field(list.content(), name), list.parameters());
    }
    case node_kind::indexed_option: {
      const auto& option = static_cast<const IndexedOptionArray&>(*node);
      return std::make_shared<IndexedOptionArray>(
          option.index(), project_field(option.content(), name), option.parameters());
    }
    case node_kind::union_tagged: {
      const auto& u = static_cast<const UnionArray&>(*node);
      std::vector<NodePtr> projected;
      projected.reserve(u.contents().size());
      for (const auto& content : u.contents()) {
        projected.push_back(project_field(content, name));
      }
      return std::make_shared<UnionArray>(u.tags(), u.index(), std::move(projected),
                                          u.parameters());
    }
    case node_kind::numeric:
    case node_kind::empty:
      throw error(errc::no_record, "no record to select a field from");
  }
  throw error(errc::no_record, "no record to select a field from");
}

NodePtr carry(const NodePtr& node, std::span<const std::int64_t> indices) {
  auto m = static_cast<std::int64_t>(indices.size());
  switch (node->kind()) {
    case node_kind::numeric: {
      const auto& leaf = static_cast<const NumericArray&>(*node);
      const Buffer& buffer = leaf.buffer();
      Buffer out;
      rc_kernel_status status{};
      switch (buffer.type()) {
        case dtype::float64: {
          std::vector<double> values(static_cast<std::size_t>(m));
          status = rc_gather_f64(values.data(), buffer.as_f64().data(), buffer.length(),
                                 indices.data(), m);
          out = Buffer::f64(std::move(values));
          break;
        }
        case dtype::int64: {
          std::vector<std::int64_t> values(static_cast<std::size_t>(m));
          status = rc_gather_i64(values.data(), buffer.as_i64().data(), buffer.length(),
                                 indices.data(), m);
          out = Buffer::i64(std::move(values));
          break;
        }
        case dtype::uint8: {
          std::vector<std::uint8_t> values(static_cast<std::size_t>(m));
          status = rc_gather_u8(values.data(), buffer.as_u8().data(), buffer.length(),
                                indices.data(), m);
          out = Buffer::u8(std::move(values));
          break;
        }
        case dtype::bool8: {
          std::vector<std::uint8_t> values(static_cast<std::size_t>(m));
          status = rc_gather_b8(values.data(), buffer.as_u8().data(), buffer.length(),
                                indices.data(), m);
          out = Buffer::b8(std::move(values));
          break;
        }
        case dtype::int8:
          break;  // unreachable: rejected at construction
      }
      check_kernel(status, errc::index_out_of_range);
      return std::make_shared<NumericArray>(std::move(out), leaf.parameters());
    }

    case node_kind::list_offset: {
      const auto& list = static_cast<const ListOffsetArray&>(*node);
      auto offsets = list.offsets().as_i64();
      std::int64_t total = 0;
      check_kernel(rc_carry_list_total(&total, offsets.data(), list.length(),
                                       indices.data(), m),
                   errc::index_out_of_range);
      std::vector<std::int64_t> nextoffsets(static_cast<std::size_t>(m) + 1);
      std::vector<std::int64_t> nextcarry(static_cast<std::size_t>(total));
      check_kernel(rc_carry_list(nextoffsets.data(), nextcarry.data(), offsets.data(),
                                 list.length(), indices.data(), m),
                   errc::index_out_of_range);
      return std::make_shared<ListOffsetArray>(Buffer::i64(std::move(nextoffsets)),
                                               carry(list.content(), nextcarry),
                                               list.parameters());
    }

    case node_kind::record: {
      const auto& record = static_cast<const RecordArray&>(*node);
      std::vector<NodePtr> contents;
      contents.reserve(record.contents().size());
      for (const auto& content : record.contents()) {
        contents.push_back(carry(content, indices));
      }
      return std::make_shared<RecordArray>(record.names(), std::move(contents), m,
                                           record.parameters());
    }

    case node_kind::union_tagged: {
      const auto& u = static_cast<const UnionArray&>(*node);
      std::vector<std::int8_t> tags(static_cast<std::size_t>(m));
      std::vector<std::int64_t> index(static_cast<std::size_t>(m));
      check_kernel(rc_gather_i8(tags.data(), u.tags().as_i8().data(), u.length(),
                                indices.data(), m),
                   errc::index_out_of_range);
      check_kernel(rc_gather_i64(index.data(), u.index().as_i64().data(), u.length(),
                                 indices.data(), m),
                   errc::index_out_of_range);
      return std::make_shared<UnionArray>(Buffer::i8(std::move(tags)),
                                          Buffer::i64(std::move(index)), u.contents(),
                                          u.parameters());
    }

    case node_kind::indexed_option: {
      const auto& option = static_cast<const IndexedOptionArray&>(*node);
      std::vector<std::int64_t> index(static_cast<std::size_t>(m));
      check_kernel(rc_gather_i64(index.data(), option.index().as_i64().data(),
                                 option.length(), indices.data(), m),
                   errc::index_out_of_range);
      return std::make_shared<IndexedOptionArray>(Buffer::i64(std::move(index)),
                                                  option.content(), option.parameters());
    }

    case node_kind::empty: {
      if (m != 0) {
        throw error(errc::index_out_of_range, "gather index out of range (element 0)");
      }
      return node;
    }
  }
  return node;
}

}  // namespace ragcol
