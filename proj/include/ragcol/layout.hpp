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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ragcol/buffer.hpp"
#include "ragcol/parameters.hpp"

namespace ragcol {

// An array of any structure is a composition of nodes that each contribute
// one feature: a numeric leaf, variable-length lists, named fields, a tagged
// union, or per-element missingness. Nodes are immutable after construction
// and share children and buffers freely; walking the node tree touches a
// handful of objects no matter how many elements the buffers hold, and all
// element-scaling work happens in the kernel functions (see kernels.h).

enum class node_kind : std::uint8_t {
  numeric,
  list_offset,
  record,
  union_tagged,
  indexed_option,
  empty,
};

class Node;
using NodePtr = std::shared_ptr<const Node>;

class Node {
 public:
  virtual ~Node() = default;
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;

  virtual node_kind kind() const noexcept = 0;

  /// Logical element count of this node.
  virtual std::int64_t length() const noexcept = 0;

  const Parameters& parameters() const noexcept { return parameters_; }

  /// Identical node with different parameters; children are shared.
  virtual NodePtr with_parameters(Parameters params) const = 0;

 protected:
  explicit Node(Parameters params) : parameters_(std::move(params)) {}
  Parameters parameters_;
};

/// Flat numeric leaf. The element type is the buffer's dtype; int8 buffers
/// are reserved for union tags and are not valid leaves.
class NumericArray final : public Node {
 public:
  explicit NumericArray(Buffer buffer, Parameters params = {});

  node_kind kind() const noexcept override { return node_kind::numeric; }
  std::int64_t length() const noexcept override { return buffer_.length(); }
  NodePtr with_parameters(Parameters params) const override;

  const Buffer& buffer() const noexcept { return buffer_; }

 private:
  Buffer buffer_;
};

/// Variable-length lists: element i is content[offsets[i] .. offsets[i+1]).
/// With parameter "__class__" = "string" over uint8 content, the lists are
/// interpreted as UTF-8 strings.
class ListOffsetArray final : public Node {
 public:
  ListOffsetArray(Buffer offsets, NodePtr content, Parameters params = {});

  node_kind kind() const noexcept override { return node_kind::list_offset; }
  std::int64_t length() const noexcept override { return offsets_.length() - 1; }
  NodePtr with_parameters(Parameters params) const override;

  const Buffer& offsets() const noexcept { return offsets_; }
  const NodePtr& content() const noexcept { return content_; }

  bool is_string() const noexcept;

 private:
  Buffer offsets_;
  NodePtr content_;
};

/// Ordered named fields over shared length. Field contents may be longer
/// than the record length; the explicit length keeps zero-field records
/// well-defined.
class RecordArray final : public Node {
 public:
  RecordArray(std::vector<std::string> names, std::vector<NodePtr> contents,
              std::int64_t length, Parameters params = {});

  node_kind kind() const noexcept override { return node_kind::record; }
  std::int64_t length() const noexcept override { return length_; }
  NodePtr with_parameters(Parameters params) const override;

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<NodePtr>& contents() const noexcept { return contents_; }
  std::optional<std::size_t> field_index(std::string_view name) const noexcept;

 private:
  std::vector<std::string> names_;
  std::vector<NodePtr> contents_;
  std::int64_t length_;
};

/// Tagged union: element i is contents[tags[i]] at position index[i].
class UnionArray final : public Node {
 public:
  UnionArray(Buffer tags, Buffer index, std::vector<NodePtr> contents,
             Parameters params = {});

  node_kind kind() const noexcept override { return node_kind::union_tagged; }
  std::int64_t length() const noexcept override { return tags_.length(); }
  NodePtr with_parameters(Parameters params) const override;

  const Buffer& tags() const noexcept { return tags_; }
  const Buffer& index() const noexcept { return index_; }
  const std::vector<NodePtr>& contents() const noexcept { return contents_; }

 private:
  Buffer tags_;
  Buffer index_;
  std::vector<NodePtr> contents_;
};

/// Possibly-missing values: index -1 encodes missing, anything else points
/// into the content.
class IndexedOptionArray final : public Node {
 public:
  IndexedOptionArray(Buffer index, NodePtr content, Parameters params = {});

  node_kind kind() const noexcept override { return node_kind::indexed_option; }
  std::int64_t length() const noexcept override { return index_.length(); }
  NodePtr with_parameters(Parameters params) const override;

  const Buffer& index() const noexcept { return index_; }
  const NodePtr& content() const noexcept { return content_; }

 private:
  Buffer index_;
  NodePtr content_;
};

/// Length zero, type unknown: the state of data nobody has filled yet.
class EmptyArray final : public Node {
 public:
  explicit EmptyArray(Parameters params = {});

  node_kind kind() const noexcept override { return node_kind::empty; }
  std::int64_t length() const noexcept override { return 0; }
  NodePtr with_parameters(Parameters params) const override;
};

using value = nlohmann::ordered_json;

struct ValidationIssue {
  std::string path;  // "" is the root; children append ".content", ".fields[x]", ...
  std::string message;
};

/// Checks every structural invariant recursively; nullopt means ok.
std::optional<ValidationIssue> validate(const NodePtr& node);

/// New node with the parameter set (or removed, when value is null); the
/// original is untouched and all children and buffers are shared.
NodePtr set_parameter(const NodePtr& node, std::string_view key, value v);

/// Nested plain values: lists, records as objects, numbers, booleans, nulls,
/// and strings for string-flagged byte lists. Requires validate(node) == ok.
value to_values(const NodePtr& node);

/// Single element as a plain value; bounds already checked by the caller.
value value_at(const Node& node, std::int64_t i);

/// Replaces the shallowest record reachable through list/option/union nodes
/// by its named field; structure above the record is preserved and no buffer
/// is copied.
NodePtr project_field(const NodePtr& node, std::string_view name);

/// Elements indices[0..m) of the node as a new node of length m (a gather
/// through whatever structure the node has). Indices must already be
/// normalized to [0, length).
NodePtr carry(const NodePtr& node, std::span<const std::int64_t> indices);

/// Zero-copy restriction of a node to its first `length` elements
/// (length <= node length). Shares every buffer.
NodePtr trim(const NodePtr& node, std::int64_t length);

}  // namespace ragcol
