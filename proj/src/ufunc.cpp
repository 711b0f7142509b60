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

#include "ragcol/ufunc.hpp"

#include <cstring>

#include "ragcol/errors.hpp"
#include "ragcol/kernels.h"

namespace ragcol {

namespace {

[[noreturn]] void non_numeric(const std::string& path, const char* what) {
  throw error(errc::non_numeric_leaf,
              std::string(what) + " at root" + path + " is not numeric");
}

[[noreturn]] void mismatch(const std::string& path, const std::string& why) {
  throw error(errc::structure_mismatch, why + " at root" + path);
}

rc_dtype to_rc_dtype(dtype t) {
  switch (t) {
    case dtype::bool8: return RC_DTYPE_BOOL8;
    case dtype::int8: return RC_DTYPE_INT8;
    case dtype::uint8: return RC_DTYPE_UINT8;
    case dtype::int64: return RC_DTYPE_INT64;
    case dtype::float64: return RC_DTYPE_FLOAT64;
  }
  return RC_DTYPE_FLOAT64;
}

void require_unary_op(std::string_view op) {
  if (op != "sin" && op != "negate" && op != "abs" && op != "identity-as-float") {
    throw error(errc::unknown_op, "unknown unary op \"" + std::string(op) + "\"");
  }
}

void require_binary_op(std::string_view op) {
  if (op != "add" && op != "multiply") {
    throw error(errc::unknown_op, "unknown binary op \"" + std::string(op) + "\"");
  }
}

// Numeric leaves keep their parameters only when the dtype is unchanged.
Parameters leaf_parameters(const NumericArray& leaf, dtype out) {
  return leaf.buffer().type() == out ? leaf.parameters() : Parameters{};
}

NodePtr unary_at(std::string_view op, const NodePtr& node, const std::string& path) {
  switch (node->kind()) {
    case node_kind::numeric: {
      const auto& leaf = static_cast<const NumericArray&>(*node);
      if (leaf.buffer().type() == dtype::bool8) {
        non_numeric(path, "boolean leaf");
      }
      std::vector<double> out(static_cast<std::size_t>(leaf.length()));
      rc_map_unary(out.data(), std::string(op).c_str(),
                   to_rc_dtype(leaf.buffer().type()), leaf.buffer().data(),
                   leaf.length());
      return std::make_shared<NumericArray>(Buffer::f64(std::move(out)),
                                            leaf_parameters(leaf, dtype::float64));
    }
    case node_kind::list_offset: {
      const auto& list = static_cast<const ListOffsetArray&>(*node);
      if (list.is_string()) {
        non_numeric(path, "string leaf");
      }
      return std::make_shared<ListOffsetArray>(
          list.offsets(), unary_at(op, list.content(), path + ".content"),
          list.parameters());
    }
    case node_kind::record: {
      const auto& record = static_cast<const RecordArray&>(*node);
      std::vector<NodePtr> contents;
      contents.reserve(record.contents().size());
      for (std::size_t i = 0; i < record.contents().size(); i++) {
        contents.push_back(unary_at(op, record.contents()[i],
                                    path + ".fields[" + record.names()[i] + "]"));
      }
      return std::make_shared<RecordArray>(record.names(), std::move(contents),
                                           record.length(), record.parameters());
    }
    case node_kind::union_tagged: {
      const auto& u = static_cast<const UnionArray&>(*node);
      std::vector<NodePtr> contents;
      contents.reserve(u.contents().size());
      for (std::size_t i = 0; i < u.contents().size(); i++) {
        contents.push_back(
            unary_at(op, u.contents()[i], path + ".contents[" + std::to_string(i) + "]"));
      }
      return std::make_shared<UnionArray>(u.tags(), u.index(), std::move(contents),
                                          u.parameters());
    }
    case node_kind::indexed_option: {
      const auto& option = static_cast<const IndexedOptionArray&>(*node);
      return std::make_shared<IndexedOptionArray>(
          option.index(), unary_at(op, option.content(), path + ".content"),
          option.parameters());
    }
    case node_kind::empty:
      return node;
  }
  return node;
}

bool buffers_equal_i64(const Buffer& a, const Buffer& b) {
  if (a.length() != b.length()) return false;
  if (a.same_memory(b)) return true;
  return std::memcmp(a.data(), b.data(), a.byte_length()) == 0;
}

bool buffers_equal_i8(const Buffer& a, const Buffer& b) {
  if (a.length() != b.length()) return false;
  if (a.same_memory(b)) return true;
  return std::memcmp(a.data(), b.data(), a.byte_length()) == 0;
}

NodePtr binary_at(std::string_view op, const NodePtr& a, const NodePtr& b,
                  const std::string& path) {
  if (a->kind() != b->kind()) {
    mismatch(path, "operand node kinds differ");
  }
  switch (a->kind()) {
    case node_kind::numeric: {
      const auto& la = static_cast<const NumericArray&>(*a);
      const auto& lb = static_cast<const NumericArray&>(*b);
      if (la.length() != lb.length()) {
        mismatch(path, "operand lengths differ");
      }
      if (la.buffer().type() == dtype::bool8 || lb.buffer().type() == dtype::bool8) {
        non_numeric(path, "boolean leaf");
      }
      if (la.buffer().type() == dtype::int64 && lb.buffer().type() == dtype::int64) {
        std::vector<std::int64_t> out(static_cast<std::size_t>(la.length()));
        rc_map_binary_i64(out.data(), std::string(op).c_str(),
                          la.buffer().as_i64().data(), lb.buffer().as_i64().data(),
                          la.length());
        return std::make_shared<NumericArray>(Buffer::i64(std::move(out)),
                                              leaf_parameters(la, dtype::int64));
      }
      std::vector<double> out(static_cast<std::size_t>(la.length()));
      rc_map_binary_f64(out.data(), std::string(op).c_str(),
                        to_rc_dtype(la.buffer().type()), la.buffer().data(),
                        to_rc_dtype(lb.buffer().type()), lb.buffer().data(),
                        la.length());
      return std::make_shared<NumericArray>(Buffer::f64(std::move(out)),
                                            leaf_parameters(la, dtype::float64));
    }
    case node_kind::list_offset: {
      const auto& la = static_cast<const ListOffsetArray&>(*a);
      const auto& lb = static_cast<const ListOffsetArray&>(*b);
      if (la.is_string() || lb.is_string()) {
        non_numeric(path, "string leaf");
      }
      if (!buffers_equal_i64(la.offsets(), lb.offsets())) {
        mismatch(path, "list offsets differ");
      }
      std::int64_t used = la.offsets().as_i64()[static_cast<std::size_t>(la.length())];
      return std::make_shared<ListOffsetArray>(
          la.offsets(),
          binary_at(op, trim(la.content(), used), trim(lb.content(), used),
                    path + ".content"),
          la.parameters());
    }
    case node_kind::record: {
      const auto& ra = static_cast<const RecordArray&>(*a);
      const auto& rb = static_cast<const RecordArray&>(*b);
      if (ra.names() != rb.names()) {
        mismatch(path, "record field names differ");
      }
      if (ra.length() != rb.length()) {
        mismatch(path, "record lengths differ");
      }
      std::vector<NodePtr> contents;
      contents.reserve(ra.contents().size());
      for (std::size_t i = 0; i < ra.contents().size(); i++) {
        contents.push_back(binary_at(op, trim(ra.contents()[i], ra.length()),
                                     trim(rb.contents()[i], rb.length()),
                                     path + ".fields[" + ra.names()[i] + "]"));
      }
      return std::make_shared<RecordArray>(ra.names(), std::move(contents), ra.length(),
                                           ra.parameters());
    }
    case node_kind::union_tagged: {
      const auto& ua = static_cast<const UnionArray&>(*a);
      const auto& ub = static_cast<const UnionArray&>(*b);
      if (ua.contents().size() != ub.contents().size() ||
          !buffers_equal_i8(ua.tags(), ub.tags()) ||
          !buffers_equal_i64(ua.index(), ub.index())) {
        mismatch(path, "union tags or indices differ");
      }
      std::vector<NodePtr> contents;
      contents.reserve(ua.contents().size());
      for (std::size_t i = 0; i < ua.contents().size(); i++) {
        if (ua.contents()[i]->length() != ub.contents()[i]->length()) {
          mismatch(path, "union content lengths differ");
        }
        contents.push_back(binary_at(op, ua.contents()[i], ub.contents()[i],
                                     path + ".contents[" + std::to_string(i) + "]"));
      }
      return std::make_shared<UnionArray>(ua.tags(), ua.index(), std::move(contents),
                                          ua.parameters());
    }
    case node_kind::indexed_option: {
      const auto& oa = static_cast<const IndexedOptionArray&>(*a);
      const auto& ob = static_cast<const IndexedOptionArray&>(*b);
      if (!buffers_equal_i64(oa.index(), ob.index())) {
        mismatch(path, "option indices differ");
      }
      if (oa.content()->length() != ob.content()->length()) {
        mismatch(path, "option content lengths differ");
      }
      return std::make_shared<IndexedOptionArray>(
          oa.index(), binary_at(op, oa.content(), ob.content(), path + ".content"),
          oa.parameters());
    }
    case node_kind::empty:
      return a;
  }
  return a;
}

NodePtr binary_scalar_at(std::string_view op, const NodePtr& node, const Scalar& b,
                         const std::string& path) {
  switch (node->kind()) {
    case node_kind::numeric: {
      const auto& leaf = static_cast<const NumericArray&>(*node);
      if (leaf.buffer().type() == dtype::bool8) {
        non_numeric(path, "boolean leaf");
      }
      if (leaf.buffer().type() == dtype::int64 &&
          std::holds_alternative<std::int64_t>(b)) {
        std::vector<std::int64_t> out(static_cast<std::size_t>(leaf.length()));
        rc_map_binary_scalar_i64(out.data(), std::string(op).c_str(),
                                 leaf.buffer().as_i64().data(), leaf.length(),
                                 std::get<std::int64_t>(b));
        return std::make_shared<NumericArray>(Buffer::i64(std::move(out)),
                                              leaf_parameters(leaf, dtype::int64));
      }
      double scalar = std::holds_alternative<double>(b)
                          ? std::get<double>(b)
                          : static_cast<double>(std::get<std::int64_t>(b));
      std::vector<double> out(static_cast<std::size_t>(leaf.length()));
      rc_map_binary_scalar_f64(out.data(), std::string(op).c_str(),
                               to_rc_dtype(leaf.buffer().type()), leaf.buffer().data(),
                               leaf.length(), scalar);
      return std::make_shared<NumericArray>(Buffer::f64(std::move(out)),
                                            leaf_parameters(leaf, dtype::float64));
    }
    case node_kind::list_offset: {
      const auto& list = static_cast<const ListOffsetArray&>(*node);
      if (list.is_string()) {
        non_numeric(path, "string leaf");
      }
      return std::make_shared<ListOffsetArray>(
          list.offsets(), binary_scalar_at(op, list.content(), b, path + ".content"),
          list.parameters());
    }
    case node_kind::record: {
      const auto& record = static_cast<const RecordArray&>(*node);
      std::vector<NodePtr> contents;
      contents.reserve(record.contents().size());
      for (std::size_t i = 0; i < record.contents().size(); i++) {
        contents.push_back(binary_scalar_at(op, record.contents()[i], b,
                                            path + ".fields[" + record.names()[i] + "]"));
      }
      return std::make_shared<RecordArray>(record.names(), std::move(contents),
                                           record.length(), record.parameters());
    }
    case node_kind::union_tagged: {
      const auto& u = static_cast<const UnionArray&>(*node);
      std::vector<NodePtr> contents;
      contents.reserve(u.contents().size());
      for (std::size_t i = 0; i < u.contents().size(); i++) {
        contents.push_back(binary_scalar_at(op, u.contents()[i], b,
                                            path + ".contents[" + std::to_string(i) + "]"));
      }
      return std::make_shared<UnionArray>(u.tags(), u.index(), std::move(contents),
                                          u.parameters());
    }
    case node_kind::indexed_option: {
      const auto& option = static_cast<const IndexedOptionArray&>(*node);
      return std::make_shared<IndexedOptionArray>(
          option.index(), binary_scalar_at(op, option.content(), b, path + ".content"),
          option.parameters());
    }
    case node_kind::empty:
      return node;
  }
  return node;
}

}  // namespace

NodePtr map_unary(std::string_view op, const NodePtr& a) {
  require_unary_op(op);
  return unary_at(op, a, "");
}

NodePtr map_binary(std::string_view op, const NodePtr& a, const NodePtr& b) {
  require_binary_op(op);
  return binary_at(op, a, b, "");
}

NodePtr map_binary(std::string_view op, const NodePtr& a, Scalar b) {
  require_binary_op(op);
  return binary_scalar_at(op, a, b, "");
}

}  // namespace ragcol
