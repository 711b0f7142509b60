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

#include "ragcol/slicing.hpp"

#include "ragcol/errors.hpp"
#include "ragcol/kernels.h"

namespace ragcol {

namespace {

[[noreturn]] void out_of_range(std::int64_t index, std::int64_t length,
                               const std::string& path) {
  throw error(errc::index_out_of_range,
              "index " + std::to_string(index) + " out of range for length " +
                  std::to_string(length) + " (" + path + ")");
}

[[noreturn]] void no_dimension(const std::string& path) {
  throw error(errc::too_many_selectors,
              "no dimension left to select from (" + path + ")");
}

bool is_string_node(const Node& node) {
  return node.kind() == node_kind::list_offset &&
         static_cast<const ListOffsetArray&>(node).is_string();
}

// Positions selected by a range over a dimension of length n, computed with
// the per-list range kernels over a single synthetic sublist [0, n).
std::vector<std::int64_t> range_positions(std::int64_t n, const RangeSelector& range,
                                          const std::string& path) {
  std::int64_t step = range.step.value_or(1);
  if (step == 0) {
    throw error(errc::expression_error, "slice step must not be zero (" + path + ")");
  }
  const std::int64_t wrap[2] = {0, n};
  std::int64_t nextoffsets[2];
  rc_range_per_list_count(nextoffsets, wrap, 1, range.start.value_or(0),
                          range.stop.value_or(0), step, range.start.has_value(),
                          range.stop.has_value());
  std::vector<std::int64_t> positions(static_cast<std::size_t>(nextoffsets[1]));
  rc_range_per_list_fill(positions.data(), wrap, 1, range.start.value_or(0),
                         range.stop.value_or(0), step, range.start.has_value(),
                         range.stop.has_value());
  return positions;
}

struct Element {
  NodePtr node;
  bool scalar;
};

// Integer selection at the outermost dimension: a list element becomes the
// sublist itself; strings, numbers, records, and missing values become
// length-1 arrays flagged as scalars.
Element element_at(const NodePtr& node, std::int64_t raw, const std::string& path) {
  std::int64_t n = node->length();
  std::int64_t i = raw < 0 ? raw + n : raw;
  if (i < 0 || i >= n) {
    out_of_range(raw, n, path);
  }
  switch (node->kind()) {
    case node_kind::list_offset: {
      if (is_string_node(*node)) break;
      const auto& list = static_cast<const ListOffsetArray&>(*node);
      auto offsets = list.offsets().as_i64();
      std::int64_t nextoffsets[2];
      std::vector<std::int64_t> positions(static_cast<std::size_t>(
          offsets[static_cast<std::size_t>(i) + 1] - offsets[static_cast<std::size_t>(i)]));
      rc_carry_list(nextoffsets, positions.data(), offsets.data(), n, &i, 1);
      return {carry(list.content(), positions), false};
    }
    case node_kind::union_tagged: {
      const auto& u = static_cast<const UnionArray&>(*node);
      auto k = static_cast<std::size_t>(i);
      return element_at(u.contents()[static_cast<std::size_t>(u.tags().as_i8()[k])],
                        u.index().as_i64()[k], path);
    }
    case node_kind::indexed_option: {
      const auto& option = static_cast<const IndexedOptionArray&>(*node);
      std::int64_t p = option.index().as_i64()[static_cast<std::size_t>(i)];
      if (p != -1) {
        return element_at(option.content(), p, path);
      }
      break;  // missing element: a length-1 option is the scalar null
    }
    default:
      break;
  }
  return {carry(node, std::span<const std::int64_t>{&i, 1}), true};
}

void check_kernel(const rc_kernel_status& status, errc code, const std::string& path) {
  if (status.code != 0) {
    std::string message = status.message;
    if (status.position >= 0) {
      message += " (element " + std::to_string(status.position) + ")";
    }
    throw error(code, message + " (" + path + ")");
  }
}

// Applies a positional selector at dimension `depth` >= 1 of the node; the
// node's own length is preserved. Only At and Range reach this point: array
// selectors are restricted to the outermost dimension.
NodePtr apply_at_depth(const NodePtr& node, std::int64_t depth, const Selector& selector,
                       const std::string& path) {
  switch (node->kind()) {
    case node_kind::numeric:
    case node_kind::record:
    case node_kind::empty:
      no_dimension(path);

    case node_kind::list_offset: {
      const auto& list = static_cast<const ListOffsetArray&>(*node);
      if (list.is_string()) {
        no_dimension(path);  // strings are atomic under slicing
      }
      auto offsets = list.offsets().as_i64();
      std::int64_t n = list.length();
      if (depth > 1) {
        return std::make_shared<ListOffsetArray>(
            list.offsets(), apply_at_depth(list.content(), depth - 1, selector, path),
            list.parameters());
      }
      if (const auto* at = std::get_if<AtSelector>(&selector)) {
        std::vector<std::int64_t> positions(static_cast<std::size_t>(n));
        rc_kernel_status status =
            rc_at_per_list(positions.data(), offsets.data(), n, at->index);
        if (status.code != 0) {
          auto i = static_cast<std::size_t>(status.position);
          out_of_range(at->index, offsets[i + 1] - offsets[i],
                       path + ", sublist " + std::to_string(status.position));
        }
        return carry(list.content(), positions);  // the dimension dissolves
      }
      const auto& range = std::get<RangeSelector>(selector);
      std::int64_t step = range.step.value_or(1);
      if (step == 0) {
        throw error(errc::expression_error, "slice step must not be zero (" + path + ")");
      }
      std::vector<std::int64_t> nextoffsets(static_cast<std::size_t>(n) + 1);
      rc_range_per_list_count(nextoffsets.data(), offsets.data(), n,
                              range.start.value_or(0), range.stop.value_or(0), step,
                              range.start.has_value(), range.stop.has_value());
      std::vector<std::int64_t> positions(
          static_cast<std::size_t>(nextoffsets[static_cast<std::size_t>(n)]));
      rc_range_per_list_fill(positions.data(), offsets.data(), n,
                             range.start.value_or(0), range.stop.value_or(0), step,
                             range.start.has_value(), range.stop.has_value());
      return std::make_shared<ListOffsetArray>(Buffer::i64(std::move(nextoffsets)),
                                               carry(list.content(), positions),
                                               list.parameters());
    }

    case node_kind::union_tagged: {
      const auto& u = static_cast<const UnionArray&>(*node);
      std::vector<NodePtr> contents;
      contents.reserve(u.contents().size());
      for (const auto& content : u.contents()) {
        contents.push_back(apply_at_depth(content, depth, selector, path));
      }
      return std::make_shared<UnionArray>(u.tags(), u.index(), std::move(contents),
                                          u.parameters());
    }

    case node_kind::indexed_option: {
      const auto& option = static_cast<const IndexedOptionArray&>(*node);
      auto index = option.index().as_i64();
      std::int64_t n = option.length();
      std::int64_t present = 0;
      rc_index_nonnull_count(&present, index.data(), n);
      if (present != n && std::holds_alternative<AtSelector>(selector)) {
        throw error(errc::index_out_of_range,
                    "cannot select within a missing value with an integer index (" +
                        path + ")");
      }
      std::vector<std::int64_t> positions(static_cast<std::size_t>(present));
      std::vector<std::int64_t> newindex(static_cast<std::size_t>(n));
      rc_index_compact(positions.data(), newindex.data(), index.data(), n);
      NodePtr applied =
          apply_at_depth(carry(option.content(), positions), depth, selector, path);
      return std::make_shared<IndexedOptionArray>(Buffer::i64(std::move(newindex)),
                                                  std::move(applied), option.parameters());
    }
  }
  no_dimension(path);
}

// --- jagged selectors ---

// Leaf-level selector elements hold integers or booleans; deeper levels hold
// arrays. Empty elements are compatible with either.
bool selector_level_is_leaf(const value& lists, const std::string& path) {
  bool saw_leaf = false;
  bool saw_deeper = false;
  for (const auto& element : lists) {
    for (const auto& item : element) {
      if (item.is_array()) {
        saw_deeper = true;
      } else {
        saw_leaf = true;
      }
    }
  }
  if (saw_leaf && saw_deeper) {
    throw error(errc::jagged_structure_mismatch,
                "jagged selector mixes values and sublists at one level (" + path + ")");
  }
  return !saw_deeper;
}

NodePtr apply_jagged(const NodePtr& node, const value& lists, bool is_mask,
                     const std::string& path) {
  if (!lists.is_array()) {
    throw error(errc::jagged_structure_mismatch,
                "jagged selector must be a list of lists (" + path + ")");
  }
  std::int64_t n = node->length();
  if (static_cast<std::int64_t>(lists.size()) != n) {
    throw error(errc::jagged_structure_mismatch,
                "jagged selector length " + std::to_string(lists.size()) +
                    " differs from array length " + std::to_string(n) + " (" + path + ")");
  }
  for (const auto& element : lists) {
    if (!element.is_array() && !element.is_null()) {
      throw error(errc::jagged_structure_mismatch,
                  "jagged selector element is not a list (" + path + ")");
    }
  }

  switch (node->kind()) {
    case node_kind::indexed_option: {
      const auto& option = static_cast<const IndexedOptionArray&>(*node);
      auto index = option.index().as_i64();
      // missing entries admit only an empty selector element and stay missing
      value compacted = value::array();
      for (std::int64_t i = 0; i < n; i++) {
        if (index[static_cast<std::size_t>(i)] == -1) {
          if (!lists[static_cast<std::size_t>(i)].empty()) {
            throw error(errc::jagged_structure_mismatch,
                        "jagged selector selects within a missing value (element " +
                            std::to_string(i) + ", " + path + ")");
          }
        } else {
          compacted.push_back(lists[static_cast<std::size_t>(i)]);
        }
      }
      std::int64_t present = 0;
      rc_index_nonnull_count(&present, index.data(), n);
      std::vector<std::int64_t> positions(static_cast<std::size_t>(present));
      std::vector<std::int64_t> newindex(static_cast<std::size_t>(n));
      rc_index_compact(positions.data(), newindex.data(), index.data(), n);
      NodePtr applied =
          apply_jagged(carry(option.content(), positions), compacted, is_mask, path);
      return std::make_shared<IndexedOptionArray>(Buffer::i64(std::move(newindex)),
                                                  std::move(applied), option.parameters());
    }

    case node_kind::list_offset: {
      const auto& list = static_cast<const ListOffsetArray&>(*node);
      if (list.is_string()) break;
      auto offsets = list.offsets().as_i64();

      if (!selector_level_is_leaf(lists, path)) {
        // descend: the selector's next level must line up with this node's
        // sublists element for element
        value flattened = value::array();
        for (std::int64_t i = 0; i < n; i++) {
          const auto& element = lists[static_cast<std::size_t>(i)];
          std::int64_t len = offsets[static_cast<std::size_t>(i) + 1] -
                             offsets[static_cast<std::size_t>(i)];
          if (static_cast<std::int64_t>(element.size()) != len) {
            throw error(errc::jagged_structure_mismatch,
                        "jagged selector offsets differ from the array's (sublist " +
                            std::to_string(i) + ": selector " +
                            std::to_string(element.size()) + ", array " +
                            std::to_string(len) + ") (" + path + ")");
          }
          for (const auto& inner : element) flattened.push_back(inner);
        }
        NodePtr content =
            apply_jagged(trim(list.content(), offsets[static_cast<std::size_t>(n)]),
                         flattened, is_mask, path);
        return std::make_shared<ListOffsetArray>(list.offsets(), content,
                                                 list.parameters());
      }

      if (is_mask) {
        std::vector<std::uint8_t> mask;
        mask.reserve(static_cast<std::size_t>(offsets[static_cast<std::size_t>(n)]));
        for (std::int64_t i = 0; i < n; i++) {
          const auto& element = lists[static_cast<std::size_t>(i)];
          std::int64_t len = offsets[static_cast<std::size_t>(i) + 1] -
                             offsets[static_cast<std::size_t>(i)];
          if (static_cast<std::int64_t>(element.size()) != len) {
            throw error(errc::mask_length_mismatch,
                        "mask length mismatch at sublist " + std::to_string(i) +
                            ": expected " + std::to_string(len) + ", got " +
                            std::to_string(element.size()) + " (" + path + ")");
          }
          for (const auto& item : element) {
            if (!item.is_boolean()) {
              throw error(errc::jagged_structure_mismatch,
                          "jagged mask holds a non-boolean (" + path + ")");
            }
            mask.push_back(item.get<bool>() ? 1 : 0);
          }
        }
        std::vector<std::int64_t> nextoffsets(static_cast<std::size_t>(n) + 1);
        rc_jagged_mask_offsets(nextoffsets.data(), offsets.data(), n, mask.data());
        std::int64_t selected = 0;
        rc_nonzero_count(&selected, mask.data(), static_cast<std::int64_t>(mask.size()));
        std::vector<std::int64_t> positions(static_cast<std::size_t>(selected));
        rc_nonzero(positions.data(), mask.data(), static_cast<std::int64_t>(mask.size()));
        return std::make_shared<ListOffsetArray>(Buffer::i64(std::move(nextoffsets)),
                                                 carry(list.content(), positions),
                                                 list.parameters());
      }

      std::vector<std::int64_t> sel_offsets(static_cast<std::size_t>(n) + 1);
      std::vector<std::int64_t> sel_values;
      sel_offsets[0] = 0;
      for (std::int64_t i = 0; i < n; i++) {
        for (const auto& item : lists[static_cast<std::size_t>(i)]) {
          if (!item.is_number_integer() && !item.is_number_unsigned()) {
            throw error(errc::jagged_structure_mismatch,
                        "jagged index holds a non-integer (" + path + ")");
          }
          sel_values.push_back(item.get<std::int64_t>());
        }
        sel_offsets[static_cast<std::size_t>(i) + 1] =
            static_cast<std::int64_t>(sel_values.size());
      }
      std::vector<std::int64_t> positions(sel_values.size());
      check_kernel(rc_jagged_index_carry(positions.data(), offsets.data(),
                                         sel_offsets.data(), n, sel_values.data()),
                   errc::index_out_of_range, path);
      return std::make_shared<ListOffsetArray>(Buffer::i64(std::move(sel_offsets)),
                                               carry(list.content(), positions),
                                               list.parameters());
    }

    default:
      break;
  }
  throw error(errc::jagged_structure_mismatch,
              "jagged selector requires a list dimension (" + path + ")");
}

}  // namespace

GetitemResult getitem(const NodePtr& node, std::span<const Selector> selectors) {
  NodePtr current = node;
  bool scalar = false;
  std::int64_t cursor = 0;
  bool array_selector_used = false;

  for (std::size_t k = 0; k < selectors.size(); k++) {
    const Selector& selector = selectors[k];
    std::string path = "selector " + std::to_string(k) + " at depth " +
                       std::to_string(cursor);

    if (const auto* field = std::get_if<FieldSelector>(&selector)) {
      current = project_field(current, field->name);
      continue;
    }
    if (scalar) {
      no_dimension(path);
    }

    if (const auto* at = std::get_if<AtSelector>(&selector)) {
      if (cursor == 0) {
        Element element = element_at(current, at->index, path);
        current = std::move(element.node);
        scalar = element.scalar;
      } else {
        current = apply_at_depth(current, cursor, selector, path);
      }
      continue;  // an integer removes the dimension; the cursor stays put
    }

    if (std::holds_alternative<RangeSelector>(selector)) {
      if (cursor == 0) {
        const auto& range = std::get<RangeSelector>(selector);
        auto positions = range_positions(current->length(), range, path);
        current = carry(current, positions);
      } else {
        current = apply_at_depth(current, cursor, selector, path);
      }
      cursor++;
      continue;
    }

    if (const auto* flat = std::get_if<FlatIndexSelector>(&selector)) {
      if (cursor != 0) {
        throw error(errc::too_many_selectors,
                    "flat index selectors apply at the outermost dimension only (" +
                        path + ")");
      }
      if (array_selector_used) {
        throw error(errc::too_many_selectors,
                    "at most one flat index or mask selector per slice (" + path + ")");
      }
      array_selector_used = true;
      std::vector<std::int64_t> positions(flat->indices.size());
      rc_kernel_status status =
          rc_normalize_indices(positions.data(), flat->indices.data(),
                               static_cast<std::int64_t>(flat->indices.size()),
                               current->length());
      if (status.code != 0) {
        out_of_range(flat->indices[static_cast<std::size_t>(status.position)],
                     current->length(), path);
      }
      current = carry(current, positions);
      cursor++;
      continue;
    }

    if (const auto* mask = std::get_if<FlatMaskSelector>(&selector)) {
      if (cursor != 0) {
        throw error(errc::too_many_selectors,
                    "flat mask selectors apply at the outermost dimension only (" +
                        path + ")");
      }
      if (array_selector_used) {
        throw error(errc::too_many_selectors,
                    "at most one flat index or mask selector per slice (" + path + ")");
      }
      array_selector_used = true;
      if (static_cast<std::int64_t>(mask->mask.size()) != current->length()) {
        throw error(errc::mask_length_mismatch,
                    "mask length mismatch: expected " +
                        std::to_string(current->length()) + ", got " +
                        std::to_string(mask->mask.size()) + " (" + path + ")");
      }
      std::int64_t selected = 0;
      rc_nonzero_count(&selected, mask->mask.data(),
                       static_cast<std::int64_t>(mask->mask.size()));
      std::vector<std::int64_t> positions(static_cast<std::size_t>(selected));
      rc_nonzero(positions.data(), mask->mask.data(),
                 static_cast<std::int64_t>(mask->mask.size()));
      current = carry(current, positions);
      cursor++;
      continue;
    }

    const bool is_mask = std::holds_alternative<JaggedMaskSelector>(selector);
    const value& lists = is_mask ? std::get<JaggedMaskSelector>(selector).lists
                                 : std::get<JaggedIndexSelector>(selector).lists;
    if (cursor != 0) {
      throw error(errc::too_many_selectors,
                  "jagged selectors apply at the outermost dimension only (" + path + ")");
    }
    current = apply_jagged(current, lists, is_mask, path);
    cursor++;
  }

  return {std::move(current), scalar};
}

std::variant<NodePtr, value> scalar_or_layout(const GetitemResult& result) {
  if (!result.scalar) {
    return result.node;
  }
  return value_at(*result.node, 0);
}

}  // namespace ragcol
