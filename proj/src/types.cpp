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

#include "ragcol/types.hpp"

#include "ragcol/errors.hpp"

namespace ragcol {

struct ArrayType::Repr {
  tag kind;
  std::string primitive_name;
  std::vector<ArrayType> children;  // var_list/option: 1; union: members
  std::vector<std::pair<std::string, ArrayType>> fields;
  std::optional<std::string> label;
};

ArrayType ArrayType::primitive(std::string name) {
  return ArrayType(std::make_shared<Repr>(Repr{tag::primitive, std::move(name), {}, {}, {}}));
}

ArrayType ArrayType::var_list(ArrayType item) {
  return ArrayType(std::make_shared<Repr>(Repr{tag::var_list, {}, {std::move(item)}, {}, {}}));
}

ArrayType ArrayType::record(std::vector<std::pair<std::string, ArrayType>> fields,
                            std::optional<std::string> label) {
  return ArrayType(std::make_shared<Repr>(
      Repr{tag::record, {}, {}, std::move(fields), std::move(label)}));
}

ArrayType ArrayType::union_of(std::vector<ArrayType> members) {
  return ArrayType(std::make_shared<Repr>(Repr{tag::union_type, {}, std::move(members), {}, {}}));
}

ArrayType ArrayType::option(ArrayType item) {
  if (item.kind() == tag::option) return item;
  return ArrayType(std::make_shared<Repr>(Repr{tag::option, {}, {std::move(item)}, {}, {}}));
}

ArrayType ArrayType::unknown() {
  static const ArrayType instance(std::make_shared<Repr>(Repr{tag::unknown, {}, {}, {}, {}}));
  return instance;
}

ArrayType ArrayType::string() {
  static const ArrayType instance(std::make_shared<Repr>(Repr{tag::string, {}, {}, {}, {}}));
  return instance;
}

ArrayType::tag ArrayType::kind() const noexcept { return repr_->kind; }

const std::string& ArrayType::primitive_name() const { return repr_->primitive_name; }

const ArrayType& ArrayType::item() const { return repr_->children.front(); }

const std::vector<std::pair<std::string, ArrayType>>& ArrayType::fields() const {
  return repr_->fields;
}

const std::optional<std::string>& ArrayType::label() const { return repr_->label; }

const std::vector<ArrayType>& ArrayType::members() const { return repr_->children; }

bool ArrayType::operator==(const ArrayType& other) const {
  if (repr_ == other.repr_) return true;
  if (repr_->kind != other.repr_->kind) return false;
  switch (repr_->kind) {
    case tag::primitive:
      return repr_->primitive_name == other.repr_->primitive_name;
    case tag::var_list:
    case tag::option:
    case tag::union_type:
      return repr_->children == other.repr_->children;
    case tag::record:
      return repr_->fields == other.repr_->fields && repr_->label == other.repr_->label;
    case tag::unknown:
    case tag::string:
      return true;
  }
  return false;
}

std::string ArrayType::to_string() const {
  switch (repr_->kind) {
    case tag::primitive:
      return repr_->primitive_name;
    case tag::var_list:
      return "var * " + item().to_string();
    case tag::record: {
      if (repr_->label) return *repr_->label;
      std::string out = "{";
      for (std::size_t i = 0; i < repr_->fields.size(); i++) {
        if (i > 0) out += ", ";
        out += "\"" + repr_->fields[i].first + "\": " + repr_->fields[i].second.to_string();
      }
      return out + "}";
    }
    case tag::union_type: {
      std::string out = "union[";
      for (std::size_t i = 0; i < repr_->children.size(); i++) {
        if (i > 0) out += ", ";
        out += repr_->children[i].to_string();
      }
      return out + "]";
    }
    case tag::option:
      return "?" + item().to_string();
    case tag::unknown:
      return "unknown";
    case tag::string:
      return "string";
  }
  return "unknown";
}

ArrayType type_of(const NodePtr& node) {
  switch (node->kind()) {
    case node_kind::numeric: {
      const auto& leaf = static_cast<const NumericArray&>(*node);
      switch (leaf.buffer().type()) {
        case dtype::bool8:
          return ArrayType::primitive("bool");
        case dtype::uint8:
          return ArrayType::primitive("uint8");
        case dtype::int64:
          return ArrayType::primitive("int64");
        case dtype::float64:
          return ArrayType::primitive("float64");
        case dtype::int8:
          break;  // unreachable: rejected at construction
      }
      return ArrayType::unknown();
    }
    case node_kind::list_offset: {
      const auto& list = static_cast<const ListOffsetArray&>(*node);
      if (list.is_string()) return ArrayType::string();
      return ArrayType::var_list(type_of(list.content()));
    }
    case node_kind::record: {
      const auto& record = static_cast<const RecordArray&>(*node);
      std::vector<std::pair<std::string, ArrayType>> fields;
      fields.reserve(record.names().size());
      for (std::size_t i = 0; i < record.names().size(); i++) {
        fields.emplace_back(record.names()[i], type_of(record.contents()[i]));
      }
      std::optional<std::string> label;
      if (const auto* v = record.parameters().get("__str__");
          v != nullptr && v->is_string()) {
        label = v->get<std::string>();
      }
      return ArrayType::record(std::move(fields), std::move(label));
    }
    case node_kind::union_tagged: {
      const auto& u = static_cast<const UnionArray&>(*node);
      std::vector<ArrayType> members;
      members.reserve(u.contents().size());
      for (const auto& content : u.contents()) {
        ArrayType t = type_of(content);
        if (t.kind() == ArrayType::tag::union_type) {
          // splice directly nested unions into the parent
          for (const auto& m : t.members()) members.push_back(m);
        } else {
          members.push_back(std::move(t));
        }
      }
      return ArrayType::union_of(std::move(members));
    }
    case node_kind::indexed_option: {
      const auto& option = static_cast<const IndexedOptionArray&>(*node);
      return ArrayType::option(type_of(option.content()));
    }
    case node_kind::empty:
      return ArrayType::unknown();
  }
  return ArrayType::unknown();
}

std::string render(std::int64_t length, const ArrayType& type) {
  return std::to_string(length) + " * " + type.to_string();
}

}  // namespace ragcol
