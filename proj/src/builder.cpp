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

#include "ragcol/builder.hpp"

#include <limits>
#include <numeric>

#include "ragcol/errors.hpp"
#include "ragcol/kernels.h"

namespace ragcol {

namespace {

constexpr std::size_t kInitialCapacity = 1024;

[[noreturn]] void protocol_error(std::string expected, std::string got) {
  throw error(errc::fill_state_error,
              "expected " + std::move(expected) + ", got " + std::move(got));
}

enum class acc_kind {
  unknown,
  boolean,
  int64,
  float64,
  string,
  list,
  record,
  option,
  union_tagged,
};

struct Acc;
using AccPtr = std::unique_ptr<Acc>;

using Addresses = std::vector<std::pair<std::string, const void*>>;

struct Acc {
  virtual ~Acc() = default;
  virtual acc_kind kind() const noexcept = 0;
  virtual std::int64_t length() const noexcept = 0;
  virtual NodePtr snapshot() const = 0;
  virtual void addresses(const std::string& prefix, Addresses& out) const = 0;
};

template <class T>
std::vector<T> reserved() {
  std::vector<T> v;
  v.reserve(kInitialCapacity);
  return v;
}

struct UnknownAcc final : Acc {
  acc_kind kind() const noexcept override { return acc_kind::unknown; }
  std::int64_t length() const noexcept override { return 0; }
  NodePtr snapshot() const override { return std::make_shared<EmptyArray>(); }
  void addresses(const std::string&, Addresses&) const override {}
};

struct BoolAcc final : Acc {
  std::vector<std::uint8_t> values = reserved<std::uint8_t>();

  acc_kind kind() const noexcept override { return acc_kind::boolean; }
  std::int64_t length() const noexcept override {
    return static_cast<std::int64_t>(values.size());
  }
  NodePtr snapshot() const override {
    return std::make_shared<NumericArray>(Buffer::b8(values));
  }
  void addresses(const std::string& prefix, Addresses& out) const override {
    out.emplace_back(prefix + "bool", values.data());
  }
};

struct Int64Acc final : Acc {
  std::vector<std::int64_t> values = reserved<std::int64_t>();

  acc_kind kind() const noexcept override { return acc_kind::int64; }
  std::int64_t length() const noexcept override {
    return static_cast<std::int64_t>(values.size());
  }
  NodePtr snapshot() const override {
    return std::make_shared<NumericArray>(Buffer::i64(values));
  }
  void addresses(const std::string& prefix, Addresses& out) const override {
    out.emplace_back(prefix + "int64", values.data());
  }
};

struct Float64Acc final : Acc {
  std::vector<double> values = reserved<double>();

  acc_kind kind() const noexcept override { return acc_kind::float64; }
  std::int64_t length() const noexcept override {
    return static_cast<std::int64_t>(values.size());
  }
  NodePtr snapshot() const override {
    return std::make_shared<NumericArray>(Buffer::f64(values));
  }
  void addresses(const std::string& prefix, Addresses& out) const override {
    out.emplace_back(prefix + "float64", values.data());
  }
};

struct StringAcc final : Acc {
  std::vector<std::int64_t> offsets = {0};
  std::vector<std::uint8_t> bytes = reserved<std::uint8_t>();

  acc_kind kind() const noexcept override { return acc_kind::string; }
  std::int64_t length() const noexcept override {
    return static_cast<std::int64_t>(offsets.size()) - 1;
  }
  NodePtr snapshot() const override {
    return std::make_shared<ListOffsetArray>(
        Buffer::i64(offsets), std::make_shared<NumericArray>(Buffer::u8(bytes)),
        Parameters().with("__class__", "string"));
  }
  void addresses(const std::string& prefix, Addresses& out) const override {
    out.emplace_back(prefix + "string.offsets", offsets.data());
    out.emplace_back(prefix + "string.bytes", bytes.data());
  }
};

struct ListAcc final : Acc {
  std::vector<std::int64_t> offsets = {0};
  AccPtr content = std::make_unique<UnknownAcc>();

  acc_kind kind() const noexcept override { return acc_kind::list; }
  std::int64_t length() const noexcept override {
    return static_cast<std::int64_t>(offsets.size()) - 1;
  }
  void close() { offsets.push_back(content->length()); }
  NodePtr snapshot() const override {
    return std::make_shared<ListOffsetArray>(Buffer::i64(offsets), content->snapshot());
  }
  void addresses(const std::string& prefix, Addresses& out) const override {
    out.emplace_back(prefix + "list.offsets", offsets.data());
    content->addresses(prefix + "list.content.", out);
  }
};

struct RecordAcc final : Acc {
  std::vector<std::string> names;
  std::vector<AccPtr> contents;
  std::int64_t completed = 0;

  acc_kind kind() const noexcept override { return acc_kind::record; }
  std::int64_t length() const noexcept override { return completed; }
  NodePtr snapshot() const override {
    std::vector<NodePtr> snapshots;
    snapshots.reserve(contents.size());
    for (const auto& c : contents) snapshots.push_back(c->snapshot());
    return std::make_shared<RecordArray>(names, std::move(snapshots), completed);
  }
  void addresses(const std::string& prefix, Addresses& out) const override {
    for (std::size_t i = 0; i < names.size(); i++) {
      contents[i]->addresses(prefix + "record." + names[i] + ".", out);
    }
  }
};

struct OptionAcc final : Acc {
  std::vector<std::int64_t> index = reserved<std::int64_t>();
  AccPtr content = std::make_unique<UnknownAcc>();

  acc_kind kind() const noexcept override { return acc_kind::option; }
  std::int64_t length() const noexcept override {
    return static_cast<std::int64_t>(index.size());
  }
  NodePtr snapshot() const override {
    return std::make_shared<IndexedOptionArray>(Buffer::i64(index), content->snapshot());
  }
  void addresses(const std::string& prefix, Addresses& out) const override {
    out.emplace_back(prefix + "option.index", index.data());
    content->addresses(prefix + "option.content.", out);
  }
};

struct UnionAcc final : Acc {
  std::vector<std::int8_t> tags = reserved<std::int8_t>();
  std::vector<std::int64_t> index = reserved<std::int64_t>();
  std::vector<AccPtr> contents;

  acc_kind kind() const noexcept override { return acc_kind::union_tagged; }
  std::int64_t length() const noexcept override {
    return static_cast<std::int64_t>(tags.size());
  }
  NodePtr snapshot() const override {
    std::vector<NodePtr> snapshots;
    snapshots.reserve(contents.size());
    for (const auto& c : contents) snapshots.push_back(c->snapshot());
    return std::make_shared<UnionArray>(Buffer::i8(tags), Buffer::i64(index),
                                        std::move(snapshots));
  }
  void addresses(const std::string& prefix, Addresses& out) const override {
    out.emplace_back(prefix + "union.tags", tags.data());
    out.emplace_back(prefix + "union.index", index.data());
    for (std::size_t i = 0; i < contents.size(); i++) {
      contents[i]->addresses(prefix + "union." + std::to_string(i) + ".", out);
    }
  }
};

// The kind-class a union dispatches on: int64 and float64 are one class
// (they widen into each other), everything else is its own.
acc_kind kind_class(acc_kind k) noexcept {
  return k == acc_kind::int64 ? acc_kind::float64 : k;
}

// Wraps whatever the slot holds as variant 0 of a fresh union; the existing
// accumulator object moves in, so its buffers keep their addresses.
UnionAcc& promote_to_union(AccPtr& slot) {
  auto u = std::make_unique<UnionAcc>();
  std::int64_t len = slot->length();
  u->tags.assign(static_cast<std::size_t>(len), 0);
  u->index.resize(static_cast<std::size_t>(len));
  std::iota(u->index.begin(), u->index.end(), 0);
  u->contents.push_back(std::move(slot));
  auto& result = *u;
  slot = std::move(u);
  return result;
}

// Wraps whatever the slot holds in an option whose existing entries are all
// present.
OptionAcc& promote_to_option(AccPtr& slot) {
  auto opt = std::make_unique<OptionAcc>();
  std::int64_t len = slot->length();
  opt->index.resize(static_cast<std::size_t>(len));
  std::iota(opt->index.begin(), opt->index.end(), 0);
  opt->content = std::move(slot);
  auto& result = *opt;
  slot = std::move(opt);
  return result;
}

}  // namespace

struct Builder::Impl {
  AccPtr root = std::make_unique<UnknownAcc>();
  std::int64_t promotions = 0;

  struct Frame {
    enum class kind { top, list, record } kind;
    ListAcc* list = nullptr;
    RecordAcc* record = nullptr;
    std::ptrdiff_t field = -1;  // record frames: field awaiting its value
  };
  std::vector<Frame> stack = {{Frame::kind::top, nullptr, nullptr, -1}};

  // --- accumulator-level fills (navigate options and unions, promote) ---

  // One-time conversion of accumulated integers; the data-scaling copy runs
  // through the kernel suite.
  void promote_int_to_float(AccPtr& slot) {
    auto& ints = static_cast<Int64Acc&>(*slot);
    auto floats = std::make_unique<Float64Acc>();
    floats->values.resize(ints.values.size());
    rc_int64_to_float64(floats->values.data(), ints.values.data(),
                        static_cast<std::int64_t>(ints.values.size()));
    promotions++;
    slot = std::move(floats);
  }

  // Finds the union variant whose kind-class matches `want`, or appends a
  // fresh accumulator made by `make`. Returns the variant slot.
  AccPtr& union_variant(UnionAcc& u, acc_kind want, AccPtr (*make)()) {
    for (auto& c : u.contents) {
      if (kind_class(c->kind()) == kind_class(want)) return c;
    }
    u.contents.push_back(make());
    return u.contents.back();
  }

  void union_append(UnionAcc& u, AccPtr& variant, std::int64_t position) {
    std::ptrdiff_t tag = 0;
    for (std::size_t i = 0; i < u.contents.size(); i++) {
      if (u.contents[i].get() == variant.get()) tag = static_cast<std::ptrdiff_t>(i);
    }
    u.tags.push_back(static_cast<std::int8_t>(tag));
    u.index.push_back(position);
  }

  void fill_null(AccPtr& slot) {
    if (slot->kind() == acc_kind::option) {
      static_cast<OptionAcc&>(*slot).index.push_back(-1);
      return;
    }
    promote_to_option(slot).index.push_back(-1);
  }

  void fill_int(AccPtr& slot, std::int64_t v) {
    switch (slot->kind()) {
      case acc_kind::unknown:
        slot = std::make_unique<Int64Acc>();
        [[fallthrough]];
      case acc_kind::int64:
        static_cast<Int64Acc&>(*slot).values.push_back(v);
        return;
      case acc_kind::float64:
        static_cast<Float64Acc&>(*slot).values.push_back(static_cast<double>(v));
        return;
      case acc_kind::option: {
        auto& opt = static_cast<OptionAcc&>(*slot);
        std::int64_t pos = opt.content->length();
        fill_int(opt.content, v);
        opt.index.push_back(pos);
        return;
      }
      case acc_kind::union_tagged: {
        auto& u = static_cast<UnionAcc&>(*slot);
        AccPtr& variant = union_variant(u, acc_kind::int64,
                                        +[]() -> AccPtr { return std::make_unique<Int64Acc>(); });
        std::int64_t pos = variant->length();
        fill_int(variant, v);
        union_append(u, variant, pos);
        return;
      }
      default:
        promote_to_union(slot);
        fill_int(slot, v);
        return;
    }
  }

  void fill_real(AccPtr& slot, double v) {
    switch (slot->kind()) {
      case acc_kind::unknown:
        slot = std::make_unique<Float64Acc>();
        [[fallthrough]];
      case acc_kind::float64:
        static_cast<Float64Acc&>(*slot).values.push_back(v);
        return;
      case acc_kind::int64:
        promote_int_to_float(slot);
        static_cast<Float64Acc&>(*slot).values.push_back(v);
        return;
      case acc_kind::option: {
        auto& opt = static_cast<OptionAcc&>(*slot);
        std::int64_t pos = opt.content->length();
        fill_real(opt.content, v);
        opt.index.push_back(pos);
        return;
      }
      case acc_kind::union_tagged: {
        auto& u = static_cast<UnionAcc&>(*slot);
        AccPtr& variant = union_variant(u, acc_kind::float64,
                                        +[]() -> AccPtr { return std::make_unique<Float64Acc>(); });
        if (variant->kind() == acc_kind::int64) promote_int_to_float(variant);
        std::int64_t pos = variant->length();
        fill_real(variant, v);
        union_append(u, variant, pos);
        return;
      }
      default:
        promote_to_union(slot);
        fill_real(slot, v);
        return;
    }
  }

  void fill_bool(AccPtr& slot, bool v) {
    switch (slot->kind()) {
      case acc_kind::unknown:
        slot = std::make_unique<BoolAcc>();
        [[fallthrough]];
      case acc_kind::boolean:
        static_cast<BoolAcc&>(*slot).values.push_back(v ? 1 : 0);
        return;
      case acc_kind::option: {
        auto& opt = static_cast<OptionAcc&>(*slot);
        std::int64_t pos = opt.content->length();
        fill_bool(opt.content, v);
        opt.index.push_back(pos);
        return;
      }
      case acc_kind::union_tagged: {
        auto& u = static_cast<UnionAcc&>(*slot);
        AccPtr& variant = union_variant(u, acc_kind::boolean,
                                        +[]() -> AccPtr { return std::make_unique<BoolAcc>(); });
        std::int64_t pos = variant->length();
        fill_bool(variant, v);
        union_append(u, variant, pos);
        return;
      }
      default:
        promote_to_union(slot);
        fill_bool(slot, v);
        return;
    }
  }

  void fill_string(AccPtr& slot, std::string_view v) {
    switch (slot->kind()) {
      case acc_kind::unknown:
        slot = std::make_unique<StringAcc>();
        [[fallthrough]];
      case acc_kind::string: {
        auto& acc = static_cast<StringAcc&>(*slot);
        acc.bytes.insert(acc.bytes.end(), v.begin(), v.end());
        acc.offsets.push_back(static_cast<std::int64_t>(acc.bytes.size()));
        return;
      }
      case acc_kind::option: {
        auto& opt = static_cast<OptionAcc&>(*slot);
        std::int64_t pos = opt.content->length();
        fill_string(opt.content, v);
        opt.index.push_back(pos);
        return;
      }
      case acc_kind::union_tagged: {
        auto& u = static_cast<UnionAcc&>(*slot);
        AccPtr& variant = union_variant(u, acc_kind::string,
                                        +[]() -> AccPtr { return std::make_unique<StringAcc>(); });
        std::int64_t pos = variant->length();
        fill_string(variant, v);
        union_append(u, variant, pos);
        return;
      }
      default:
        promote_to_union(slot);
        fill_string(slot, v);
        return;
    }
  }

  ListAcc& enter_list(AccPtr& slot) {
    switch (slot->kind()) {
      case acc_kind::unknown:
        slot = std::make_unique<ListAcc>();
        [[fallthrough]];
      case acc_kind::list:
        return static_cast<ListAcc&>(*slot);
      case acc_kind::option: {
        auto& opt = static_cast<OptionAcc&>(*slot);
        std::int64_t pos = opt.content->length();
        ListAcc& list = enter_list(opt.content);
        opt.index.push_back(pos);
        return list;
      }
      case acc_kind::union_tagged: {
        auto& u = static_cast<UnionAcc&>(*slot);
        AccPtr& variant = union_variant(u, acc_kind::list,
                                        +[]() -> AccPtr { return std::make_unique<ListAcc>(); });
        std::int64_t pos = variant->length();
        union_append(u, variant, pos);
        return static_cast<ListAcc&>(*variant);
      }
      default:
        promote_to_union(slot);
        return enter_list(slot);
    }
  }

  RecordAcc& enter_record(AccPtr& slot) {
    switch (slot->kind()) {
      case acc_kind::unknown:
        slot = std::make_unique<RecordAcc>();
        [[fallthrough]];
      case acc_kind::record:
        return static_cast<RecordAcc&>(*slot);
      case acc_kind::option: {
        auto& opt = static_cast<OptionAcc&>(*slot);
        std::int64_t pos = opt.content->length();
        RecordAcc& record = enter_record(opt.content);
        opt.index.push_back(pos);
        return record;
      }
      case acc_kind::union_tagged: {
        auto& u = static_cast<UnionAcc&>(*slot);
        AccPtr& variant = union_variant(u, acc_kind::record,
                                        +[]() -> AccPtr { return std::make_unique<RecordAcc>(); });
        std::int64_t pos = variant->length();
        union_append(u, variant, pos);
        return static_cast<RecordAcc&>(*variant);
      }
      default:
        promote_to_union(slot);
        return enter_record(slot);
    }
  }

  // --- fill-state machinery ---

  AccPtr& value_slot(const char* got) {
    Frame& top = stack.back();
    switch (top.kind) {
      case Frame::kind::top:
        return root;
      case Frame::kind::list:
        return top.list->content;
      case Frame::kind::record:
        if (top.field < 0) {
          protocol_error("a field name or end_record", got);
        }
        return top.record->contents[static_cast<std::size_t>(top.field)];
    }
    protocol_error("a fillable state", got);
  }

  // A composed or scalar value has been appended; a record frame awaiting
  // that value is satisfied.
  void value_completed() {
    Frame& top = stack.back();
    if (top.kind == Frame::kind::record) top.field = -1;
  }
};

Builder::Builder() : impl_(std::make_unique<Impl>()) {}
Builder::~Builder() = default;
Builder::Builder(Builder&&) noexcept = default;
Builder& Builder::operator=(Builder&&) noexcept = default;

void Builder::null_() {
  impl_->fill_null(impl_->value_slot("a null value"));
  impl_->value_completed();
}

void Builder::boolean(bool v) {
  impl_->fill_bool(impl_->value_slot("a boolean value"), v);
  impl_->value_completed();
}

void Builder::integer(std::int64_t v) {
  impl_->fill_int(impl_->value_slot("an integer value"), v);
  impl_->value_completed();
}

void Builder::real(double v) {
  impl_->fill_real(impl_->value_slot("a float value"), v);
  impl_->value_completed();
}

void Builder::string_(std::string_view v) {
  impl_->fill_string(impl_->value_slot("a string value"), v);
  impl_->value_completed();
}

void Builder::begin_list() {
  ListAcc& list = impl_->enter_list(impl_->value_slot("begin_list"));
  impl_->stack.push_back({Impl::Frame::kind::list, &list, nullptr, -1});
}

void Builder::end_list() {
  if (impl_->stack.back().kind != Impl::Frame::kind::list) {
    protocol_error("a value or begin_list before end_list", "end_list");
  }
  impl_->stack.back().list->close();
  impl_->stack.pop_back();
  impl_->value_completed();
}

void Builder::begin_record() {
  RecordAcc& record = impl_->enter_record(impl_->value_slot("begin_record"));
  impl_->stack.push_back({Impl::Frame::kind::record, nullptr, &record, -1});
}

void Builder::field(std::string_view name) {
  Impl::Frame& top = impl_->stack.back();
  if (top.kind != Impl::Frame::kind::record) {
    protocol_error("a record context for field names", "field \"" + std::string(name) + "\"");
  }
  if (top.field >= 0) {
    protocol_error("a value for field \"" + top.record->names[static_cast<std::size_t>(top.field)] + "\"",
                   "field \"" + std::string(name) + "\"");
  }
  RecordAcc& record = *top.record;
  for (std::size_t i = 0; i < record.names.size(); i++) {
    if (record.names[i] == name) {
      if (record.contents[i]->length() > record.completed) {
        throw error(errc::duplicate_field,
                    "field \"" + std::string(name) + "\" filled twice in one record");
      }
      top.field = static_cast<std::ptrdiff_t>(i);
      return;
    }
  }
  // first appearance of this field: back-fill earlier records as missing
  record.names.emplace_back(name);
  if (record.completed > 0) {
    auto opt = std::make_unique<OptionAcc>();
    opt->index.assign(static_cast<std::size_t>(record.completed), -1);
    record.contents.push_back(std::move(opt));
  } else {
    record.contents.push_back(std::make_unique<UnknownAcc>());
  }
  top.field = static_cast<std::ptrdiff_t>(record.names.size()) - 1;
}

void Builder::end_record() {
  Impl::Frame& top = impl_->stack.back();
  if (top.kind != Impl::Frame::kind::record) {
    protocol_error("a value or begin_record before end_record", "end_record");
  }
  if (top.field >= 0) {
    protocol_error("a value for field \"" + top.record->names[static_cast<std::size_t>(top.field)] + "\"",
                   "end_record");
  }
  RecordAcc& record = *top.record;
  for (std::size_t i = 0; i < record.contents.size(); i++) {
    if (record.contents[i]->length() == record.completed) {
      impl_->fill_null(record.contents[i]);  // field not filled in this record
    }
  }
  record.completed++;
  impl_->stack.pop_back();
  impl_->value_completed();
}

std::int64_t Builder::length() const noexcept { return impl_->root->length(); }

NodePtr Builder::snapshot() const {
  if (impl_->stack.size() != 1) {
    protocol_error("a balanced fill state for snapshot",
                   impl_->stack.back().kind == Impl::Frame::kind::list
                       ? "snapshot inside an open list"
                       : "snapshot inside an open record");
  }
  return impl_->root->snapshot();
}

std::int64_t Builder::promotion_count() const noexcept { return impl_->promotions; }

std::vector<std::pair<std::string, const void*>> Builder::buffer_addresses() const {
  Addresses out;
  impl_->root->addresses("", out);
  return out;
}

NodePtr from_values(const value& values) {
  if (!values.is_array()) {
    throw error(errc::unsupported_value, "top-level value must be a list");
  }
  Builder builder;
  const auto feed = [&builder](const value& v, const auto& self) -> void {
    switch (v.type()) {
      case value::value_t::null:
        builder.null_();
        return;
      case value::value_t::boolean:
        builder.boolean(v.get<bool>());
        return;
      case value::value_t::number_integer:
        builder.integer(v.get<std::int64_t>());
        return;
      case value::value_t::number_unsigned: {
        auto u = v.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
          throw error(errc::unsupported_value,
                      "integer value outside 64-bit signed range");
        }
        builder.integer(static_cast<std::int64_t>(u));
        return;
      }
      case value::value_t::number_float:
        builder.real(v.get<double>());
        return;
      case value::value_t::string:
        builder.string_(v.get_ref<const std::string&>());
        return;
      case value::value_t::array:
        builder.begin_list();
        for (const auto& item : v) self(item, self);
        builder.end_list();
        return;
      case value::value_t::object:
        builder.begin_record();
        for (auto it = v.begin(); it != v.end(); ++it) {
          builder.field(it.key());
          self(it.value(), self);
        }
        builder.end_record();
        return;
      default:
        throw error(errc::unsupported_value, "value kind cannot be ingested");
    }
  };
  for (const auto& item : values) {
    feed(item, feed);
  }
  return builder.snapshot();
}

}  // namespace ragcol
