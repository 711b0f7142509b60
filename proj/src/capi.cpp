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

#include "ragcol/ragcol.h"

#include <cstring>
#include <fstream>
#include <string>

#include "ragcol/builder.hpp"
#include "ragcol/errors.hpp"
#include "ragcol/jsonio.hpp"
#include "ragcol/slice_expr.hpp"
#include "ragcol/slicing.hpp"
#include "ragcol/storage.hpp"
#include "ragcol/types.hpp"

struct rc_array {
  ragcol::NodePtr node;
};

struct rc_builder {
  ragcol::Builder builder;
};

namespace {

thread_local std::string tls_error_message;
thread_local std::int64_t tls_error_offset = -1;

rc_status status_of(ragcol::errc code) {
  using ragcol::errc;
  switch (code) {
    case errc::parse_error:
      return RC_ERR_PARSE;
    case errc::depth_limit_exceeded:
      return RC_ERR_DEPTH_LIMIT;
    case errc::integer_overflow:
      return RC_ERR_INT_OVERFLOW;
    case errc::structure_deviation:
      return RC_ERR_STRUCTURE_DEVIATION;
    case errc::index_out_of_range:
    case errc::field_not_found:
    case errc::no_record:
    case errc::mask_length_mismatch:
    case errc::jagged_structure_mismatch:
    case errc::too_many_selectors:
      return RC_ERR_SLICE;
    case errc::fill_state_error:
      return RC_ERR_FILL_STATE;
    case errc::duplicate_field:
      return RC_ERR_DUPLICATE_FIELD;
    case errc::unsupported_value:
      return RC_ERR_UNSUPPORTED_VALUE;
    case errc::unknown_op:
    case errc::non_numeric_leaf:
    case errc::structure_mismatch:
      return RC_ERR_NUMERIC_OP;
    case errc::io_error:
      return RC_ERR_IO;
    case errc::format_error:
      return RC_ERR_FORMAT;
    case errc::structure_error:
      return RC_ERR_STRUCTURE;
    case errc::encoding_error:
      return RC_ERR_ENCODING;
    case errc::expression_error:
      return RC_ERR_EXPRESSION;
  }
  return RC_ERR_INTERNAL;
}

// Runs the body, converting exceptions into status codes and the
// thread-local diagnostic.
template <class Fn>
rc_status guarded(Fn&& fn) {
  try {
    tls_error_message.clear();
    tls_error_offset = -1;
    fn();
    return RC_OK;
  } catch (const ragcol::error& ex) {
    tls_error_message = ex.what();
    tls_error_offset = ex.offset();
    return status_of(ex.code());
  } catch (const std::exception& ex) {
    tls_error_message = ex.what();
    tls_error_offset = -1;
    return RC_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(::operator new(text.size() + 1));
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::ifstream open_input(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ragcol::error(ragcol::errc::io_error,
                        "cannot open " + std::string(path));
  }
  return in;
}

ragcol::JsonOptions json_options(int ndjson, std::int64_t depth_limit) {
  ragcol::JsonOptions options;
  options.ndjson = ndjson != 0;
  if (depth_limit > 0) options.depth_limit = depth_limit;
  return options;
}

}  // namespace

extern "C" {

const char* rc_error_message(void) { return tls_error_message.c_str(); }

int64_t rc_error_offset(void) { return tls_error_offset; }

void rc_string_free(char* text) { ::operator delete(text); }

void rc_array_free(rc_array* array) { delete array; }

rc_status rc_array_from_json(rc_array** out, const char* text, size_t length,
                             int ndjson, int64_t depth_limit) {
  return guarded([&] {
    *out = new rc_array{
        ragcol::from_json({text, length}, json_options(ndjson, depth_limit))};
  });
}

rc_status rc_array_from_json_file(rc_array** out, const char* path, int ndjson,
                                  int64_t depth_limit) {
  return guarded([&] {
    std::ifstream in = open_input(path);
    *out = new rc_array{ragcol::from_json(in, json_options(ndjson, depth_limit))};
  });
}

rc_status rc_array_from_json_numbers(rc_array** out, const char* text,
                                     size_t length, int64_t depth) {
  return guarded([&] {
    *out = new rc_array{ragcol::from_json_numbers({text, length}, depth)};
  });
}

rc_status rc_array_from_json_numbers_file(rc_array** out, const char* path,
                                          int64_t depth) {
  return guarded([&] {
    std::ifstream in = open_input(path);
    *out = new rc_array{ragcol::from_json_numbers(in, depth)};
  });
}

int64_t rc_array_length(const rc_array* array) { return array->node->length(); }

rc_status rc_array_type(const rc_array* array, char** out_text) {
  return guarded([&] {
    *out_text = copy_string(
        ragcol::render(array->node->length(), ragcol::type_of(array->node)));
  });
}

rc_status rc_array_to_json(const rc_array* array, char** out_text) {
  return guarded([&] { *out_text = copy_string(ragcol::to_json(array->node)); });
}

rc_status rc_array_validate(const rc_array* array) {
  return guarded([&] {
    if (auto issue = ragcol::validate(array->node)) {
      throw ragcol::error(ragcol::errc::structure_error,
                          issue->message + " at root" + issue->path);
    }
  });
}

rc_status rc_array_getitem(const rc_array* array, const char* expression,
                           rc_array** out_array, char** out_scalar_json) {
  return guarded([&] {
    *out_array = nullptr;
    *out_scalar_json = nullptr;
    auto selectors = ragcol::parse_slice_expression(expression);
    auto result = ragcol::getitem(array->node, selectors);
    auto either = ragcol::scalar_or_layout(result);
    if (std::holds_alternative<ragcol::NodePtr>(either)) {
      *out_array = new rc_array{std::get<ragcol::NodePtr>(either)};
    } else {
      *out_scalar_json = copy_string(std::get<ragcol::value>(either).dump());
    }
  });
}

rc_status rc_array_write(const rc_array* array, const char* directory) {
  return guarded([&] { ragcol::write(array->node, directory); });
}

rc_status rc_array_read(rc_array** out, const char* directory) {
  return guarded([&] { *out = new rc_array{ragcol::read(directory)}; });
}

rc_builder* rc_builder_new(void) { return new rc_builder{}; }

void rc_builder_free(rc_builder* builder) { delete builder; }

rc_status rc_builder_null(rc_builder* builder) {
  return guarded([&] { builder->builder.null_(); });
}

rc_status rc_builder_boolean(rc_builder* builder, int value) {
  return guarded([&] { builder->builder.boolean(value != 0); });
}

rc_status rc_builder_integer(rc_builder* builder, int64_t value) {
  return guarded([&] { builder->builder.integer(value); });
}

rc_status rc_builder_real(rc_builder* builder, double value) {
  return guarded([&] { builder->builder.real(value); });
}

rc_status rc_builder_string(rc_builder* builder, const char* text, size_t length) {
  return guarded([&] { builder->builder.string_({text, length}); });
}

rc_status rc_builder_begin_list(rc_builder* builder) {
  return guarded([&] { builder->builder.begin_list(); });
}

rc_status rc_builder_end_list(rc_builder* builder) {
  return guarded([&] { builder->builder.end_list(); });
}

rc_status rc_builder_begin_record(rc_builder* builder) {
  return guarded([&] { builder->builder.begin_record(); });
}

rc_status rc_builder_field(rc_builder* builder, const char* name) {
  return guarded([&] { builder->builder.field(name); });
}

rc_status rc_builder_end_record(rc_builder* builder) {
  return guarded([&] { builder->builder.end_record(); });
}

int64_t rc_builder_length(const rc_builder* builder) {
  return builder->builder.length();
}

rc_status rc_builder_snapshot(const rc_builder* builder, rc_array** out) {
  return guarded([&] { *out = new rc_array{builder->builder.snapshot()}; });
}

}  // extern "C"
