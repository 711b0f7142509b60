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

// Command-line front door: convert, type, slice, tojson, bench. Talks to the
// library exclusively through the C interface in ragcol/ragcol.h. Results go
// to stdout, diagnostics to stderr; exit codes are 0 (ok), 1 (parse or
// slicing errors), 2 (io/format errors), 3 (slice expression syntax).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ragcol/ragcol.h"

namespace {

struct ArrayHandle {
  rc_array* ptr = nullptr;
  ~ArrayHandle() { rc_array_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { rc_string_free(ptr); }
};

int exit_code_for(rc_status status) {
  if (status == RC_OK) return 0;
  if (status >= RC_ERR_PARSE && status <= RC_ERR_NUMERIC_OP) return 1;
  if (status == RC_ERR_EXPRESSION) return 3;
  return 2;
}

int report(rc_status status) {
  std::fprintf(stderr, "ragcol: %s\n", rc_error_message());
  return exit_code_for(status);
}

bool is_container(const std::string& path) {
  return std::filesystem::is_directory(path) &&
         std::filesystem::exists(std::filesystem::path(path) / "manifest.json");
}

// Loads a container directory or a JSON file.
rc_status load_input(const std::string& path, bool ndjson, ArrayHandle& out) {
  if (is_container(path)) {
    return rc_array_read(&out.ptr, path.c_str());
  }
  return rc_array_from_json_file(&out.ptr, path.c_str(), ndjson ? 1 : 0, 0);
}

int cmd_convert(const std::string& input, const std::string& output, bool ndjson,
                std::int64_t numbers_depth) {
  ArrayHandle array;
  rc_status status =
      numbers_depth > 0
          ? rc_array_from_json_numbers_file(&array.ptr, input.c_str(), numbers_depth)
          : rc_array_from_json_file(&array.ptr, input.c_str(), ndjson ? 1 : 0, 0);
  if (status != RC_OK) return report(status);
  status = rc_array_write(array.ptr, output.c_str());
  if (status != RC_OK) return report(status);
  StringHandle type;
  status = rc_array_type(array.ptr, &type.ptr);
  if (status != RC_OK) return report(status);
  std::printf("%s\n", type.ptr);
  return 0;
}

int cmd_type(const std::string& input, bool ndjson) {
  ArrayHandle array;
  if (load_input(input, ndjson, array) != RC_OK) {
    std::fprintf(stderr, "ragcol: %s\n", rc_error_message());
    return 2;  // unreadable or invalid input
  }
  StringHandle type;
  if (rc_array_type(array.ptr, &type.ptr) != RC_OK) {
    std::fprintf(stderr, "ragcol: %s\n", rc_error_message());
    return 2;
  }
  std::printf("%s\n", type.ptr);
  return 0;
}

int cmd_tojson(const std::string& input, bool ndjson) {
  ArrayHandle array;
  if (load_input(input, ndjson, array) != RC_OK) {
    std::fprintf(stderr, "ragcol: %s\n", rc_error_message());
    return 2;
  }
  StringHandle text;
  if (rc_array_to_json(array.ptr, &text.ptr) != RC_OK) {
    std::fprintf(stderr, "ragcol: %s\n", rc_error_message());
    return 2;
  }
  std::printf("%s\n", text.ptr);
  return 0;
}

int cmd_slice(const std::string& input, const std::string& expression, bool ndjson) {
  ArrayHandle array;
  rc_status status = load_input(input, ndjson, array);
  if (status != RC_OK) return report(status);
  ArrayHandle sliced;
  StringHandle scalar;
  status = rc_array_getitem(array.ptr, expression.c_str(), &sliced.ptr, &scalar.ptr);
  if (status != RC_OK) return report(status);
  if (scalar.ptr != nullptr) {
    std::printf("%s\n", scalar.ptr);
    return 0;
  }
  StringHandle text;
  status = rc_array_to_json(sliced.ptr, &text.ptr);
  if (status != RC_OK) return report(status);
  std::printf("%s\n", text.ptr);
  return 0;
}

int cmd_bench(const std::string& input, int repeat, std::int64_t numbers_depth,
              bool ndjson) {
  std::error_code ec;
  auto bytes = std::filesystem::file_size(input, ec);
  if (ec) {
    std::fprintf(stderr, "ragcol: cannot stat %s\n", input.c_str());
    return 2;
  }
  std::vector<double> rates;
  for (int run = 0; run < repeat; run++) {
    ArrayHandle array;
    auto begin = std::chrono::steady_clock::now();
    rc_status status =
        numbers_depth > 0
            ? rc_array_from_json_numbers_file(&array.ptr, input.c_str(), numbers_depth)
            : rc_array_from_json_file(&array.ptr, input.c_str(), ndjson ? 1 : 0, 0);
    auto end = std::chrono::steady_clock::now();
    if (status != RC_OK) return report(status);
    double seconds = std::chrono::duration<double>(end - begin).count();
    double mbps = static_cast<double>(bytes) / 1e6 / seconds;
    rates.push_back(mbps);
    std::printf("run_mbps=%.3f\n", mbps);
  }
  std::sort(rates.begin(), rates.end());
  double median = rates.size() % 2 == 1
                      ? rates[rates.size() / 2]
                      : 0.5 * (rates[rates.size() / 2 - 1] + rates[rates.size() / 2]);
  std::printf("median_mbps=%.3f\n", median);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ragged columnar array toolkit"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string expression;
  bool ndjson = false;
  std::int64_t numbers_depth = 0;
  int repeat = 5;

  auto* convert = app.add_subcommand("convert", "JSON file -> container directory");
  convert->add_option("input", input, "JSON (or NDJSON) file")->required();
  convert->add_option("output", output, "container directory to create")->required();
  auto* conv_ndjson = convert->add_flag("--ndjson", ndjson, "one JSON value per line");
  convert->add_option("--numbers-depth", numbers_depth,
                      "numbers-only fast path with this uniform nesting depth")
      ->excludes(conv_ndjson);

  auto* type = app.add_subcommand("type", "print an input's type");
  type->add_option("input", input, "container directory or JSON file")->required();
  type->add_flag("--ndjson", ndjson, "one JSON value per line");

  auto* tojson = app.add_subcommand("tojson", "print an input's values as JSON");
  tojson->add_option("input", input, "container directory or JSON file")->required();
  tojson->add_flag("--ndjson", ndjson, "one JSON value per line");

  auto* slice = app.add_subcommand("slice", "apply a slice expression");
  slice->add_option("input", input, "container directory or JSON file")->required();
  slice->add_option("expression", expression,
                    "e.g. '\"y\", [0, 2], :, 1:' (may be empty)")
      ->required();
  slice->add_flag("--ndjson", ndjson, "one JSON value per line");

  auto* bench = app.add_subcommand("bench", "measure conversion throughput");
  bench->add_option("input", input, "JSON file")->required();
  bench->add_option("--repeat", repeat, "number of runs")->check(CLI::PositiveNumber);
  bench->add_option("--numbers-depth", numbers_depth,
                    "benchmark the numbers-only fast path");
  bench->add_flag("--ndjson", ndjson, "one JSON value per line");

  CLI11_PARSE(app, argc, argv);

  if (convert->parsed()) return cmd_convert(input, output, ndjson, numbers_depth);
  if (type->parsed()) return cmd_type(input, ndjson);
  if (tojson->parsed()) return cmd_tojson(input, ndjson);
  if (slice->parsed()) return cmd_slice(input, expression, ndjson);
  if (bench->parsed()) return cmd_bench(input, repeat, numbers_depth, ndjson);
  return 0;
}
