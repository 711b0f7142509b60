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

#include "ragcol/slice_expr.hpp"

#include <cctype>
#include <charconv>

#include "ragcol/errors.hpp"

namespace ragcol {

namespace {

[[noreturn]] void bad_expression(const std::string& message) {
  throw error(errc::expression_error, "slice expression: " + message);
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits on commas at bracket/quote depth zero.
std::vector<std::string_view> split_terms(std::string_view text) {
  std::vector<std::string_view> terms;
  int depth = 0;
  char quote = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); i++) {
    char c = text[i];
    if (quote != 0) {
      if (c == '\\') {
        i++;
      } else if (c == quote) {
        quote = 0;
      }
      continue;
    }
    if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '[') {
      depth++;
    } else if (c == ']') {
      depth--;
      if (depth < 0) bad_expression("unbalanced ']'");
    } else if (c == ',' && depth == 0) {
      terms.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) bad_expression("unbalanced '['");
  if (quote != 0) bad_expression("unterminated quote");
  terms.push_back(text.substr(start));
  return terms;
}

std::int64_t parse_integer(std::string_view s) {
  s = strip(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    bad_expression("'" + std::string(s) + "' is not an integer");
  }
  return v;
}

Selector parse_range(std::string_view term) {
  RangeSelector range;
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= term.size(); i++) {
    if (i == term.size() || term[i] == ':') {
      parts.push_back(term.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() > 3) bad_expression("too many ':' in range");
  if (!strip(parts[0]).empty()) range.start = parse_integer(parts[0]);
  if (parts.size() > 1 && !strip(parts[1]).empty()) range.stop = parse_integer(parts[1]);
  if (parts.size() > 2 && !strip(parts[2]).empty()) range.step = parse_integer(parts[2]);
  if (range.step == 0) bad_expression("range step must not be zero");
  return range;
}

// Classifies a JSON array term: flat ints, flat bools, or jagged by leaves.
Selector parse_array_term(std::string_view term) {
  value parsed;
  try {
    parsed = value::parse(term);
  } catch (const nlohmann::json::parse_error& ex) {
    bad_expression(std::string("malformed array: ") + ex.what());
  }
  if (!parsed.is_array()) bad_expression("expected an array");

  bool nested = false;
  bool flat = false;
  bool booleans = false;
  bool integers = false;
  const auto classify = [&](const value& item, const auto& self) -> void {
    if (item.is_array()) {
      for (const auto& inner : item) self(inner, self);
    } else if (item.is_boolean()) {
      booleans = true;
    } else if (item.is_number_integer() || item.is_number_unsigned()) {
      integers = true;
    } else {
      bad_expression("array selectors hold integers or booleans only");
    }
  };
  for (const auto& item : parsed) {
    if (item.is_array()) {
      nested = true;
      classify(item, classify);
    } else {
      flat = true;
      classify(item, classify);
    }
  }
  if (nested && flat) bad_expression("array selector mixes values and sublists");
  if (booleans && integers) bad_expression("array selector mixes integers and booleans");

  if (nested) {
    if (booleans) return JaggedMaskSelector{std::move(parsed)};
    return JaggedIndexSelector{std::move(parsed)};
  }
  if (booleans) {
    FlatMaskSelector mask;
    mask.mask.reserve(parsed.size());
    for (const auto& item : parsed) mask.mask.push_back(item.get<bool>() ? 1 : 0);
    return mask;
  }
  FlatIndexSelector index;
  index.indices.reserve(parsed.size());
  for (const auto& item : parsed) index.indices.push_back(item.get<std::int64_t>());
  return index;
}

Selector parse_term(std::string_view term) {
  term = strip(term);
  if (term.empty()) bad_expression("empty selector term");
  char first = term.front();
  if (first == '"' || first == '\'') {
    if (term.size() < 2 || term.back() != first) bad_expression("unterminated quote");
    std::string name;
    for (std::size_t i = 1; i + 1 < term.size(); i++) {
      if (term[i] == '\\' && i + 2 < term.size()) i++;
      name += term[i];
    }
    return FieldSelector{std::move(name)};
  }
  if (first == '[') {
    return parse_array_term(term);
  }
  if (term.find(':') != std::string_view::npos) {
    return parse_range(term);
  }
  return AtSelector{parse_integer(term)};
}

}  // namespace

std::vector<Selector> parse_slice_expression(std::string_view text) {
  std::vector<Selector> selectors;
  if (strip(text).empty()) {
    return selectors;
  }
  for (std::string_view term : split_terms(text)) {
    selectors.push_back(parse_term(term));
  }
  return selectors;
}

}  // namespace ragcol
