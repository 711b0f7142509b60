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

#include "ragcol/jsonio.hpp"

#include <charconv>
#include <cstring>
#include <limits>
#include <sstream>

#include "ragcol/builder.hpp"
#include "ragcol/errors.hpp"
#include "ragcol/kernels.h"

namespace ragcol {

namespace {

constexpr auto kInt64Max =
    static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());

bool lexically_real(std::string_view token) {
  return token.find_first_of(".eE") != std::string_view::npos;
}

// SAX handler driving a Builder one event to one method call. base_depth 1
// consumes a mandatory top-level array whose elements become entries;
// base_depth 0 treats the whole document as a single entry (NDJSON lines).
class BuilderSax : public nlohmann::json_sax<nlohmann::json> {
 public:
  BuilderSax(Builder& builder, std::int64_t depth_limit, int base_depth)
      : builder_(builder), depth_limit_(depth_limit), base_depth_(base_depth) {}

  bool null() override {
    require_value();
    builder_.null_();
    return true;
  }

  bool boolean(bool v) override {
    require_value();
    builder_.boolean(v);
    return true;
  }

  bool number_integer(number_integer_t v) override {
    require_value();
    builder_.integer(v);
    return true;
  }

  bool number_unsigned(number_unsigned_t v) override {
    require_value();
    if (v > kInt64Max) {
      throw error(errc::integer_overflow,
                  "integer literal outside 64-bit signed range");
    }
    builder_.integer(static_cast<std::int64_t>(v));
    return true;
  }

  bool number_float(number_float_t v, const string_t& raw) override {
    require_value();
    if (!lexically_real(raw)) {
      // the lexer fell back to floating point on an integer-looking literal
      throw error(errc::integer_overflow,
                  "integer literal outside 64-bit signed range");
    }
    builder_.real(v);
    return true;
  }

  bool string(string_t& v) override {
    require_value();
    builder_.string_(v);
    return true;
  }

  bool binary(binary_t&) override {
    throw error(errc::unsupported_value, "binary values cannot be ingested");
  }

  bool start_array(std::size_t) override {
    if (depth_ == 0 && base_depth_ == 1) {
      depth_ = 1;
      return true;  // the top-level array itself; its elements are entries
    }
    enter_container();
    builder_.begin_list();
    return true;
  }

  bool end_array() override {
    depth_--;
    if (depth_ == 0 && base_depth_ == 1) {
      return true;
    }
    builder_.end_list();
    return true;
  }

  bool start_object(std::size_t) override {
    require_value();
    enter_container();
    builder_.begin_record();
    return true;
  }

  bool key(string_t& v) override {
    builder_.field(v);
    return true;
  }

  bool end_object() override {
    depth_--;
    builder_.end_record();
    return true;
  }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    // the lexer's position is one past the offending byte
    auto offset = static_cast<std::int64_t>(position) - 1;
    throw error(errc::parse_error,
                "parse error at offset " + std::to_string(offset) + ": " + ex.what(),
                offset);
  }

 private:
  void require_value() const {
    if (depth_ == 0 && base_depth_ == 1) {
      throw error(errc::parse_error, "top-level value must be an array");
    }
  }

  void enter_container() {
    if (++depth_ > depth_limit_) {
      throw error(errc::depth_limit_exceeded,
                  "nesting deeper than " + std::to_string(depth_limit_) + " levels");
    }
  }

  Builder& builder_;
  std::int64_t depth_limit_;
  int base_depth_;
  std::int64_t depth_ = 0;
};

NodePtr from_json_ndjson(std::istream& input, const JsonOptions& options) {
  Builder builder;
  std::string line;
  while (std::getline(input, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    BuilderSax sax(builder, options.depth_limit, 0);
    nlohmann::json::sax_parse(line, &sax);
  }
  return builder.snapshot();
}

// --- specialized numbers-only reader ---

// Buffered byte scanner over an istream (or a whole string): parsing works
// directly in the buffer and a refill keeps the unconsumed tail, so a token
// never needs reassembly and each input byte is visited a bounded number of
// times.
class ByteScanner {
 public:
  explicit ByteScanner(std::istream& input) : input_(&input) {
    buffer_.resize(kBufferSize);
    refill();
  }

  explicit ByteScanner(std::string_view text) : text_(text) {
    end_ = text.size();
    eof_ = true;
  }

  bool at_end() {
    if (pos_ < end_) return false;
    if (eof_) return true;
    refill();
    return pos_ >= end_;
  }

  // Undefined when at_end(); callers check first.
  char peek() const { return data()[pos_]; }
  void advance() { pos_++; }

  std::int64_t offset() const { return consumed_ + static_cast<std::int64_t>(pos_); }

  // Makes sure at least `want` bytes are buffered past the cursor, short of
  // end of input. Returns the available span.
  std::string_view window(std::size_t want) {
    if (end_ - pos_ < want && !eof_) {
      refill();
    }
    return {data() + pos_, end_ - pos_};
  }

  void skip(std::size_t n) { pos_ += n; }

 private:
  static constexpr std::size_t kBufferSize = 1 << 20;

  const char* data() const { return input_ != nullptr ? buffer_.data() : text_.data(); }

  void refill() {
    // keep the unconsumed tail at the front
    std::size_t tail = end_ - pos_;
    if (tail > 0 && pos_ > 0) {
      std::memmove(buffer_.data(), buffer_.data() + pos_, tail);
    }
    consumed_ += static_cast<std::int64_t>(pos_);
    pos_ = 0;
    end_ = tail;
    input_->read(buffer_.data() + end_,
                 static_cast<std::streamsize>(buffer_.size() - end_));
    end_ += static_cast<std::size_t>(input_->gcount());
    eof_ = end_ < buffer_.size();
  }

  std::istream* input_ = nullptr;
  std::string buffer_;
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
  std::int64_t consumed_ = 0;
  bool eof_ = false;
};

class NumbersReader {
 public:
  NumbersReader(std::int64_t depth, ByteScanner scanner)
      : depth_(depth), scanner_(std::move(scanner)) {
    if (depth_ < 1) {
      throw error(errc::unsupported_value, "numbers depth must be at least 1");
    }
    offsets_.resize(static_cast<std::size_t>(depth_ - 1), {0});
  }

  NodePtr read() {
    skip_whitespace();
    if (scanner_.at_end() || scanner_.peek() != '[') {
      throw parse_fail("input must start with '['");
    }
    scanner_.advance();
    level_ = 1;
    skip_whitespace();
    if (!scanner_.at_end() && scanner_.peek() == ']') {
      scanner_.advance();
      level_ = 0;
      finish();
      return snapshot();  // empty top-level array
    }
    bool expect_value = true;
    while (true) {
      skip_whitespace();
      if (scanner_.at_end()) {
        throw parse_fail("unexpected end of input");
      }
      char c = scanner_.peek();
      if (expect_value) {
        if (c == '[') {
          if (level_ == depth_) {
            throw deviation("nesting deeper than the declared depth");
          }
          scanner_.advance();
          level_++;
          expect_value = true;
          // an immediately following ']' closes the empty list
          skip_whitespace();
          if (!scanner_.at_end() && scanner_.peek() == ']') {
            scanner_.advance();
            if (close_list()) return snapshot();
            expect_value = false;
          }
          continue;
        }
        if (c == '-' || (c >= '0' && c <= '9')) {
          if (level_ != depth_) {
            throw deviation("number above the declared leaf depth");
          }
          read_number();
          expect_value = false;
          continue;
        }
        if (c == '{' || c == '"' || c == 't' || c == 'f' || c == 'n') {
          throw deviation("non-number leaf");
        }
        throw parse_fail("expected a value");
      }
      if (c == ',') {
        scanner_.advance();
        expect_value = true;
        continue;
      }
      if (c == ']') {
        scanner_.advance();
        if (close_list()) return snapshot();
        expect_value = false;
        continue;
      }
      throw parse_fail("expected ',' or ']'");
    }
  }

 private:
  void skip_whitespace() {
    while (!scanner_.at_end()) {
      char c = scanner_.peek();
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') break;
      scanner_.advance();
    }
  }

  NodePtr snapshot() {
    NodePtr node;
    switch (leaf_) {
      case leaf_state::unknown:
        node = std::make_shared<EmptyArray>();
        break;
      case leaf_state::ints:
        node = std::make_shared<NumericArray>(Buffer::i64(std::move(ints_)));
        break;
      case leaf_state::reals:
        node = std::make_shared<NumericArray>(Buffer::f64(std::move(reals_)));
        break;
    }
    for (auto k = static_cast<std::ptrdiff_t>(offsets_.size()) - 1; k >= 0; k--) {
      node = std::make_shared<ListOffsetArray>(
          Buffer::i64(std::move(offsets_[static_cast<std::size_t>(k)])), node);
    }
    return node;
  }

  // Returns true when the top-level array closed.
  bool close_list() {
    level_--;
    if (level_ == 0) {
      finish();
      return true;
    }
    std::int64_t child_count =
        level_ == depth_ - 1
            ? leaf_count()
            : static_cast<std::int64_t>(offsets_[static_cast<std::size_t>(level_)].size()) - 1;
    offsets_[static_cast<std::size_t>(level_ - 1)].push_back(child_count);
    return false;
  }

  std::int64_t leaf_count() const {
    return leaf_ == leaf_state::reals ? static_cast<std::int64_t>(reals_.size())
                                      : static_cast<std::int64_t>(ints_.size());
  }

  void finish() {
    skip_whitespace();
    if (!scanner_.at_end()) {
      throw parse_fail("trailing content after the top-level array");
    }
  }

  void read_number() {
    std::string_view window = scanner_.window(kMaxNumber);
    std::size_t len = 0;
    bool real = false;
    while (len < window.size()) {
      char c = window[len];
      if ((c >= '0' && c <= '9') || c == '-' || c == '+') {
        len++;
      } else if (c == '.' || c == 'e' || c == 'E') {
        real = true;
        len++;
      } else {
        break;
      }
    }
    if (len >= kMaxNumber) {
      throw parse_fail("number literal too long");
    }
    if (real) {
      double v = 0;
      auto [ptr, ec] = std::from_chars(window.data(), window.data() + len, v);
      if (ec != std::errc() || ptr != window.data() + len) {
        throw parse_fail("malformed number");
      }
      push_real(v);
    } else {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(window.data(), window.data() + len, v);
      if (ec == std::errc::result_out_of_range) {
        throw error(errc::integer_overflow,
                    "integer literal outside 64-bit signed range");
      }
      if (ec != std::errc() || ptr != window.data() + len) {
        throw parse_fail("malformed number");
      }
      push_int(v);
    }
    scanner_.skip(len);
  }

  void push_int(std::int64_t v) {
    if (leaf_ == leaf_state::reals) {
      reals_.push_back(static_cast<double>(v));
    } else {
      leaf_ = leaf_state::ints;
      ints_.push_back(v);
    }
  }

  void push_real(double v) {
    if (leaf_ != leaf_state::reals) {
      // one-shot widening of everything accumulated so far
      reals_.resize(ints_.size());
      rc_int64_to_float64(reals_.data(), ints_.data(),
                          static_cast<std::int64_t>(ints_.size()));
      ints_.clear();
      leaf_ = leaf_state::reals;
    }
    reals_.push_back(v);
  }

  error parse_fail(const std::string& message) {
    std::int64_t offset = scanner_.offset();
    return error(errc::parse_error,
                 "parse error at offset " + std::to_string(offset) + ": " + message,
                 offset);
  }

  error deviation(const std::string& message) {
    std::int64_t offset = scanner_.offset();
    return error(errc::structure_deviation,
                 "structure deviation at offset " + std::to_string(offset) + ": " +
                     message,
                 offset);
  }

  static constexpr std::size_t kMaxNumber = 512;

  enum class leaf_state { unknown, ints, reals };

  std::int64_t depth_;
  ByteScanner scanner_;
  std::int64_t level_ = 0;
  std::vector<std::vector<std::int64_t>> offsets_;
  std::vector<std::int64_t> ints_;
  std::vector<double> reals_;
  leaf_state leaf_ = leaf_state::unknown;
};

NodePtr read_numbers(std::int64_t depth, ByteScanner scanner) {
  NumbersReader reader(depth, std::move(scanner));
  return reader.read();
}

}  // namespace

NodePtr from_json(std::string_view text, const JsonOptions& options) {
  if (options.ndjson) {
    std::istringstream stream{std::string(text)};
    return from_json_ndjson(stream, options);
  }
  Builder builder;
  BuilderSax sax(builder, options.depth_limit, 1);
  nlohmann::json::sax_parse(text.begin(), text.end(), &sax);
  return builder.snapshot();
}

NodePtr from_json(std::istream& input, const JsonOptions& options) {
  if (options.ndjson) {
    return from_json_ndjson(input, options);
  }
  Builder builder;
  BuilderSax sax(builder, options.depth_limit, 1);
  nlohmann::json::sax_parse(input, &sax);
  return builder.snapshot();
}

NodePtr from_json_numbers(std::string_view text, std::int64_t depth) {
  return read_numbers(depth, ByteScanner(text));
}

NodePtr from_json_numbers(std::istream& input, std::int64_t depth) {
  return read_numbers(depth, ByteScanner(input));
}

std::string to_json(const NodePtr& node) {
  return to_values(node).dump();
}

}  // namespace ragcol
