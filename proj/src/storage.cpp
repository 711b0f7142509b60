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

#include "ragcol/storage.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "ragcol/errors.hpp"

namespace ragcol {

namespace {

namespace fs = std::filesystem;

static_assert(std::endian::native == std::endian::little,
              "buffer files are little-endian; add a byte-swapping path for "
              "big-endian hosts");

using manifest_json = nlohmann::ordered_json;

manifest_json parameters_to_json(const Parameters& params) {
  manifest_json out = manifest_json::object();
  for (const auto& [key, v] : params) {
    out[key] = v;
  }
  return out;
}

Parameters parameters_from_json(const manifest_json& object) {
  Parameters out;
  for (auto it = object.begin(); it != object.end(); ++it) {
    out = out.with(it.key(), it.value());
  }
  return out;
}

struct Writer {
  const fs::path& directory;
  int next_buffer = 0;

  std::string emit_buffer(const Buffer& buffer) {
    std::string id = "b" + std::to_string(next_buffer++);
    fs::path file = directory / (id + ".raw");
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw error(errc::io_error, "cannot create " + file.string());
    }
    out.write(static_cast<const char*>(buffer.data()),
              static_cast<std::streamsize>(buffer.byte_length()));
    if (!out) {
      throw error(errc::io_error, "cannot write " + file.string());
    }
    return id;
  }

  manifest_json describe(const NodePtr& node) {
    manifest_json out = manifest_json::object();
    switch (node->kind()) {
      case node_kind::numeric: {
        const auto& leaf = static_cast<const NumericArray&>(*node);
        out["kind"] = "numeric";
        out["dtype"] = dtype_name(leaf.buffer().type());
        out["length"] = leaf.length();
        out["buffer"] = emit_buffer(leaf.buffer());
        break;
      }
      case node_kind::list_offset: {
        const auto& list = static_cast<const ListOffsetArray&>(*node);
        out["kind"] = "listoffset";
        out["length"] = list.length();
        out["offsets"] = emit_buffer(list.offsets());
        add_parameters(out, node);
        out["content"] = describe(list.content());
        return out;
      }
      case node_kind::record: {
        const auto& record = static_cast<const RecordArray&>(*node);
        out["kind"] = "record";
        out["length"] = record.length();
        add_parameters(out, node);
        manifest_json fields = manifest_json::array();
        for (std::size_t i = 0; i < record.names().size(); i++) {
          manifest_json field = manifest_json::object();
          field["name"] = record.names()[i];
          field["content"] = describe(record.contents()[i]);
          fields.push_back(std::move(field));
        }
        out["fields"] = std::move(fields);
        return out;
      }
      case node_kind::union_tagged: {
        const auto& u = static_cast<const UnionArray&>(*node);
        out["kind"] = "union";
        out["length"] = u.length();
        out["tags"] = emit_buffer(u.tags());
        out["index"] = emit_buffer(u.index());
        add_parameters(out, node);
        manifest_json contents = manifest_json::array();
        for (const auto& content : u.contents()) {
          contents.push_back(describe(content));
        }
        out["contents"] = std::move(contents);
        return out;
      }
      case node_kind::indexed_option: {
        const auto& option = static_cast<const IndexedOptionArray&>(*node);
        out["kind"] = "indexedoption";
        out["length"] = option.length();
        out["index"] = emit_buffer(option.index());
        add_parameters(out, node);
        out["content"] = describe(option.content());
        return out;
      }
      case node_kind::empty: {
        out["kind"] = "empty";
        break;
      }
    }
    add_parameters(out, node);
    return out;
  }

  static void add_parameters(manifest_json& out, const NodePtr& node) {
    if (!node->parameters().empty() && !out.contains("parameters")) {
      out["parameters"] = parameters_to_json(node->parameters());
    }
  }
};

struct Reader {
  const fs::path& directory;

  Buffer load_buffer(const manifest_json& desc, const char* key, dtype t,
                     std::int64_t count) {
    if (!desc.contains(key) || !desc[key].is_string()) {
      throw error(errc::format_error,
                  "manifest node is missing buffer reference \"" + std::string(key) + "\"");
    }
    std::string id = desc[key].get<std::string>();
    fs::path file = directory / (id + ".raw");
    std::error_code ec;
    auto size = fs::file_size(file, ec);
    if (ec) {
      throw error(errc::format_error, "missing buffer " + id);
    }
    auto expected = static_cast<std::uintmax_t>(count) * dtype_width(t);
    if (size != expected) {
      throw error(errc::format_error,
                  "buffer " + id + " holds " + std::to_string(size) +
                      " bytes, expected " + std::to_string(expected));
    }
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
    std::ifstream in(file, std::ios::binary);
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(size));
    if (!in && size > 0) {
      throw error(errc::io_error, "cannot read " + file.string());
    }
    return Buffer::from_bytes(t, std::move(bytes));
  }

  static std::int64_t length_of(const manifest_json& desc) {
    if (!desc.contains("length") || !desc["length"].is_number_integer()) {
      throw error(errc::format_error, "manifest node is missing its length");
    }
    return desc["length"].get<std::int64_t>();
  }

  static Parameters parameters_of(const manifest_json& desc) {
    if (!desc.contains("parameters")) return {};
    if (!desc["parameters"].is_object()) {
      throw error(errc::format_error, "manifest parameters must be an object");
    }
    return parameters_from_json(desc["parameters"]);
  }

  NodePtr restore(const manifest_json& desc) {
    if (!desc.is_object() || !desc.contains("kind") || !desc["kind"].is_string()) {
      throw error(errc::format_error, "manifest node is missing its kind");
    }
    std::string kind = desc["kind"].get<std::string>();
    if (kind == "numeric") {
      dtype t;
      if (!desc.contains("dtype") || !desc["dtype"].is_string() ||
          !dtype_from_name(desc["dtype"].get<std::string>(), t)) {
        throw error(errc::format_error, "manifest node has an unknown dtype");
      }
      return std::make_shared<NumericArray>(
          load_buffer(desc, "buffer", t, length_of(desc)), parameters_of(desc));
    }
    if (kind == "listoffset") {
      Buffer offsets = load_buffer(desc, "offsets", dtype::int64, length_of(desc) + 1);
      return std::make_shared<ListOffsetArray>(std::move(offsets),
                                               restore(child(desc, "content")),
                                               parameters_of(desc));
    }
    if (kind == "record") {
      if (!desc.contains("fields") || !desc["fields"].is_array()) {
        throw error(errc::format_error, "record node is missing its fields");
      }
      std::vector<std::string> names;
      std::vector<NodePtr> contents;
      for (const auto& field : desc["fields"]) {
        if (!field.is_object() || !field.contains("name") || !field["name"].is_string()) {
          throw error(errc::format_error, "record field is missing its name");
        }
        names.push_back(field["name"].get<std::string>());
        contents.push_back(restore(child(field, "content")));
      }
      return std::make_shared<RecordArray>(std::move(names), std::move(contents),
                                           length_of(desc), parameters_of(desc));
    }
    if (kind == "union") {
      std::int64_t length = length_of(desc);
      Buffer tags = load_buffer(desc, "tags", dtype::int8, length);
      Buffer index = load_buffer(desc, "index", dtype::int64, length);
      if (!desc.contains("contents") || !desc["contents"].is_array()) {
        throw error(errc::format_error, "union node is missing its contents");
      }
      std::vector<NodePtr> contents;
      for (const auto& content : desc["contents"]) {
        contents.push_back(restore(content));
      }
      return std::make_shared<UnionArray>(std::move(tags), std::move(index),
                                          std::move(contents), parameters_of(desc));
    }
    if (kind == "indexedoption") {
      Buffer index = load_buffer(desc, "index", dtype::int64, length_of(desc));
      return std::make_shared<IndexedOptionArray>(std::move(index),
                                                  restore(child(desc, "content")),
                                                  parameters_of(desc));
    }
    if (kind == "empty") {
      return std::make_shared<EmptyArray>(parameters_of(desc));
    }
    throw error(errc::format_error, "unknown node kind \"" + kind + "\"");
  }

  static const manifest_json& child(const manifest_json& desc, const char* key) {
    if (!desc.contains(key)) {
      throw error(errc::format_error,
                  "manifest node is missing \"" + std::string(key) + "\"");
    }
    return desc[key];
  }
};

}  // namespace

void write(const NodePtr& node, const fs::path& directory) {
  if (auto issue = validate(node)) {
    throw error(errc::structure_error, issue->message + " at root" + issue->path);
  }
  std::error_code ec;
  if (fs::exists(directory)) {
    if (!fs::is_directory(directory)) {
      throw error(errc::io_error, directory.string() + " is not a directory");
    }
    bool is_container = fs::exists(directory / "manifest.json");
    bool is_empty = fs::is_empty(directory, ec);
    if (!is_container && !is_empty) {
      throw error(errc::io_error,
                  "refusing to overwrite " + directory.string() +
                      ": not a container directory");
    }
    // drop the previous container so the result is exactly this layout
    for (const auto& entry : fs::directory_iterator(directory)) {
      fs::remove(entry.path(), ec);
    }
  } else if (!fs::create_directories(directory, ec) || ec) {
    throw error(errc::io_error, "cannot create " + directory.string());
  }

  Writer writer{directory};
  manifest_json manifest = manifest_json::object();
  manifest["version"] = 1;
  manifest["root"] = writer.describe(node);

  fs::path file = directory / "manifest.json";
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw error(errc::io_error, "cannot create " + file.string());
  }
  out << manifest.dump(2) << "\n";
  if (!out) {
    throw error(errc::io_error, "cannot write " + file.string());
  }
}

NodePtr read(const fs::path& directory) {
  fs::path file = directory / "manifest.json";
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw error(errc::format_error, "missing manifest.json in " + directory.string());
  }
  manifest_json manifest;
  try {
    manifest = manifest_json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw error(errc::format_error, std::string("malformed manifest: ") + ex.what());
  }
  if (!manifest.contains("version") || manifest["version"] != 1) {
    throw error(errc::format_error, "unsupported version");
  }
  if (!manifest.contains("root")) {
    throw error(errc::format_error, "manifest has no root node");
  }
  Reader reader{directory};
  NodePtr node = reader.restore(manifest["root"]);
  if (auto issue = validate(node)) {
    throw error(errc::structure_error, issue->message + " at root" + issue->path);
  }
  return node;
}

}  // namespace ragcol
