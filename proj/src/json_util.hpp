#pragma once

// Path-aware accessors over nlohmann::json so that malformed files report
// the offending field (e.g. "shipments[2].bay: expected integer").

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ipctp/error.hpp"

namespace ipctp::detail {

inline nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line number.
    std::size_t line = 1;
    for (std::size_t k = 0; k < e.byte && k < text.size(); ++k)
      if (text[k] == '\n') ++line;
    throw FormatError("line " + std::to_string(line) + ": " + e.what());
  }
}

class JsonReader {
 public:
  JsonReader(const nlohmann::json& node, std::string path) : node_(&node), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    throw FormatError(join(key) + ": " + msg);
  }

  bool has(const std::string& key) const {
    return node_->is_object() && node_->contains(key) && !(*node_)[key].is_null();
  }

  const nlohmann::json& raw() const { return *node_; }
  const std::string& path() const { return path_; }

  JsonReader child(const std::string& key) const {
    if (!node_->is_object()) fail("", "expected object");
    if (!node_->contains(key)) fail(key, "missing field");
    return JsonReader((*node_)[key], join(key));
  }

  JsonReader object(const std::string& key) const {
    auto c = child(key);
    if (!c.raw().is_object()) fail(key, "expected object");
    return c;
  }

  std::vector<JsonReader> array(const std::string& key) const { return child(key).elements(); }

  std::vector<JsonReader> elements() const {
    if (!node_->is_array()) fail("", "expected array");
    std::vector<JsonReader> out;
    for (std::size_t k = 0; k < node_->size(); ++k)
      out.emplace_back((*node_)[k], path_ + "[" + std::to_string(k) + "]");
    return out;
  }

  std::int64_t as_int64() const {
    if (!node_->is_number_integer()) fail("", "expected integer");
    return node_->get<std::int64_t>();
  }
  double as_double() const {
    if (!node_->is_number()) fail("", "expected number");
    return node_->get<double>();
  }

  std::int64_t get_int64(const std::string& key) const { return child(key).as_int64(); }
  int get_int(const std::string& key) const { return static_cast<int>(get_int64(key)); }
  double get_double(const std::string& key) const { return child(key).as_double(); }
  std::string get_string(const std::string& key) const {
    auto c = child(key);
    if (!c.raw().is_string()) fail(key, "expected string");
    return c.raw().get<std::string>();
  }

  std::vector<std::int64_t> int64_list() const {
    std::vector<std::int64_t> out;
    for (const auto& e : elements()) out.push_back(e.as_int64());
    return out;
  }
  std::vector<std::int64_t> get_int64_list(const std::string& key) const {
    return child(key).int64_list();
  }

 private:
  std::string join(const std::string& key) const {
    if (key.empty()) return path_.empty() ? "<root>" : path_;
    return path_.empty() ? key : path_ + "." + key;
  }

  const nlohmann::json* node_;
  std::string path_;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << content;
}

}  // namespace ipctp::detail
