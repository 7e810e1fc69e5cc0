#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>

#include "fairrank/types.hpp"

namespace fairrank::detail {

inline std::string location(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line) + ": ";
}

// Streams one parsed JSON object per non-empty line. Line numbers are 1-based.
inline void for_each_jsonl(const std::filesystem::path& path,
                           const std::function<void(std::size_t, const json&)>& fn) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open file: " + path.string());
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (obj.is_discarded()) {
      throw ParseError(location(path, line_no) + "malformed JSON line");
    }
    if (!obj.is_object()) {
      throw ParseError(location(path, line_no) + "expected a JSON object");
    }
    fn(line_no, obj);
  }
}

// Identifiers may arrive as strings or integers; normalize to string.
inline std::string key_string(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer() || v.is_number_unsigned()) {
    return std::to_string(v.get<std::int64_t>());
  }
  throw ParseError(where + "expected a string or integer identifier");
}

inline std::uint64_t nonneg_int(const json& v, std::string_view field, const std::string& where) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    auto n = v.get<std::int64_t>();
    if (n < 0) {
      throw ValidationError(where + std::string(field) + " must be nonnegative, got " +
                            std::to_string(n));
    }
    return static_cast<std::uint64_t>(n);
  }
  throw ParseError(where + std::string(field) + " must be an integer");
}

// Copies members not named in `known` so they survive a save round-trip.
inline json extra_fields(const json& obj, std::initializer_list<std::string_view> known) {
  json extra = json::object();
  for (const auto& [k, v] : obj.items()) {
    bool is_known = false;
    for (std::string_view name : known) {
      if (k == name) {
        is_known = true;
        break;
      }
    }
    if (!is_known) extra[k] = v;
  }
  return extra;
}

inline std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open output file: " + path.string());
  }
  return out;
}

}  // namespace fairrank::detail
