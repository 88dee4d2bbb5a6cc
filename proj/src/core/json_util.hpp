// SPDX-License-Identifier: Apache-2.0
//
// risim - physics-based simulator for RIS-assisted wireless links
// Copyright (c) 2026 risim contributors

#pragma once

#include <string>

#include <json.hpp>

#include "core/error.hpp"
#include "core/geometry.hpp"

namespace risim {

using Json = nlohmann::ordered_json;

inline const Json& require_field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) {
    fail(ErrorCode::parse_error, "expected an object at '" + path + "'");
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    const std::string full = path.empty() ? std::string(key) : path + "." + key;
    fail(ErrorCode::parse_error, "missing required field '" + full + "'");
  }
  return *it;
}

inline double as_number(const Json& v, const std::string& path) {
  if (!v.is_number()) {
    fail(ErrorCode::parse_error, "field '" + path + "' must be a number");
  }
  return v.get<double>();
}

inline int as_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) {
    fail(ErrorCode::parse_error, "field '" + path + "' must be an integer");
  }
  return v.get<int>();
}

inline std::string as_string(const Json& v, const std::string& path) {
  if (!v.is_string()) {
    fail(ErrorCode::parse_error, "field '" + path + "' must be a string");
  }
  return v.get<std::string>();
}

inline Vec3 as_vec3(const Json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3) {
    fail(ErrorCode::parse_error, "field '" + path + "' must be an array of 3 numbers");
  }
  Vec3 out{as_number(v[0], path + "[0]"), as_number(v[1], path + "[1]"),
           as_number(v[2], path + "[2]")};
  if (!is_finite(out)) {
    fail(ErrorCode::parse_error, "field '" + path + "' must be finite");
  }
  return out;
}

inline Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::parse_error, what + ": " + e.what());
  }
}

}  // namespace risim
