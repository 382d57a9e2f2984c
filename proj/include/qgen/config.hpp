/*
 * Copyright 2026 The qgen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Run configuration and its flat `key = value` file format:
//
//   # comment
//   p_law_init = 0.25
//   quota_hard = 1
//   law_order = 0,1,2,...,18
//   salt = spring-term
//
// Unknown keys are rejected.

#ifndef QGEN_CONFIG_HPP_
#define QGEN_CONFIG_HPP_

#include <cerrno>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/derivation.hpp"
#include "qgen/error.hpp"
#include "qgen/logic.hpp"

namespace qgen {

struct RunConfig {
  DifficultyConfig difficulty;
  // Prepended to the student key before hashing.
  std::optional<std::string> salt;
  // Emit the derivation trace (the solution key) in records.
  bool solutions = true;
  // Text syntaxes written to records. ASCII is always written.
  bool emit_unicode = true;
  bool emit_latex = true;

  void validate() const { difficulty.validate(); }

  // Bytes hashed for a student.
  std::string seed_info(std::string_view student_key) const {
    return salt.value_or("") + std::string(student_key);
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline int parse_int(std::string_view key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const long x = std::strtol(v.c_str(), &end, 10);
  if (v.empty() || *end != '\0' || errno != 0 || x < INT_MIN || x > INT_MAX) {
    throw ConfigError("'" + std::string(key) + "' expects an integer, got '" +
                      v + "'");
  }
  return static_cast<int>(x);
}

inline double parse_double(std::string_view key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || *end != '\0' || errno != 0) {
    throw ConfigError("'" + std::string(key) + "' expects a number, got '" +
                      v + "'");
  }
  return x;
}

inline bool parse_bool(std::string_view key, const std::string& v) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw ConfigError("'" + std::string(key) + "' expects true or false, got '" +
                    v + "'");
}

// Items are rule ids or rule names ("And", "Absorption-∧").
inline RuleOrdering parse_ordering(std::string_view key, const std::string& v,
                                   int size) {
  std::vector<int> perm;
  for (const std::string& item : split(v, ',')) {
    if (!item.empty() && item[0] >= '0' && item[0] <= '9') {
      perm.push_back(parse_int(key, item));
    } else if (size == kStructuralRuleCount && structural_from_name(item)) {
      perm.push_back(static_cast<int>(*structural_from_name(item)));
    } else if (size == kLawRuleCount && law_by_name(item) != nullptr) {
      perm.push_back(law_by_name(item)->id);
    } else {
      throw ConfigError("'" + std::string(key) + "' names unknown rule '" +
                        item + "'");
    }
  }
  auto ordering = RuleOrdering::from_permutation(std::move(perm));
  if (!ordering || ordering->size() != size) {
    throw ConfigError("'" + std::string(key) + "' must be a permutation of 0.." +
                      std::to_string(size - 1));
  }
  return *ordering;
}

}  // namespace detail

inline RunConfig parse_config(std::string_view text) {
  RunConfig config;
  DifficultyConfig& d = config.difficulty;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string value(detail::trim(line.substr(eq + 1)));
    if (key == "p_law_init") {
      d.p_law_init = detail::parse_double(key, value);
    } else if (key == "p_law_step") {
      d.p_law_step = detail::parse_double(key, value);
    } else if (key == "min_leaf_count") {
      d.min_leaf_count = detail::parse_int(key, value);
    } else if (key == "p_literal_boost") {
      d.p_literal_boost = detail::parse_double(key, value);
    } else if (key == "quota_easy") {
      d.quotas[0] = detail::parse_int(key, value);
    } else if (key == "quota_median") {
      d.quotas[1] = detail::parse_int(key, value);
    } else if (key == "quota_hard") {
      d.quotas[2] = detail::parse_int(key, value);
    } else if (key == "max_laws") {
      d.max_laws = detail::parse_int(key, value);
    } else if (key == "max_depth") {
      d.max_depth = detail::parse_int(key, value);
    } else if (key == "pool_size") {
      d.pool_size = detail::parse_int(key, value);
    } else if (key == "offset") {
      d.offset = detail::parse_int(key, value);
    } else if (key == "structural_order") {
      d.structural_order =
          detail::parse_ordering(key, value, kStructuralRuleCount);
    } else if (key == "law_order") {
      d.law_order = detail::parse_ordering(key, value, kLawRuleCount);
    } else if (key == "salt") {
      config.salt = value;
    } else if (key == "solutions") {
      config.solutions = detail::parse_bool(key, value);
    } else if (key == "syntaxes") {
      config.emit_unicode = config.emit_latex = false;
      for (const std::string& s : detail::split(value, ',')) {
        if (s == "unicode") {
          config.emit_unicode = true;
        } else if (s == "latex") {
          config.emit_latex = true;
        } else if (s != "ascii") {
          throw ConfigError("unknown syntax '" + s + "'");
        }
      }
    } else {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace qgen

#endif  // QGEN_CONFIG_HPP_
