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

// Roster ingestion and batch generation.
//
// Roster files are UTF-8 CSV with the header `student_key,display_name`.
// The display name column may be omitted or empty; fields may be quoted.

#ifndef QGEN_ROSTER_HPP_
#define QGEN_ROSTER_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qgen/records.hpp"

namespace qgen {

struct RosterEntry {
  std::string student_key;
  std::optional<std::string> display_name;
};

namespace detail {

// Splits one CSV line, honoring double-quoted fields with "" escapes.
inline std::vector<std::string> split_csv(const std::string& line,
                                          int line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  if (quoted) {
    throw FormatError("roster line " + std::to_string(line_no) +
                      ": unterminated quote");
  }
  return fields;
}

}  // namespace detail

inline std::vector<RosterEntry> parse_roster(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool header = false;
  std::vector<RosterEntry> out;
  std::map<std::string, std::vector<int>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (detail::trim(line).empty()) continue;
    std::vector<std::string> f = detail::split_csv(line, line_no);
    if (!header) {
      if (detail::trim(f[0]) != "student_key" ||
          (f.size() > 1 && detail::trim(f[1]) != "display_name") ||
          f.size() > 2) {
        throw FormatError("roster header must be 'student_key,display_name'");
      }
      header = true;
      continue;
    }
    if (f.size() > 2) {
      throw FormatError("roster line " + std::to_string(line_no) +
                        ": expected at most 2 fields");
    }
    RosterEntry e;
    e.student_key = f[0];
    if (e.student_key.empty()) {
      throw FormatError("roster line " + std::to_string(line_no) +
                        ": empty student_key");
    }
    if (f.size() > 1 && !f[1].empty()) e.display_name = f[1];
    seen[e.student_key].push_back(line_no);
    out.push_back(std::move(e));
  }
  if (!header) throw FormatError("roster is empty");

  std::string dups;
  for (const auto& [key, lines] : seen) {
    if (lines.size() < 2) continue;
    dups += "\n  '" + key + "' on lines";
    for (int l : lines) dups += " " + std::to_string(l);
  }
  if (!dups.empty()) throw FormatError("duplicate student keys:" + dups);
  return out;
}

inline std::vector<RosterEntry> load_roster(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read roster '" + path + "'");
  return parse_roster(in);
}

struct BatchSummary {
  int count = 0;
  int distinct_pairs = 0;
  std::array<int, kCategoryCount> laws_by_category{};

  double distinct_ratio() const {
    return count == 0 ? 1.0 : static_cast<double>(distinct_pairs) / count;
  }
};

// Generates one record per entry. Entries are processed on `threads` workers;
// records come back in roster order.
inline std::vector<QuestionRecord> generate_records(
    const std::vector<RosterEntry>& roster, const RunConfig& config,
    unsigned threads = std::thread::hardware_concurrency()) {
  config.validate();
  std::vector<std::optional<QuestionRecord>> slots(roster.size());
  std::vector<std::exception_ptr> errors(roster.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < roster.size(); i = next++) {
      try {
        slots[i] = generate_record(roster[i].student_key, config);
        slots[i]->display_name = roster[i].display_name;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::clamp(threads, 1U, 64U);
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  pool.clear();

  std::vector<QuestionRecord> out;
  out.reserve(roster.size());
  for (std::size_t i = 0; i < roster.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

inline BatchSummary summarize(const std::vector<QuestionRecord>& records) {
  BatchSummary s;
  std::set<std::pair<std::string, std::string>> pairs;
  for (const QuestionRecord& r : records) {
    ++s.count;
    pairs.emplace(r.lhs_ascii, r.rhs_ascii);
    for (int c = 0; c < kCategoryCount; ++c) {
      s.laws_by_category[c] += r.stats.laws_by_category[c];
    }
  }
  s.distinct_pairs = static_cast<int>(pairs.size());
  return s;
}

inline BatchSummary write_batch(const std::vector<RosterEntry>& roster,
                                const RunConfig& config, std::ostream& out) {
  const std::vector<QuestionRecord> records = generate_records(roster, config);
  for (const QuestionRecord& r : records) out << record_line(r) << '\n';
  return summarize(records);
}

}  // namespace qgen

#endif  // QGEN_ROSTER_HPP_
