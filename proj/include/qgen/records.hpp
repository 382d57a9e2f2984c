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

// Line-delimited JSON records file: one QuestionRecord per line. Also the
// re-validation of an existing records file.

#ifndef QGEN_RECORDS_HPP_
#define QGEN_RECORDS_HPP_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgen/question.hpp"

namespace qgen {

using Json = nlohmann::ordered_json;

inline Json trace_entry_to_json(const TraceEntry& e) {
  Json j;
  j["step"] = e.step;
  j["family"] = e.choice.is_law() ? "law" : "structural";
  j["rule_name"] = e.rule_name();
  if (auto c = e.category()) j["category"] = std::string(category_name(*c));
  j["target_id"] = e.target.value;
  Json created = Json::array();
  for (InstanceId id : e.created) created.push_back(id.value);
  j["created_ids"] = std::move(created);
  j["family_digit"] = e.family_digit;
  j["rule_digit"] = e.rule_digit;
  j["forced"] = e.forced;
  return j;
}

inline TraceEntry trace_entry_from_json(const Json& j) {
  TraceEntry e;
  e.step = j.at("step").get<int>();
  const std::string family = j.at("family").get<std::string>();
  const std::string name = j.at("rule_name").get<std::string>();
  if (family == "law") {
    const LawRule* law = law_by_name(name);
    if (law == nullptr) throw FormatError("unknown law '" + name + "'");
    e.choice = RuleChoice::law(law->id);
    if (j.contains("category") &&
        j.at("category").get<std::string>() != category_name(law->category())) {
      throw FormatError("law '" + name + "' listed under the wrong category");
    }
  } else if (family == "structural") {
    auto kind = structural_from_name(name);
    if (!kind) throw FormatError("unknown structural rule '" + name + "'");
    e.choice = RuleChoice::structural(*kind);
  } else {
    throw FormatError("unknown rule family '" + family + "'");
  }
  e.target = InstanceId{j.at("target_id").get<int>()};
  for (const Json& id : j.at("created_ids")) {
    e.created.push_back(InstanceId{id.get<int>()});
  }
  e.family_digit = j.value("family_digit", -1);
  e.rule_digit = j.value("rule_digit", -1);
  e.forced = j.value("forced", false);
  return e;
}

inline Json record_to_json(const QuestionRecord& r) {
  Json j;
  j["student_key"] = r.student_key;
  if (r.display_name) j["display_name"] = *r.display_name;
  j["digest_hex"] = r.digest_hex;
  if (!r.lhs_text.empty()) {
    j["lhs_text"] = r.lhs_text;
    j["rhs_text"] = r.rhs_text;
  }
  j["lhs_ascii"] = r.lhs_ascii;
  j["rhs_ascii"] = r.rhs_ascii;
  if (!r.latex.empty()) j["latex"] = r.latex;
  if (r.trace) {
    Json t = Json::array();
    for (const TraceEntry& e : *r.trace) t.push_back(trace_entry_to_json(e));
    j["trace"] = std::move(t);
  }
  Json by_cat;
  for (int c = 0; c < kCategoryCount; ++c) {
    by_cat[std::string(category_name(static_cast<Category>(c)))] =
        r.stats.laws_by_category[c];
  }
  j["stats"] = {{"left_leaves", r.stats.left_leaves},
                {"right_leaves", r.stats.right_leaves},
                {"laws_by_category", std::move(by_cat)},
                {"total_laws", r.stats.total_laws}};
  return j;
}

inline QuestionRecord record_from_json(const Json& j) {
  try {
    QuestionRecord r;
    r.student_key = j.at("student_key").get<std::string>();
    if (j.contains("display_name")) {
      r.display_name = j.at("display_name").get<std::string>();
    }
    r.digest_hex = j.at("digest_hex").get<std::string>();
    r.lhs_text = j.value("lhs_text", "");
    r.rhs_text = j.value("rhs_text", "");
    r.lhs_ascii = j.at("lhs_ascii").get<std::string>();
    r.rhs_ascii = j.at("rhs_ascii").get<std::string>();
    r.latex = j.value("latex", "");
    if (j.contains("trace")) {
      std::vector<TraceEntry> trace;
      for (const Json& e : j.at("trace")) {
        trace.push_back(trace_entry_from_json(e));
      }
      r.trace = std::move(trace);
    }
    const Json& s = j.at("stats");
    r.stats.left_leaves = s.at("left_leaves").get<int>();
    r.stats.right_leaves = s.at("right_leaves").get<int>();
    for (int c = 0; c < kCategoryCount; ++c) {
      r.stats.laws_by_category[c] =
          s.at("laws_by_category")
              .at(std::string(category_name(static_cast<Category>(c))))
              .get<int>();
    }
    r.stats.total_laws = s.at("total_laws").get<int>();
    return r;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed record: ") + e.what());
  }
}

inline std::string record_line(const QuestionRecord& r) {
  return record_to_json(r).dump(-1, ' ', false,
                                Json::error_handler_t::strict);
}

inline QuestionRecord parse_record_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed record: ") + e.what());
  }
  return record_from_json(j);
}

// ---------------------------------------------------------------------------
// Validation

struct RecordCheck {
  int line = 0;
  std::string student_key;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

struct ValidationReport {
  std::vector<RecordCheck> records;

  int failures() const {
    int n = 0;
    for (const RecordCheck& r : records) n += r.ok() ? 0 : 1;
    return n;
  }
};

namespace detail {

inline void check_latex(const QuestionRecord& r, const Proposition& lhs,
                        const Proposition& rhs,
                        std::vector<std::string>& problems) {
  static constexpr std::string_view kSep = " \\equiv ";
  const auto pos = r.latex.find(kSep);
  if (pos == std::string::npos) {
    problems.push_back("latex line has no \\equiv");
    return;
  }
  const Proposition l = parse(r.latex.substr(0, pos), Syntax::kLatex);
  const Proposition rr = parse(r.latex.substr(pos + kSep.size()), Syntax::kLatex);
  if (!(l == lhs) || !(rr == rhs)) {
    problems.push_back("latex line differs from the ASCII expressions");
  }
}

}  // namespace detail

// Re-checks one record: expressions reparse, are equivalent, the other
// syntaxes agree with the ASCII ones, and the statistics match the trace.
inline std::vector<std::string> check_record(const QuestionRecord& r) {
  std::vector<std::string> problems;
  try {
    HexStream::from_hex(r.digest_hex, 1);
  } catch (const Error& e) {
    problems.push_back(std::string("bad digest: ") + e.what());
  }

  std::optional<Proposition> lhs, rhs;
  try {
    lhs = parse(r.lhs_ascii, Syntax::kAscii);
    rhs = parse(r.rhs_ascii, Syntax::kAscii);
  } catch (const ParseError& e) {
    problems.push_back(std::string("ASCII expression does not parse: ") +
                       e.what());
    return problems;
  }
  try {
    if (!equivalent(*lhs, *rhs)) {
      problems.push_back("expressions are not equivalent");
    }
  } catch (const ResourceError& e) {
    problems.push_back(e.what());
  }

  try {
    if (!r.lhs_text.empty() || !r.rhs_text.empty()) {
      if (!(parse(r.lhs_text, Syntax::kUnicode) == *lhs) ||
          !(parse(r.rhs_text, Syntax::kUnicode) == *rhs)) {
        problems.push_back("unicode text differs from the ASCII expressions");
      }
    }
    if (!r.latex.empty()) detail::check_latex(r, *lhs, *rhs, problems);
  } catch (const ParseError& e) {
    problems.push_back(std::string("expression does not parse: ") + e.what());
  }

  const QuestionStats& s = r.stats;
  if (s.left_leaves != count_leaves(*lhs) ||
      s.right_leaves != count_leaves(*rhs)) {
    problems.push_back("stats mismatch: leaf counts differ from expressions");
  }
  int sum = 0;
  for (int c : s.laws_by_category) sum += c;
  if (sum != s.total_laws) {
    problems.push_back("stats mismatch: category counts do not sum to total");
  }
  if (r.trace) {
    try {
      if (!(stats_from_trace(*r.trace) == s)) {
        problems.push_back("stats mismatch: recomputed from trace");
      }
    } catch (const Error& e) {
      problems.push_back(std::string("trace does not replay: ") + e.what());
    }
  }
  return problems;
}

// Malformed lines are reported and validation continues.
inline ValidationReport validate_records(std::istream& in) {
  ValidationReport report;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    RecordCheck check;
    check.line = line_no;
    try {
      QuestionRecord r = parse_record_line(line);
      check.student_key = r.student_key;
      check.problems = check_record(r);
    } catch (const Error& e) {
      check.problems.push_back(e.what());
    }
    report.records.push_back(std::move(check));
  }
  return report;
}

}  // namespace qgen

#endif  // QGEN_RECORDS_HPP_
