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

// One question per student: seed, derive, attribute, then gate the result on
// the truth-table oracle and the difficulty audit before it is emitted.

#ifndef QGEN_QUESTION_HPP_
#define QGEN_QUESTION_HPP_

#include <array>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "qgen/attribution.hpp"
#include "qgen/config.hpp"
#include "qgen/derivation.hpp"
#include "qgen/hex_stream.hpp"
#include "qgen/logic.hpp"

namespace qgen {

struct QuestionStats {
  int left_leaves = 0;
  int right_leaves = 0;
  std::array<int, kCategoryCount> laws_by_category{};
  int total_laws = 0;

  friend bool operator==(const QuestionStats&, const QuestionStats&) = default;
};

struct QuestionRecord {
  std::string student_key;
  std::optional<std::string> display_name;
  std::string digest_hex;
  std::string lhs_text;  // unicode; empty when not emitted
  std::string rhs_text;
  std::string lhs_ascii;
  std::string rhs_ascii;
  std::string latex;  // "lhs \equiv rhs"; empty when not emitted
  std::optional<std::vector<TraceEntry>> trace;
  QuestionStats stats;
};

// Statistics implied by a trace, recomputed by replaying it.
inline QuestionStats stats_from_trace(std::span<const TraceEntry> trace) {
  const PairedDerivation d = replay(trace);
  QuestionStats s;
  s.left_leaves = d.leaf_count(Side::kLeft);
  s.right_leaves = d.leaf_count(Side::kRight);
  for (const TraceEntry& e : trace) {
    if (!e.choice.is_law()) continue;
    ++s.laws_by_category[static_cast<std::size_t>(*e.category())];
    ++s.total_laws;
  }
  return s;
}

// Number of variable and constant occurrences.
inline int count_leaves(const Proposition& p) {
  switch (p.kind()) {
    case Proposition::Kind::kConst:
    case Proposition::Kind::kVar:
      return 1;
    case Proposition::Kind::kNot:
      return count_leaves(p.child());
    case Proposition::Kind::kBinary:
      return count_leaves(p.left()) + count_leaves(p.right());
  }
  return 0;
}

inline std::string latex_line(const std::string& lhs, const std::string& rhs) {
  return lhs + " \\equiv " + rhs;
}

// Everything produced for one student before it is turned into a record.
struct Question {
  std::string digest_hex;
  PairedDerivation derivation;
  LiteralAssignment literals;
  RenderedPair pair;
};

// Runs the three phases on an already-seeded stream.
inline Question derive_question(HexStream& stream, const DifficultyConfig& config,
                                std::span<const RuleChoice> script = {}) {
  Question q;
  q.digest_hex = stream.digest_hex();
  q.derivation = generate(stream, config, script);
  q.literals = assign_literals(q.derivation, stream, config.pool_size);
  q.pair = extract_pair(q.derivation, q.literals);
  return q;
}

namespace detail {

inline std::string describe_trace(const std::vector<TraceEntry>& trace) {
  std::ostringstream out;
  for (const TraceEntry& e : trace) {
    out << "\n  " << e.step << ": " << e.rule_name() << " at E"
        << e.target.value;
  }
  return out.str();
}

}  // namespace detail

// Builds the record and checks it. `audited` is false only for scripted
// derivations whose choices did not come from the digits.
inline QuestionRecord make_record(const std::string& student_key,
                                  const Question& q, const RunConfig& config,
                                  bool audited = true) {
  const auto& trace = q.derivation.trace();
  std::vector<std::string> problems;

  if (!equivalent(q.pair.lhs, q.pair.rhs)) {
    problems.push_back("sides are not equivalent");
  }
  if (audited) {
    for (std::string& v : audit(q.derivation, config.difficulty)) {
      problems.push_back(std::move(v));
    }
  }
  for (Syntax s : {Syntax::kUnicode, Syntax::kAscii, Syntax::kLatex}) {
    if (!(parse(q.pair.lhs_in(s), s) == q.pair.lhs) ||
        !(parse(q.pair.rhs_in(s), s) == q.pair.rhs)) {
      problems.push_back("rendered text does not reparse to the same tree");
    }
  }

  QuestionRecord r;
  r.student_key = student_key;
  r.digest_hex = q.digest_hex;
  r.lhs_ascii = q.pair.lhs_in(Syntax::kAscii);
  r.rhs_ascii = q.pair.rhs_in(Syntax::kAscii);
  if (config.emit_unicode) {
    r.lhs_text = q.pair.lhs_in(Syntax::kUnicode);
    r.rhs_text = q.pair.rhs_in(Syntax::kUnicode);
  }
  if (config.emit_latex) {
    r.latex = latex_line(q.pair.lhs_in(Syntax::kLatex),
                         q.pair.rhs_in(Syntax::kLatex));
  }
  r.stats = stats_from_trace(trace);
  if (r.stats.left_leaves != count_leaves(q.pair.lhs) ||
      r.stats.right_leaves != count_leaves(q.pair.rhs)) {
    problems.push_back("leaf statistics disagree with the expressions");
  }
  if (config.solutions) r.trace = trace;

  if (!problems.empty()) {
    std::string msg = "generated question for digest " + q.digest_hex +
                      " failed validation:";
    for (const std::string& p : problems) msg += "\n  - " + p;
    msg += "\ntrace:" + detail::describe_trace(trace);
    throw DefectError(msg);
  }
  return r;
}

inline QuestionRecord generate_record(const std::string& student_key,
                                      const RunConfig& config) {
  config.validate();
  HexStream stream = HexStream::from_info(config.seed_info(student_key),
                                          config.difficulty.offset);
  return make_record(student_key, derive_question(stream, config.difficulty),
                     config);
}

}  // namespace qgen

#endif  // QGEN_QUESTION_HPP_
