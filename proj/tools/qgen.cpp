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

// qgen: per-student propositional equivalence exercises.
//
//   qgen single --key <k> [--config <f>] [--json] [--no-solutions]
//   qgen batch --roster <f> --out <f> [--config <f>] [--no-solutions]
//   qgen validate --in <f>
//   qgen show-laws
//
// Exit codes: 0 success, 1 validation failure, 2 usage or config error,
// 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qgen/config.hpp"
#include "qgen/records.hpp"
#include "qgen/roster.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

qgen::RunConfig load_run_config(const std::string& path, bool no_solutions) {
  qgen::RunConfig config =
      path.empty() ? qgen::RunConfig{} : qgen::load_config(path);
  if (!config.salt) {
    if (const char* env = std::getenv("QGEN_SALT")) config.salt = env;
  }
  if (no_solutions) config.solutions = false;
  config.validate();
  return config;
}

void print_question(const qgen::QuestionRecord& r, std::ostream& out) {
  out << "student:  " << r.student_key << '\n'
      << "digest:   " << r.digest_hex << '\n'
      << "question: show that  "
      << (r.lhs_text.empty() ? r.lhs_ascii : r.lhs_text) << "  "
      << (r.lhs_text.empty() ? "==" : "≡") << "  "
      << (r.rhs_text.empty() ? r.rhs_ascii : r.rhs_text) << '\n';
  if (!r.trace) return;
  out << "solution key:\n";
  for (const qgen::TraceEntry& e : *r.trace) {
    out << "  " << std::setw(3) << e.step << "  E" << e.target.value << " -> "
        << e.rule_name();
    if (auto c = e.category()) out << " [" << qgen::category_name(*c) << "]";
    if (!e.created.empty()) {
      out << "  creates";
      for (qgen::InstanceId id : e.created) out << " E" << id.value;
    }
    out << '\n';
  }
}

int run_single(const std::string& key, const std::string& config_path,
               bool json, bool no_solutions) {
  const qgen::RunConfig config = load_run_config(config_path, no_solutions);
  const qgen::QuestionRecord r = qgen::generate_record(key, config);
  if (json) {
    std::cout << qgen::record_line(r) << '\n';
  } else {
    print_question(r, std::cout);
  }
  return kExitOk;
}

int run_batch(const std::string& roster_path, const std::string& out_path,
              const std::string& config_path, bool no_solutions) {
  const qgen::RunConfig config = load_run_config(config_path, no_solutions);
  const auto roster = qgen::load_roster(roster_path);
  const auto records = qgen::generate_records(roster, config);
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw qgen::IoError("cannot write '" + out_path + "'");
  for (const auto& r : records) out << qgen::record_line(r) << '\n';
  out.close();
  if (!out) throw qgen::IoError("failed writing '" + out_path + "'");

  const qgen::BatchSummary s = qgen::summarize(records);
  std::cout << "records:        " << s.count << '\n'
            << "distinct pairs: " << s.distinct_pairs << " (ratio "
            << std::fixed << std::setprecision(4) << s.distinct_ratio()
            << ")\n"
            << "laws applied:  ";
  for (int c = 0; c < qgen::kCategoryCount; ++c) {
    std::cout << ' ' << qgen::category_name(static_cast<qgen::Category>(c))
              << '=' << s.laws_by_category[c];
  }
  std::cout << '\n';
  return kExitOk;
}

int run_validate(const std::string& in_path) {
  std::ifstream in(in_path, std::ios::binary);
  if (!in) throw qgen::IoError("cannot read '" + in_path + "'");
  const qgen::ValidationReport report = qgen::validate_records(in);
  for (const auto& r : report.records) {
    std::cout << "line " << r.line << ": " << (r.ok() ? "PASS" : "FAIL");
    if (!r.student_key.empty()) std::cout << "  " << r.student_key;
    std::cout << '\n';
    for (const auto& p : r.problems) std::cout << "    " << p << '\n';
  }
  std::cout << report.records.size() << " records, " << report.failures()
            << " failed\n";
  return report.failures() == 0 ? kExitOk : kExitValidation;
}

// Pads to `width` columns, counting UTF-8 code points rather than bytes.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t columns = 0;
  for (unsigned char c : s) columns += (c & 0xC0) != 0x80;
  return columns >= width ? s + ' ' : s + std::string(width - columns, ' ');
}

int run_show_laws() {
  auto render_pattern = [](const qgen::Pattern& p) {
    return qgen::render(qgen::to_proposition(p, [](qgen::Slot s) {
      return qgen::var(std::string(qgen::slot_name(s)));
    }));
  };
  for (const qgen::LawRule& law : qgen::law_table()) {
    std::cout << std::setw(2) << law.id << "  " << pad(law.name, 17)
              << pad(std::string(qgen::category_name(law.category())), 8)
              << render_pattern(law.gamma1) << "  ≡  "
              << render_pattern(law.gamma2) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate per-student propositional equivalence exercises"};
  app.require_subcommand(1);

  std::string key, config_path, roster_path, out_path, in_path;
  bool json = false;
  bool no_solutions = false;

  CLI::App* single = app.add_subcommand("single", "Generate one question");
  single->add_option("--key", key, "Student key to hash")->required();
  single->add_option("--config", config_path, "Difficulty config file");
  single->add_flag("--json", json, "Print the record line instead of text");
  single->add_flag("--no-solutions", no_solutions, "Omit the solution key");

  CLI::App* batch = app.add_subcommand("batch", "Generate a roster's questions");
  batch->add_option("--roster", roster_path, "Roster CSV")->required();
  batch->add_option("--out", out_path, "Records file to write")->required();
  batch->add_option("--config", config_path, "Difficulty config file");
  batch->add_flag("--no-solutions", no_solutions, "Strip solution keys");

  CLI::App* validate = app.add_subcommand("validate", "Re-check a records file");
  validate->add_option("--in", in_path, "Records file")->required();

  CLI::App* show_laws = app.add_subcommand("show-laws", "List the law rules");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (single->parsed()) {
      return run_single(key, config_path, json, no_solutions);
    }
    if (batch->parsed()) {
      return run_batch(roster_path, out_path, config_path, no_solutions);
    }
    if (validate->parsed()) return run_validate(in_path);
    if (show_laws->parsed()) return run_show_laws();
  } catch (const qgen::IoError& e) {
    std::cerr << "qgen: " << e.what() << '\n';
    return kExitIo;
  } catch (const qgen::DefectError& e) {
    std::cerr << "qgen: internal defect: " << e.what() << '\n';
    return kExitValidation;
  } catch (const qgen::Error& e) {
    std::cerr << "qgen: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
