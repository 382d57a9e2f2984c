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


// Drives the qgen binary end to end and checks exit codes and files.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + " " + std::string(QGEN_CLI_PATH) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const std::string& name) {
  return std::string(QGEN_SAMPLES_DIR) + "/" + name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qgen_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                             ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

TEST_F(CliTest, SinglePrintsQuestionAndKey) {
  const Result r = run("single --key s1", "QGEN_SALT=x");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("question:"), std::string::npos);
  EXPECT_NE(r.out.find("solution key:"), std::string::npos);
  const Result bare = run("single --key s1 --no-solutions", "QGEN_SALT=x");
  EXPECT_EQ(bare.out.find("solution key:"), std::string::npos);
}

TEST_F(CliTest, SaltFromEnvironmentChangesDigest) {
  const Result a = run("single --key s1 --json", "QGEN_SALT=a");
  const Result b = run("single --key s1 --json", "QGEN_SALT=b");
  ASSERT_EQ(a.code, 0);
  EXPECT_NE(a.out, b.out);
  EXPECT_EQ(a.out, run("single --key s1 --json", "QGEN_SALT=a").out);
}

TEST_F(CliTest, BatchThenValidate) {
  const fs::path out1 = dir_ / "one.jsonl";
  const fs::path out2 = dir_ / "two.jsonl";
  const std::string common = " --roster " + sample("roster.csv") +
                             " --config " + sample("default.conf");
  Result r = run("batch" + common + " --out " + out1.string(), "QGEN_SALT=t");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("records:        4"), std::string::npos) << r.out;
  ASSERT_EQ(run("batch" + common + " --out " + out2.string(), "QGEN_SALT=t").code, 0);
  EXPECT_EQ(slurp(out1), slurp(out2));

  r = run("validate --in " + out1.string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("4 records, 0 failed"), std::string::npos);

  // Corrupt one right-hand side.
  std::string text = slurp(out1);
  const std::string marker = "\"rhs_ascii\":\"";
  const auto pos = text.find(marker) + marker.size();
  text.replace(pos, text.find('"', pos) - pos, "!p");
  std::ofstream(out1, std::ios::binary | std::ios::trunc) << text;
  r = run("validate --in " + out1.string());
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("line 1: FAIL"), std::string::npos) << r.out;
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("single").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("single --key a --config " + sample("missing.conf")).code, 3);
  EXPECT_EQ(run("validate --in " + (dir_ / "nope.jsonl").string()).code, 3);
  EXPECT_EQ(run("batch --roster " + sample("roster_duplicate.csv") + " --out " +
                (dir_ / "x.jsonl").string())
                .code,
            2);

  const fs::path bad = dir_ / "bad.conf";
  std::ofstream(bad) << "max_laws = 3\nmystery = 1\n";
  const Result r = run("single --key a --config " + bad.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("unknown key 'mystery'"), std::string::npos) << r.out;
}

TEST_F(CliTest, ShowLaws) {
  const Result r = run("show-laws");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Absorption-∧"), std::string::npos);
  EXPECT_NE(r.out.find("j ∧ (j ∨ k)"), std::string::npos);
}

}  // namespace
