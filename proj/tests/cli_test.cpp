// Copyright 2026 The huckel-bounds Authors
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

// Drives the built command-line tool through the shell.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "huckel/constructions.hpp"
#include "huckel/graph6.hpp"
#include "json.hpp"

#ifndef HUCKEL_CLI_PATH
#error "HUCKEL_CLI_PATH must name the huckel executable"
#endif

namespace huckel {
namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_text = "") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto in_path = dir / ("huckel_cli_in_" + std::to_string(::getpid()));
  {
    std::ofstream in(in_path);
    in << stdin_text;
  }
  const std::string cmd = std::string(HUCKEL_CLI_PATH) + " " + args + " < " +
                          in_path.string() + " 2>/dev/null";
  RunResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::filesystem::remove(in_path);
  return r;
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          (name + "_" + std::to_string(::getpid())))
      .string();
}

TEST(CliAnalyzeTest, K2) {
  const RunResult r = run("analyze", "A_\n");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["HE"].get<double>(), 2.0);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["equality_tags"],
            nlohmann::json::array({"lower_tight", "upper_n_tight", "upper_nm_tight"}));
}

TEST(CliAnalyzeTest, PetersenReportsSrgParameters) {
  const RunResult r = run("analyze", write_graph6(petersen_graph()) + "\n");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["srg_params"],
            (nlohmann::json{{"n", 10}, {"k", 3}, {"lambda", 0}, {"mu", 1}}));
}

TEST(CliAnalyzeTest, OneLinePerRecordAndMalformedInput) {
  const RunResult two = run("analyze", "A_\n@\n");
  ASSERT_EQ(two.status, 0);
  EXPECT_EQ(std::count(two.out.begin(), two.out.end(), '\n'), 2);
  EXPECT_EQ(run("analyze", "A@\n").status, 2);
  EXPECT_EQ(run("analyze --skip-malformed", "A@\nA_\n").status, 0);
}

TEST(CliAnalyzeTest, OutputIsDeterministic) {
  const std::string in = write_graph6(johnson_graph_pairs(5)) + "\nDQc\n";
  EXPECT_EQ(run("analyze", in).out, run("analyze", in).out);
}

TEST(CliConstructTest, ExtremalT1WithCertificate) {
  const std::string cert = temp_file("huckel_cert");
  const RunResult r = run("construct extremal --t 1 --cert " + cert);
  ASSERT_EQ(r.status, 0);
  const Graph g = parse_graph6(r.out);
  EXPECT_EQ(g, build_extremal_srg(1));
  std::ifstream in(cert);
  const auto j = nlohmann::json::parse(in);
  const nlohmann::json want = {{"n", 10}, {"k", 6}, {"lambda", 3}, {"mu", 4}};
  EXPECT_EQ(j["expected_params"], want);
  EXPECT_EQ(j["observed_params"], want);
  EXPECT_DOUBLE_EQ(j["energy"]["HE"].get<double>(), 20.0);
  std::filesystem::remove(cert);
}

TEST(CliConstructTest, ConferenceQ5IsPentagon) {
  const RunResult r = run("construct conference --q 5");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, write_graph6(cycle_graph(5)) + "\n");
}

TEST(CliConstructTest, RemarkT1) {
  const RunResult r = run("construct remark --t 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(parse_graph6(r.out).order(), 11U);
}

TEST(CliConstructTest, NonPrimePowerFieldIsUsageError) {
  EXPECT_EQ(run("construct extremal --t 7").status, 2);
  EXPECT_EQ(run("construct nosuch --t 1").status, 2);
}

TEST(CliVerifyTest, SmallSweeps) {
  const RunResult lower = run("verify --n 5 --checks lower");
  ASSERT_EQ(lower.status, 0);
  EXPECT_TRUE(nlohmann::json::parse(lower.out)["passed"].get<bool>());
  EXPECT_EQ(run("verify --n 6 --checks upper_nm,upper_n,intermediate").status, 0);
  EXPECT_EQ(run("verify --n 8").status, 2);
  EXPECT_EQ(run("verify --n 4 --checks bogus").status, 2);
}

TEST(CliVerifyTest, LemmaCounterexampleAtThreeFails) {
  const RunResult r = run("verify --n 3 --checks lemma1");
  EXPECT_EQ(r.status, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["passed"].get<bool>());
}

TEST(CliVerifyTest, CorpusOfExtremalGraphsHasZeroSlack) {
  const std::string corpus = temp_file("huckel_corpus");
  {
    std::ofstream out(corpus);
    out << write_graph6(build_extremal_srg(1)) << "\n"
        << write_graph6(build_extremal_srg(2)) << "\n";
  }
  const RunResult r = run("verify --corpus " + corpus + " --checks upper_n");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& rep : j["reports"]) {
    EXPECT_NEAR(rep["checks"]["upper_n"]["min_slack"].get<double>(), 0.0, 1e-8);
  }
  std::filesystem::remove(corpus);
}

TEST(CliBoundTest, Tables) {
  const RunResult a = run("bound --n 10 --m 30");
  ASSERT_EQ(a.status, 0);
  EXPECT_NE(a.out.find("bound    20\n"), std::string::npos);
  EXPECT_NE(a.out.find("regime   first"), std::string::npos);
  const RunResult b = run("bound --n 9");
  ASSERT_EQ(b.status, 0);
  EXPECT_NE(b.out.find("16.5"), std::string::npos);
  EXPECT_EQ(run("bound --n 4 --m 7").status, 2);
  EXPECT_EQ(run("nosuch").status, 2);
}

}  // namespace
}  // namespace huckel
