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

#include "huckel/oracle.hpp"

#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "huckel/json_io.hpp"

namespace huckel {
namespace {

SweepOptions only(std::initializer_list<Check> checks) {
  SweepOptions o;
  o.checks = checks;
  return o;
}

TEST(LabeledGraphsTest, Counts) {
  EXPECT_EQ(enumerate_labeled_graphs(2).count(), 2U);
  EXPECT_EQ(enumerate_labeled_graphs(4).count(), 64U);
  EXPECT_EQ(enumerate_labeled_graphs(7).count(), 2097152U);
  EXPECT_EQ(enumerate_labeled_graphs(1).count(), 1U);
  EXPECT_THROW(enumerate_labeled_graphs(8), std::invalid_argument);
}

TEST(LabeledGraphsTest, EachGraphExactlyOnce) {
  std::set<std::string> seen;
  std::uint64_t total = 0;
  for (const Graph& g : enumerate_labeled_graphs(5)) {
    seen.insert(write_graph6(g));
    ++total;
  }
  EXPECT_EQ(total, 1024U);
  EXPECT_EQ(seen.size(), 1024U);
}

TEST(CorpusReaderTest, ReadsRecordsAndSkipsBlankLines) {
  std::istringstream in("A_\n\n@\r\nD??\n");
  CorpusReader r(in);
  EXPECT_EQ(r.next(), complete_graph(2));
  EXPECT_EQ(r.next()->order(), 1U);
  EXPECT_EQ(r.next(), Graph(5));
  EXPECT_EQ(r.line(), 4U);
  EXPECT_FALSE(r.next().has_value());
}

TEST(CorpusReaderTest, EmptyInputYieldsNothing) {
  std::istringstream in("");
  CorpusReader r(in);
  EXPECT_FALSE(r.next().has_value());
  std::istringstream empty_corpus("");
  CorpusReader r2(empty_corpus);
  EXPECT_TRUE(sweep_corpus(r2, SweepOptions{}).empty());
}

TEST(CorpusReaderTest, StrictModeReportsLineNumber) {
  std::istringstream in("A_\nA@\n");
  CorpusReader r(in);
  ASSERT_TRUE(r.next().has_value());
  try {
    r.next();
    FAIL() << "expected CorpusError";
  } catch (const CorpusError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
}

TEST(CorpusReaderTest, LenientModeSkips) {
  std::istringstream in("A_\nbad record\nA?\n");
  CorpusReader r(in, false);
  EXPECT_TRUE(r.next().has_value());
  EXPECT_EQ(r.next(), Graph(2));
  EXPECT_EQ(r.skipped(), 1U);
  EXPECT_THROW(stream_corpus("/nonexistent/corpus.g6"), std::runtime_error);
}

TEST(ParseChecksTest, NamesAndAll) {
  EXPECT_EQ(parse_checks("all").size(), kAllChecks.size());
  EXPECT_EQ(parse_checks("lower,upper_nm"),
            (std::vector<Check>{Check::kUpperNm, Check::kLower}));
  EXPECT_THROW(parse_checks("nope"), std::invalid_argument);
  for (Check c : kAllChecks) EXPECT_EQ(parse_check(to_string(c)), c);
}

TEST(SweepTest, LowerBoundWitnessesAtFiveAreTheStars) {
  const SweepReport rep = sweep_labeled(5, only({Check::kLower}));
  const CheckTally& t = rep.checks.at(Check::kLower);
  EXPECT_EQ(t.violated, 0U);
  EXPECT_EQ(t.witness_count, 5U);
  for (const std::string& w : t.witnesses) {
    const Graph g = parse_graph6(w);
    EXPECT_EQ(g.edge_count(), 4U);
    std::size_t centres = 0;
    for (std::size_t v = 0; v < 5; ++v) centres += g.degree(v) == 4;
    EXPECT_EQ(centres, 1U) << w;
  }
  EXPECT_TRUE(t.consistent());
}

TEST(SweepTest, EvenUpperBoundHoldsAtFour) {
  const SweepReport rep = sweep_labeled(4, only({Check::kUpperNm}));
  const CheckTally& t = rep.checks.at(Check::kUpperNm);
  EXPECT_EQ(t.violated, 0U);
  EXPECT_EQ(t.checked, 64U);
  EXPECT_TRUE(rep.passed());
}

TEST(SweepTest, OrderBoundWitnessesOnlyAtTwo) {
  const SweepReport two = sweep_labeled(2, only({Check::kUpperN}));
  EXPECT_EQ(two.checks.at(Check::kUpperN).witnesses,
            (std::vector<std::string>{"A_"}));
  for (std::size_t n = 3; n <= 6; ++n) {
    const CheckTally& t = sweep_labeled(n, only({Check::kUpperN})).checks.at(Check::kUpperN);
    EXPECT_EQ(t.witness_count, 0U) << n;
    EXPECT_EQ(t.violated, 0U) << n;
  }
}

TEST(SweepTest, SevenVertexLemmaPreconditionAndOrderBound) {
  const SweepReport rep = sweep_labeled(7, only({Check::kLemma1, Check::kUpperN}));
  const CheckTally& u = rep.checks.at(Check::kUpperN);
  EXPECT_EQ(u.witness_count, 0U);
  EXPECT_EQ(u.violated, 0U);
  const CheckTally& t = rep.checks.at(Check::kLemma1);
  // sum_{m<6} C(21, m)
  EXPECT_EQ(t.not_applicable, 1U + 21 + 210 + 1330 + 5985 + 20349);
  EXPECT_EQ(t.checked, 2097152U);
  EXPECT_EQ(t.holds + t.violated, 2097152U - t.not_applicable);
  EXPECT_TRUE(t.consistent());
}

TEST(SweepTest, ParallelMatchesSerial) {
  SweepOptions serial;
  SweepOptions parallel;
  parallel.jobs = 4;
  const SweepReport a = sweep_labeled(6, serial);
  const SweepReport b = sweep_labeled(6, parallel);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(SweepTest, GraphListGroupsByOrder) {
  const auto reports = sweep_graphs(
      {petersen_graph(), cycle_graph(5), star_graph(5), complete_graph(2)},
      SweepOptions{});
  ASSERT_EQ(reports.size(), 3U);
  EXPECT_EQ(reports[0].n, 2U);
  EXPECT_EQ(reports[1].n, 5U);
  EXPECT_EQ(reports[1].graph_count, 2U);
  for (const auto& r : reports) {
    for (const auto& [c, t] : r.checks) EXPECT_TRUE(t.consistent());
    EXPECT_EQ(r.checks.at(Check::kUpperN).violated, 0U);
  }
}

}  // namespace
}  // namespace huckel
