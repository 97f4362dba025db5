//  Copyright 2026 The gnss Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <gtest/gtest.h>

#include "gnss/decision.hpp"
#include "gnss/tabio/csv.hpp"
#include "gnss/tabio/diff.hpp"
#include "gnss/tabio/fixtures.hpp"
#include "support/expect.hpp"
#include "support/oracle.hpp"

namespace gnss {
namespace {

using namespace gnss::literals;

std::vector<std::string> names(const std::vector<ObjectId>& ids) {
  std::vector<std::string> out;
  for (const auto& id : ids) out.push_back(id.str());
  return out;
}

int cell(const ComparisonMatrix& m, std::string_view object, std::string_view param) {
  std::size_t i = 0;
  while (m.rows[i].str() != object) ++i;
  return m.at(i, *index_of(m.cols, ParamKey::parse(param)));
}

TEST(ComparisonMatrix, PublishedCellsThatFollowTheRule) {
  const ComparisonMatrix m = comparison_matrix(soft_set_fixture("table10"));
  EXPECT_EQ(cell(m, "b4", "Cheap"), 6);
  EXPECT_EQ(cell(m, "b3", "Colorful"), 5);
  EXPECT_EQ(cell(m, "b5", "Polystyreneing"), 6);
  EXPECT_EQ(cell(m, "b2", "costly"), 2);
  EXPECT_EQ(cell(m, "b1", "Bright"), 2);
}

TEST(ComparisonMatrix, RecountedCellsDifferFromPrint) {
  const ComparisonMatrix m = comparison_matrix(soft_set_fixture("table10"));
  EXPECT_EQ(cell(m, "b5", "Cheap"), 1);
  EXPECT_EQ(cell(m, "b1", "costly"), 4);

  const auto printed = std::get<ComparisonMatrix>(fixture("table11"));
  EXPECT_EQ(cell(printed, "b5", "Cheap"), 7);
  EXPECT_EQ(cell(printed, "b1", "costly"), 0);

  const auto report = diff_tables(printed, m);
  EXPECT_EQ(report.compared, 25u);
  EXPECT_EQ(locations(report), "(b5,Cheap),(b1,costly)");
}

TEST(ComparisonMatrix, AgreesWithBruteForceOnFixture) {
  const SoftSet s = soft_set_fixture("table10");
  const ComparisonMatrix m = comparison_matrix(s);
  const auto oracle = testing::brute_force_matrix(s);
  for (std::size_t i = 0; i < s.object_count(); ++i) {
    for (std::size_t j = 0; j < s.param_count(); ++j) EXPECT_EQ(m.at(i, j), oracle[i][j]);
  }
}

TEST(ComparisonMatrix, SingleObjectIsAllZero) {
  const SoftSet s = parse_csv("U,a,b\nb1,(0.2, 0.3, 0.4),(1, 0, 0)\n");
  const ComparisonMatrix m = comparison_matrix(s);
  EXPECT_EQ(m.cells, (std::vector<int>{0, 0}));
}

TEST(ComparisonMatrix, TiesCountInEveryComponent) {
  const SoftSet s = parse_csv("U,a\nb1,(0.2, 0.3, 0.4)\nb2,(0.2, 0.3, 0.4)\n");
  EXPECT_EQ(comparison_matrix(s).cells, (std::vector<int>{1, 1}));
}

TEST(Scores, RowSumsOfRecountedMatrix) {
  const ScoreVector s = scores(comparison_matrix(soft_set_fixture("table10")));
  EXPECT_EQ(names(s.objects), (std::vector<std::string>{"b1", "b2", "b3", "b4", "b5"}));
  EXPECT_EQ(s.scores, (std::vector<int>{7, 2, 11, 19, 11}));

  const auto printed = std::get<ScoreVector>(fixture("scores"));
  EXPECT_EQ(printed.scores, (std::vector<int>{3, 2, 11, 19, 17}));
  for (std::size_t k : {1u, 2u, 3u}) EXPECT_EQ(s.scores[k], printed.scores[k]);
}

TEST(Scores, ZeroMatrixGivesZeroScores) {
  ComparisonMatrix m;
  m.rows = {ObjectId("x"), ObjectId("y")};
  m.cols = {ParamKey::atom("a"), ParamKey::atom("b")};
  m.cells = {0, 0, 0, 0};
  EXPECT_EQ(scores(m).scores, (std::vector<int>{0, 0}));
}

TEST(Rank, TieGroupsShareAPlace) {
  const Ranking r = rank(scores(comparison_matrix(soft_set_fixture("table10"))));
  ASSERT_EQ(r.order.size(), 5u);
  EXPECT_EQ(r.order[0], (RankEntry{ObjectId("b4"), 19, 1}));
  EXPECT_EQ(r.order[1], (RankEntry{ObjectId("b3"), 11, 2}));
  EXPECT_EQ(r.order[2], (RankEntry{ObjectId("b5"), 11, 2}));
  EXPECT_EQ(r.order[3], (RankEntry{ObjectId("b1"), 7, 3}));
  EXPECT_EQ(r.order[4], (RankEntry{ObjectId("b2"), 2, 4}));
  EXPECT_EQ(names(r.winners), (std::vector<std::string>{"b4"}));
  EXPECT_EQ(r.choice().str(), "b4");
}

TEST(Decide, PublishedWinner) {
  const SoftSet s = soft_set_fixture("table10");
  const Ranking r = decide(s, s.params());
  EXPECT_EQ(r.choice().str(), "b4");
  EXPECT_EQ(r.order.front().score, 19);
}

TEST(Decide, SingleObjectWinsWithZero) {
  const SoftSet s = parse_csv("U,a\nonly,(0.2, 0.3, 0.4)\n");
  const Ranking r = decide(s, s.params());
  EXPECT_EQ(r.choice().str(), "only");
  EXPECT_EQ(r.order.front().score, 0);
}

TEST(Decide, IdenticalRowsAreAllWinners) {
  const SoftSet s = parse_csv("U,a,b\nx,(0.2, 0.3, 0.4),(0.5, 0.5, 0.5)\ny,(0.2, 0.3, 0.4),(0.5, 0.5, 0.5)\n");
  const Ranking r = decide(s, s.params());
  EXPECT_EQ(names(r.winners), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(r.choice().str(), "x");
}

TEST(Restrict, SelectsInRequestedOrder) {
  const SoftSet s = soft_set_fixture("table10");
  const std::vector<ParamKey> want = {ParamKey::parse("bright"), ParamKey::parse("cheap")};
  const SoftSet r = restrict(s, want);
  ASSERT_EQ(r.param_count(), 2u);
  EXPECT_EQ(r.params()[0].to_string(), "Bright");
  EXPECT_EQ(r.column(1), s.approximation(want[1]));
  EXPECT_EQ(restrict(s, s.params()), s);

  const std::vector<ParamKey> unknown = {ParamKey::parse("silk")};
  EXPECT_GNSS_ERROR(restrict(s, unknown), ErrorKind::UnknownParameter);
  EXPECT_GNSS_ERROR(restrict(s, std::vector<ParamKey>{}), ErrorKind::EmptyParameterSet);
}

TEST(Restrict, ErrataFreeColumnsMatchPrintedSums) {
  const SoftSet s = soft_set_fixture("table10");
  const std::vector<ParamKey> clean = {ParamKey::parse("Colorful"), ParamKey::parse("Polystyreneing"),
                                       ParamKey::parse("Bright")};
  const ScoreVector sc = scores(comparison_matrix(restrict(s, clean)));
  const auto printed = std::get<ComparisonMatrix>(fixture("table11"));
  for (std::size_t i = 0; i < 5; ++i) {
    int sum = 0;
    for (const auto& k : clean) sum += printed.at(i, *index_of(printed.cols, k));
    EXPECT_EQ(sc.scores[i], sum) << sc.objects[i].str();
  }
}

}  // namespace
}  // namespace gnss
