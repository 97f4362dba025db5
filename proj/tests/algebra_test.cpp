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

#include "gnss/algebra.hpp"
#include "gnss/tabio/csv.hpp"
#include "gnss/tabio/diff.hpp"
#include "gnss/tabio/fixtures.hpp"
#include "support/expect.hpp"

namespace gnss {
namespace {

using namespace gnss::literals;

ParamKey key(std::string_view text) { return ParamKey::parse(text); }

const Triple& cell_of(const SoftSet& s, std::string_view param, std::string_view object) {
  return s.approximation(key(param)).at(object);
}

TEST(Union, ReproducesPublishedTableOnEveryCell) {
  const SoftSet got = unite(soft_set_fixture("table4"), soft_set_fixture("table5"));
  const SoftSet want = soft_set_fixture("table6");
  const auto report = diff_tables(want, got);
  EXPECT_EQ(report.compared, 20u);
  EXPECT_TRUE(report.empty()) << locations(report);
}

TEST(Union, KeepsLeftOrderThenRightOnlyParameters) {
  const SoftSet got = unite(soft_set_fixture("table4"), soft_set_fixture("table5"));
  ASSERT_EQ(got.param_count(), 4u);
  EXPECT_EQ(got.params()[0].to_string(), "Bright");
  EXPECT_EQ(got.params()[2].to_string(), "Colorful");
  EXPECT_EQ(got.params()[3].to_string(), "Costly");
}

TEST(Intersection, MatchesPublishedRowsAndCorrectsTwoCells) {
  const SoftSet got = intersect(soft_set_fixture("table4"), soft_set_fixture("table5"));
  ASSERT_EQ(got.param_count(), 1u);
  for (const char* b : {"b1", "b2", "b5"}) {
    EXPECT_EQ(cell_of(got, "Colorful", b), cell_of(soft_set_fixture("table7"), "Colorful", b)) << b;
  }
  EXPECT_EQ(cell_of(got, "Colorful", "b3"), (Triple{0.5_dg, 0.3_dg, 0.4_dg}));
  EXPECT_EQ(cell_of(got, "Colorful", "b4"), (Triple{0.2_dg, 0.2_dg, 0.3_dg}));

  const auto report = diff_tables(soft_set_fixture("table7"), got);
  EXPECT_EQ(locations(report), "(b3,Colorful),(b4,Colorful)");
}

TEST(Intersection, DisjointParametersAreRejected) {
  const SoftSet a = soft_set_fixture("table10");
  const SoftSet b = soft_set_fixture("ex3_20_F");
  EXPECT_GNSS_ERROR(intersect(soft_set_fixture("table2"), soft_set_fixture("table10")),
                    ErrorKind::UniverseMismatch);
  EXPECT_GNSS_ERROR(intersect(soft_set_fixture("table4"), complement(soft_set_fixture("table5"))),
                    ErrorKind::EmptyParameterOverlap);
  EXPECT_GNSS_ERROR(unite(a, b), ErrorKind::UniverseMismatch);
}

TEST(And, ReproducesPublishedTableOnEveryCell) {
  const SoftSet got = conjoin(soft_set_fixture("table4"), soft_set_fixture("table5"));
  EXPECT_EQ(got.param_count(), 6u);
  EXPECT_EQ(got.params()[0].to_string(), "Bright|Costly");
  const auto report = diff_tables(soft_set_fixture("table8"), got);
  EXPECT_EQ(report.compared, 30u);
  EXPECT_TRUE(report.empty()) << locations(report);
}

// Two printed cells of the OR table disagree with the max/min/min rule.
// Expected values here come from recomputing those cells by hand from the inputs.
TEST(Or, DiffersFromPublishedTableOnlyAtTwoErrata) {
  const SoftSet got = disjoin(soft_set_fixture("table4"), soft_set_fixture("table5"));
  const auto report = diff_tables(soft_set_fixture("table9"), got);
  EXPECT_EQ(report.compared, 30u);
  EXPECT_EQ(locations(report), "(b5,bright|colorful),(b3,colorful|colorful)");
  // Bright(b5) = (0.6,0.3,0.2), Colorful'(b5) = (0.5,0.6,0.4).
  EXPECT_EQ(cell_of(got, "bright|colorful", "b5"), (Triple{0.6_dg, 0.3_dg, 0.2_dg}));
  // Colorful(b3) = (0.5,0.7,0.2), Colorful'(b3) = (0.6,0.3,0.4).
  EXPECT_EQ(cell_of(got, "colorful|colorful", "b3"), (Triple{0.6_dg, 0.3_dg, 0.2_dg}));
}

TEST(Complement, ReproducesPublishedApproximations) {
  const SoftSet got = complement(soft_set_fixture("ex3_3"));
  const auto report = diff_tables(soft_set_fixture("ex3_11"), got);
  EXPECT_EQ(report.compared, 20u);
  EXPECT_TRUE(report.empty()) << locations(report);
  EXPECT_EQ(got.params()[0].to_string(), "not bright");
}

TEST(Complement, IsAnInvolution) {
  const SoftSet a = soft_set_fixture("table1");
  EXPECT_EQ(complement(complement(a)), a);
}

TEST(Subset, PublishedPairHoldsOneWayOnly) {
  const SoftSet f = soft_set_fixture("table2");
  const SoftSet g = soft_set_fixture("table3");
  EXPECT_TRUE(is_subset(f, g));
  EXPECT_FALSE(is_subset(g, f));
  EXPECT_FALSE(soft_equal(f, g));
  EXPECT_TRUE(soft_equal(f, f));
}

TEST(Subset, RequiresEveryParameter) {
  const SoftSet t4 = soft_set_fixture("table4");
  const SoftSet t6 = soft_set_fixture("table6");
  EXPECT_TRUE(is_subset(t4, unite(t4, soft_set_fixture("table5"))));
  EXPECT_FALSE(is_subset(t6, t4));
}

TEST(SoftEqual, IgnoresParameterOrder) {
  const SoftSet a = soft_set_fixture("table5");
  const SoftSet swapped(a.shared_universe(),
                        {{a.params()[1], {a.column(1).members().begin(), a.column(1).members().end()}},
                         {a.params()[0], {a.column(0).members().begin(), a.column(0).members().end()}}});
  EXPECT_TRUE(soft_equal(a, swapped));
  EXPECT_FALSE(a == swapped);
}

TEST(NullSet, PublishedExampleIsNull) {
  const SoftSet e = soft_set_fixture("ex3_13");
  EXPECT_TRUE(is_null(e));
  EXPECT_EQ(null_set(e.shared_universe(), {e.params().begin(), e.params().end()}), e);
  EXPECT_FALSE(is_null(soft_set_fixture("table1")));
  EXPECT_GNSS_ERROR(null_set(e.universe(), {}), ErrorKind::EmptyParameterSet);
}

// Union takes min of I and F, so the null triple zeroes them and keeps T.
TEST(NullSet, UnionKeepsTruthOnly) {
  const SoftSet a = soft_set_fixture("table1");
  const SoftSet u = unite(a, null_set(a.shared_universe(), {a.params().begin(), a.params().end()}));
  for (std::size_t p = 0; p < a.param_count(); ++p) {
    for (std::size_t k = 0; k < a.object_count(); ++k) {
      EXPECT_EQ(u.cell(p, k), (Triple{a.cell(p, k).truth, 0_dg, 0_dg}));
    }
  }
}

TEST(Distributivity, PublishedThreeSetInstance) {
  const SoftSet f = soft_set_fixture("ex3_20_F");
  const SoftSet g = soft_set_fixture("ex3_20_G");
  const SoftSet k = soft_set_fixture("ex3_20_K");

  const SoftSet lhs = unite(f, intersect(g, k));
  const SoftSet rhs = intersect(unite(f, g), unite(f, k));
  const SoftSet want = parse_csv(
      "U,e\n"
      "b1,\"(0.6, 0.2, 0.1)\"\n"
      "b2,\"(0.4, 0.1, 0.5)\"\n"
      "b3,\"(0.4, 0.1, 0.7)\"\n");
  EXPECT_EQ(lhs, want);
  EXPECT_EQ(rhs, want);

  EXPECT_EQ(unite(f, g), parse_csv("U,e\nb1,(0.6, 0.2, 0.1)\nb2,(0.7, 0.2, 0.4)\nb3,(0.4, 0.1, 0.7)\n"));
  EXPECT_EQ(unite(f, k), parse_csv("U,e\nb1,(0.6, 0.3, 0.1)\nb2,(0.4, 0.1, 0.5)\nb3,(0.9, 0.1, 0.2)\n"));
  EXPECT_EQ(intersect(g, k),
            parse_csv("U,e\nb1,(0.2, 0.2, 0.6)\nb2,(0.4, 0.1, 0.6)\nb3,(0.1, 0.1, 0.7)\n"));
}

TEST(DeMorgan, PublishedTablesUnderPairNegation) {
  const SoftSet a = soft_set_fixture("table4");
  const SoftSet b = soft_set_fixture("table5");
  EXPECT_EQ(complement(conjoin(a, b)), disjoin(complement(a), complement(b)));
  EXPECT_EQ(complement(disjoin(a, b)), conjoin(complement(a), complement(b)));
  EXPECT_EQ(complement(conjoin(a, b)).params()[0].to_string(), "not Bright|not Costly");
}

}  // namespace
}  // namespace gnss
