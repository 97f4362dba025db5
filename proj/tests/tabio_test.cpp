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

#include <fstream>
#include <sstream>

#include "gnss/algebra.hpp"
#include "gnss/decision.hpp"
#include "gnss/tabio/csv.hpp"
#include "gnss/tabio/diff.hpp"
#include "gnss/tabio/fixtures.hpp"
#include "gnss/tabio/structured.hpp"
#include "gnss/tabio/text.hpp"
#include "support/expect.hpp"

namespace gnss {
namespace {

using namespace gnss::literals;

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(GNSS_TEST_DATA_DIR) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Location of the error thrown by `parse_csv(text)`.
std::optional<Location> csv_error_at(std::string_view text, ErrorKind expected) {
  try {
    parse_csv(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), expected) << e.what();
    return e.location();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return std::nullopt;
}

TEST(Text, SplitsQuotedAndParenthesizedFields) {
  EXPECT_EQ(split_csv_record(R"x(b1,"(0.5, 0.6, 0.3)",(0.1, 0.2, 0.3))x"),
            (std::vector<std::string>{"b1", "(0.5, 0.6, 0.3)", "(0.1, 0.2, 0.3)"}));
  EXPECT_EQ(split_csv_record(R"("a ""b""", c )"), (std::vector<std::string>{"a \"b\"", "c"}));
  EXPECT_GNSS_ERROR(split_csv_record(R"("open,)"), ErrorKind::MalformedCell);
  EXPECT_EQ(quote_csv_field("(0.5, 0.6, 0.3)"), "\"(0.5, 0.6, 0.3)\"");
  EXPECT_EQ(quote_csv_field("plain"), "plain");
}

TEST(Text, ParsesTriplesWithOptionalSpaces) {
  EXPECT_EQ(parse_triple("(0.5,0.6,0.3)"), (Triple{0.5_dg, 0.6_dg, 0.3_dg}));
  EXPECT_EQ(parse_triple("( 0.5 , 0.6 , 0.3 )"), (Triple{0.5_dg, 0.6_dg, 0.3_dg}));
  EXPECT_GNSS_ERROR(parse_triple("(0.5, 0.6)"), ErrorKind::MalformedCell);
  EXPECT_GNSS_ERROR(parse_triple("0.5, 0.6, 0.3"), ErrorKind::MalformedCell);
  EXPECT_GNSS_ERROR(parse_triple("(1.2, 0, 0)"), ErrorKind::DegreeOutOfRange);
}

TEST(Csv, ParsesPublishedCell) {
  const SoftSet s = parse_csv("U,bright,cheap\nb1,\"(0.5, 0.6, 0.3)\",\"(0.6, 0.3, 0.5)\"\n");
  EXPECT_EQ(s.approximation(ParamKey::parse("bright")).at("b1"), (Triple{0.5_dg, 0.6_dg, 0.3_dg}));
}

TEST(Csv, ParsesNegatedAndPairParameters) {
  const SoftSet s = parse_csv("U,not bright,bright|costly,(a|b)|c\nb1,(0, 0, 0),(0, 0, 0),(1, 0, 0)\n");
  EXPECT_TRUE(s.params()[0].negated());
  EXPECT_TRUE(s.params()[1].is_pair());
  EXPECT_TRUE(s.params()[2].left().is_pair());
}

TEST(Csv, ErrorsCarryRowAndColumn) {
  EXPECT_EQ(csv_error_at("U,a,b\nb1,(0.1, 0.1, 0.1),(1.2, 0, 0)\n", ErrorKind::DegreeOutOfRange),
            (Location{2, 3}));
  EXPECT_EQ(csv_error_at("U,a\nb1,(0.1, 0.1)\n", ErrorKind::MalformedCell), (Location{2, 2}));
  EXPECT_EQ(csv_error_at("U,a\nb1,(0.1, 0.1, 0.1)\nb1,(0.1, 0.1, 0.1)\n", ErrorKind::DuplicateObjectId),
            (Location{3, 1}));
  EXPECT_EQ(csv_error_at("U,a,b\nb1,(0.1, 0.1, 0.1)\n", ErrorKind::RaggedRow)->row, 2u);
  EXPECT_EQ(csv_error_at("U,a\nb1,(0.6, 0.6, 0.6)\n", ErrorKind::ConstraintViolation),
            (Location{2, 2}));
  EXPECT_EQ(csv_error_at("U,a,A\nb1,(0, 0, 0),(0, 0, 0)\n", ErrorKind::DuplicateParameter),
            (Location{1, 3}));
  csv_error_at("", ErrorKind::EmptyTable);
  csv_error_at("U,a\n", ErrorKind::EmptyTable);
  csv_error_at("U\nb1\n", ErrorKind::EmptyParameterSet);
  csv_error_at("X,a\nb1,(0, 0, 0)\n", ErrorKind::MalformedCell);
}

TEST(Csv, ConstraintModeSelectsWhatIsAccepted) {
  const std::string text = "U,a\nb1,(0.6, 0.6, 0.6)\n";
  EXPECT_GNSS_ERROR(parse_csv(text, ConstraintMode::GnsMin), ErrorKind::ConstraintViolation);
  EXPECT_NO_THROW(parse_csv(text, ConstraintMode::NeutrosophicOnly));
  EXPECT_GNSS_ERROR(parse_csv(serialize_csv(soft_set_fixture("table10")), ConstraintMode::GnsSumLiteral),
                    ErrorKind::ConstraintViolation);
}

TEST(Csv, SerializationMatchesGoldenFile) {
  EXPECT_EQ(serialize_csv(soft_set_fixture("table10")), read_data("table10.golden.csv"));
}

TEST(Csv, NullSetSerializesAsZeros) {
  const SoftSet n = null_set(Universe::of({"b1"}), {ParamKey::atom("a")});
  EXPECT_EQ(serialize_csv(n), "U,a\nb1,\"(0, 0, 0)\"\n");
}

TEST(Csv, SerializationIsIdempotent) {
  for (const auto name : fixture_names()) {
    if (!std::holds_alternative<SoftSet>(fixture(name))) continue;
    const std::string once = serialize_csv(soft_set_fixture(name));
    EXPECT_EQ(serialize_csv(parse_csv(once)), once) << name;
  }
}

TEST(Csv, MatrixAndScoreTablesRoundTrip) {
  const auto m = comparison_matrix(soft_set_fixture("table10"));
  EXPECT_EQ(parse_matrix_csv(serialize_matrix_csv(m)), m);
  const auto s = scores(m);
  EXPECT_EQ(parse_scores_csv(serialize_scores_csv(s)), s);
  EXPECT_GNSS_ERROR(parse_matrix_csv("U,a\nb1,x\n"), ErrorKind::MalformedCell);
}

TEST(Structured, PublishedTableRoundTrips) {
  const SoftSet t4 = soft_set_fixture("table4");
  const std::string text = serialize_structured(t4);
  EXPECT_EQ(parse_structured(text), t4);
  EXPECT_EQ(serialize_structured(parse_structured(text)), text);
}

TEST(Structured, PairKeysRoundTrip) {
  const SoftSet and_table = conjoin(soft_set_fixture("table4"), complement(soft_set_fixture("table5")));
  EXPECT_EQ(parse_structured(serialize_structured(and_table)), and_table);
}

TEST(Structured, RejectsUnknownFieldsByName) {
  try {
    parse_structured(R"({"universe":["b1"],"parameters":[{"name":"a"}],"cells":{},"colour":1})");
    ADD_FAILURE() << "accepted an unknown field";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownField);
    EXPECT_NE(std::string(e.what()).find("colour"), std::string::npos) << e.what();
  }
}

TEST(Structured, RejectsWrongArity) {
  EXPECT_GNSS_ERROR(
      parse_structured(
          R"({"universe":["b1"],"parameters":[{"name":"a"}],"cells":{"a":{"b1":["0.5","0.6"]}}})"),
      ErrorKind::MalformedCell);
}

TEST(Structured, RejectsMalformedDocuments) {
  EXPECT_GNSS_ERROR(parse_structured("{not json"), ErrorKind::MalformedDocument);
  EXPECT_GNSS_ERROR(parse_structured("[]"), ErrorKind::MalformedDocument);
  EXPECT_GNSS_ERROR(
      parse_structured(
          R"({"universe":["b1"],"parameters":[{"name":"a"}],"cells":{"a":{"b1":["1.5","0","0"]}}})"),
      ErrorKind::DegreeOutOfRange);
}

TEST(Fixtures, PublishedValues) {
  EXPECT_EQ(soft_set_fixture("table10").approximation(ParamKey::parse("Cheap")).at("b1"),
            (Triple{0.6_dg, 0.3_dg, 0.4_dg}));
  const auto t11 = std::get<ComparisonMatrix>(fixture("table11"));
  EXPECT_EQ(t11.at(4, 0), 7);
  EXPECT_EQ(soft_set_fixture("ex3_3"), soft_set_fixture("table1"));
  EXPECT_GNSS_ERROR(fixture("table12"), ErrorKind::UnknownFixture);
  EXPECT_GNSS_ERROR(soft_set_fixture("table11"), ErrorKind::UnknownFixture);
}

TEST(Fixtures, EveryFixtureParsesWithoutMinViolations) {
  for (const auto name : fixture_names()) {
    const Fixture f = fixture(name);
    if (const auto* s = std::get_if<SoftSet>(&f)) {
      EXPECT_FALSE(s->first_violation(ConstraintMode::GnsMin).has_value()) << name;
      EXPECT_NO_THROW(parse_csv(fixture_csv(name), ConstraintMode::GnsMin)) << name;
    }
  }
}

TEST(Fixtures, ErrataCellsCarryNotes) {
  const TableDocument t7 = fixture_document("table7");
  EXPECT_EQ(t7.source, "Table 7");
  ASSERT_EQ(t7.notes.size(), 2u);
  EXPECT_EQ(t7.notes[0].object, "b3");
  EXPECT_TRUE(fixture_document("table6").notes.empty());
}

TEST(Diff, IdenticalTablesGiveEmptyReport) {
  const SoftSet t = soft_set_fixture("table8");
  const auto report = diff_tables(t, t);
  EXPECT_TRUE(report.empty());
  EXPECT_EQ(report.compared, 30u);
}

TEST(Diff, ShapeMismatchIsReported) {
  EXPECT_GNSS_ERROR(diff_tables(soft_set_fixture("table4"), soft_set_fixture("table5")),
                    ErrorKind::ShapeMismatch);
  EXPECT_GNSS_ERROR(diff_tables(soft_set_fixture("table4"), soft_set_fixture("table2")),
                    ErrorKind::ShapeMismatch);
}

TEST(Diff, ReportsExpectedAndActualValues) {
  const auto report = diff_tables(std::get<ComparisonMatrix>(fixture("table11")),
                                  comparison_matrix(soft_set_fixture("table10")));
  ASSERT_EQ(report.size(), 2u);
  EXPECT_EQ(report.cells[0].expected, 7);
  EXPECT_EQ(report.cells[0].actual, 1);
  EXPECT_EQ(report.cells[1].expected, 0);
  EXPECT_EQ(report.cells[1].actual, 4);
}

}  // namespace
}  // namespace gnss
