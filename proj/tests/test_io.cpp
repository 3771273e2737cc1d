#include "oracles.hpp"

#include "starsuper/constructions.hpp"
#include "starsuper/errors.hpp"
#include "starsuper/io.hpp"

#include <gtest/gtest.h>

using namespace starsuper;

TEST(Interchange, RoundTripsRandomAlgebras) {
  oracle::Gen gen(61);
  for (int trial = 0; trial < 25; ++trial) {
    StarSuperAlgebra a = build_family(gen.family(3));
    switch (gen.integer(0, 3)) {
      case 0:
        a = direct_sum(a, build_family(gen.family(2)));
        break;
      case 1:
        a = ut_star({{gen.family(2), gen.family(2)}, {gen.integer(0, 1), gen.integer(0, 1)}}).algebra;
        break;
      case 2:
        a = tensor_nilpotent_extension(a, commutative_nilpotent(gen.integer(1, 2)));
        break;
      default:
        break;
    }
    const StarSuperAlgebra back = parse_algebra(serialize_algebra(a));
    EXPECT_EQ(back, a);
    EXPECT_EQ(back.labels(), a.labels());
    EXPECT_EQ(back.wedderburn(), a.wedderburn());
    EXPECT_TRUE(validate(back).empty());
  }
}

TEST(Interchange, DocumentLayout) {
  const std::string doc = serialize_algebra(mn_cmn(1, Diamond::Transpose, true));
  EXPECT_NE(doc.find("\"dim\": 2"), std::string::npos);
  EXPECT_NE(doc.find("\"-1/1\""), std::string::npos);  // star(c e11) = -c e11
  EXPECT_NE(doc.find("\"family\": \"mn-cmn\""), std::string::npos);
  EXPECT_NE(doc.find("\"sign\": \"minus\""), std::string::npos);
}

TEST(Interchange, HandWrittenDocument) {
  const StarSuperAlgebra a = parse_algebra(R"({
    "dim": 2, "labels": ["u", "v"],
    "structure": [[0, 0, 0, "1/1"], [0, 1, 1, "1"], [1, 0, 1, "1/1"]],
    "grading": [0, 1],
    "involution": [[0, 0, "1/1"], [1, 1, "-2/2"]]
  })");
  EXPECT_EQ(a.dim(), 2U);
  EXPECT_FALSE(a.wedderburn().has_value());
  EXPECT_EQ(a.star(unit_vec(2, 1)), scaled(unit_vec(2, 1), -1));
  EXPECT_TRUE(validate(a).empty());
}

TEST(Interchange, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_algebra("{"), ParseError);
  EXPECT_THROW(parse_algebra("[]"), ParseError);
  EXPECT_THROW(parse_algebra(R"({"dim": 1, "labels": ["a"], "structure": [], "grading": [0]})"), ParseError);
  EXPECT_THROW(parse_algebra(R"({"dim": 1, "labels": ["a", "b"], "structure": [], "grading": [0], "involution": []})"),
               ParseError);
  EXPECT_THROW(parse_algebra(R"({"dim": 1, "labels": ["a"], "structure": [[0, 0, 1, "1/1"]], "grading": [0],
                                 "involution": [[0, 0, "1/1"]]})"),
               ParseError);
  EXPECT_THROW(parse_algebra(R"({"dim": 1, "labels": ["a"], "structure": [[0, 0, 0, 1]], "grading": [0],
                                 "involution": [[0, 0, "1/1"]]})"),
               ParseError);
  EXPECT_THROW(parse_algebra(R"({"dim": 1, "labels": ["a"], "structure": [], "grading": [2],
                                 "involution": [[0, 0, "1/1"]]})"),
               ParseError);
  EXPECT_THROW(parse_algebra(R"({"dim": 1, "labels": ["a"], "structure": [], "grading": [0],
                                 "involution": [[0, 0, "1/1"]],
                                 "wedderburn": {"blocks": [{"indices": [0], "family": "mhl-t", "params": {"h": 1}}]}})"),
               ParseError);
}

TEST(Interchange, FileRoundTrip) {
  const std::string path = ::testing::TempDir() + "io_round_trip.json";
  const StarSuperAlgebra a = m_hl_exchange(1, 1);
  write_algebra_file(a, path);
  EXPECT_EQ(read_algebra_file(path), a);
  EXPECT_THROW(read_algebra_file(path + ".missing"), ParseError);
}

TEST(Csv, HeaderQuotingAndDecimals) {
  const std::vector<ReportRow> rows = {compare_row("threshold", "m(1,1)", "y+", "", "3", "3"),
                                       compare_row("codim", "plain", "graded", "2", "13", "12"),
                                       {"note", "say \"hi\"", "", "", "", "x", "info"}};
  EXPECT_EQ(to_csv(rows),
            "check,subject,kind,n,expected,actual,status\n"
            "threshold,\"m(1,1)\",y+,,3,3,pass\n"
            "codim,plain,graded,2,13,12,fail\n"
            "note,\"say \"\"hi\"\"\",,,,x,info\n");
  EXPECT_EQ(format_decimal(2.0), "2.000000");
  EXPECT_EQ(format_decimal(3.6055512754639891), "3.605551");
}
