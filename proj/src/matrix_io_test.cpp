#include "edmsphere/matrix_io.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "edmsphere/errors.hpp"

namespace edmsphere {
namespace {

int parse_line(const char* text) {
  try {
    parse_matrix(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(ParseMatrix, TextWithComments) {
  const auto m = parse_matrix("# square\n2\n0 4 # first\n\n4 0\n");
  ASSERT_EQ(m.rows(), 2);
  EXPECT_EQ(m(0, 1), 4.0);
  EXPECT_EQ(m(1, 0), 4.0);
}

TEST(ParseMatrix, Json) {
  const auto m = parse_matrix(R"({"n": 2, "rows": [[0, 2.5], [2.5, 0]]})");
  EXPECT_EQ(m(1, 0), 2.5);
  EXPECT_THROW(parse_matrix(R"({"n": 3, "rows": [[0]]})"), ParseError);
  EXPECT_THROW(parse_matrix(R"({"n": 1, "rows": [["a"]]})"), ParseError);
  EXPECT_THROW(parse_matrix("{"), ParseError);
}

TEST(ParseMatrix, ErrorLines) {
  EXPECT_EQ(parse_line("2\n0 1\n1\n"), 3);
  EXPECT_EQ(parse_line("2\n0 1\n1 0 7\n"), 3);
  EXPECT_EQ(parse_line("2\n0 x\n1 0\n"), 2);
  EXPECT_EQ(parse_line("2\n0 1\n"), 3);
  EXPECT_EQ(parse_line("2\n0 1\n1 0\n5 5\n"), 4);
  EXPECT_EQ(parse_line("-1\n"), 1);
  EXPECT_EQ(parse_line(""), 1);
}

TEST(FormatMatrix, RoundTripsExactly) {
  Eigen::Matrix2d m;
  m << 0.0, 1.0 / 3.0, std::sqrt(2.0), 1e-300;
  const auto back = parse_matrix(format_matrix_text(m));
  EXPECT_TRUE(back == m);
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

}  // namespace
}  // namespace edmsphere
