#include "qf/table.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

using namespace qf;

namespace {

bool same_cell(const Cell& a, const Cell& b) {
  if (a.index() != b.index()) return false;
  if (const auto* x = std::get_if<double>(&a)) {
    const double y = std::get<double>(b);
    return (std::isnan(*x) && std::isnan(y)) || std::memcmp(x, &y, sizeof y) == 0;
  }
  return a == b;
}

void expect_same(const Table& a, const Table& b) {
  ASSERT_EQ(a.columns, b.columns);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    for (std::size_t j = 0; j < a.columns.size(); ++j) {
      EXPECT_TRUE(same_cell(a.rows[i][j], b.rows[i][j])) << "row " << i << " column " << a.columns[j];
    }
  }
}

Table random_table(std::mt19937_64& rng, int rows) {
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::uniform_int_distribution<int> e(-300, 300);
  Table t{{"x", "label", "ok", "tiny"}, {}};
  const char* labels[] = {"plain", "with,comma", "with \"quotes\"", "", "semi;colon"};
  for (int i = 0; i < rows; ++i) {
    t.add_row({u(rng), std::string(labels[i % 5]), i % 2 == 0, std::ldexp(u(rng), e(rng))});
  }
  return t;
}

}  // namespace

TEST(Emit, EmptyTableIsHeaderOnly) {
  const Table t{{"a", "b"}, {}};
  EXPECT_EQ(to_csv(t), "\"a\",\"b\"\n");
  EXPECT_EQ(to_json(t), "[]\n");
}

TEST(Emit, OneRowIsHeaderPlusOneLine) {
  Table t{{"value", "name"}, {}};
  t.add_row({0.1, std::string("x")});
  EXPECT_EQ(to_csv(t), "\"value\",\"name\"\n0.10000000000000001,\"x\"\n");
}

TEST(Emit, SeventeenSignificantDigits) {
  EXPECT_EQ(format_double(1.0 / 3.0), "0.33333333333333331");
  EXPECT_EQ(format_double(5.0), "5");
  EXPECT_EQ(format_double(-2.5e-300), "-2.5e-300");
  EXPECT_EQ(format_double(1e23), "9.9999999999999992e+22");
}

TEST(Emit, RowWidthIsChecked) {
  Table t{{"a"}, {}};
  EXPECT_THROW(t.add_row({1.0, 2.0}), TableError);
}

TEST(Emit, JsonRejectsInfinity) {
  Table t{{"a"}, {}};
  t.add_row({std::numeric_limits<double>::infinity()});
  EXPECT_THROW(to_json(t), TableError);
  EXPECT_NO_THROW(to_csv(t));
}

TEST(RoundTrip, CsvAndJson) {
  std::mt19937_64 rng(1);
  for (int rows : {0, 1, 7, 40}) {
    const Table t = random_table(rng, rows);
    expect_same(parse_csv(to_csv(t)), t);
    // An empty JSON array carries no column names.
    if (rows > 0) expect_same(parse_json(to_json(t)), t);
  }
}

TEST(RoundTrip, NanSurvivesBothFormats) {
  Table t{{"a"}, {}};
  t.add_row({std::nan("")});
  expect_same(parse_csv(to_csv(t)), t);
  expect_same(parse_json(to_json(t)), t);
}

TEST(Parse, RejectsMalformedInput) {
  EXPECT_THROW(parse_csv(""), TableError);
  EXPECT_THROW(parse_csv("\"a\"\n\"unterminated\n"), TableError);
  EXPECT_THROW(parse_csv("\"a\",\"b\"\n1\n"), TableError);
  EXPECT_THROW(parse_csv("\"a\"\nabc\n"), TableError);
  EXPECT_THROW(parse_json("{\"a\": 1}"), TableError);
  EXPECT_THROW(parse_json("[{\"a\": [1]}]"), TableError);
}

TEST(EmitTable, WritesFileWithLfEndings) {
  const auto path = std::filesystem::temp_directory_path() / "qf_table_test.csv";
  Table t{{"a"}, {}};
  t.add_row({1.0});
  emit_table(t, Format::Csv, path.string());
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "\"a\"\n1\n");
  EXPECT_EQ(ss.str().find('\r'), std::string::npos);
  std::filesystem::remove(path);
}

TEST(EmitTable, UnwritablePathThrows) {
  Table t{{"a"}, {}};
  EXPECT_THROW(emit_table(t, Format::Csv, "/nonexistent-dir/x.csv"), TableError);
}

TEST(Format, Names) {
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_THROW(parse_format("xml"), TableError);
}
