#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "altexp/errors.hpp"
#include "altexp/field_io.hpp"

using namespace altexp;

namespace {

SampleField random_field(int n, int N) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const GridSpec grid(n, N);
  SampleField f(n, N);
  for (const auto& k : grid.semidominant_points()) f.set(k, Complex(u(rng), u(rng) * 1e-7));
  return f;
}

}  // namespace

TEST(FieldIo, FormatNames) {
  EXPECT_EQ(parse_format("json"), FileFormat::json);
  EXPECT_EQ(parse_format("csv"), FileFormat::csv);
  EXPECT_THROW(parse_format("xml"), FormatError);
  EXPECT_EQ(format_from_path("a/b.csv"), FileFormat::csv);
  EXPECT_EQ(format_from_path("x.json"), FileFormat::json);
  EXPECT_FALSE(format_from_path("x.txt").has_value());
}

TEST(FieldIo, ShortestRoundTripDoubles) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.1), "0.1");
}

TEST(FieldIo, JsonRoundTripIsExact) {
  const auto f = random_field(3, 4);
  std::stringstream stream;
  write_json(stream, to_records(f));
  const auto back = from_records<SampleTag>(read_json(stream), std::nullopt);
  EXPECT_EQ(back.dimension(), 3);
  EXPECT_EQ(back.density(), 4);
  EXPECT_EQ(back.values(), f.values());
}

TEST(FieldIo, CsvRoundTripIsExact) {
  const auto f = random_field(2, 5);
  std::stringstream stream;
  write_csv(stream, to_records(f));
  const auto records = read_csv(stream);
  EXPECT_FALSE(records.N.has_value());
  EXPECT_THROW(from_records<SampleTag>(records, std::nullopt), FormatError);
  EXPECT_EQ(from_records<SampleTag>(records, 5).values(), f.values());
}

TEST(FieldIo, CsvErrorsCarryLineNumbers) {
  std::istringstream bad_value("key_1,key_2,re,im\n1,1,0.5,0\n1,2,abc,0\n");
  try {
    read_csv(bad_value);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  std::istringstream short_row("key_1,key_2,re,im\n1,1,0.5\n");
  EXPECT_THROW(read_csv(short_row), FormatError);
  std::istringstream bad_header("a,b,re,im\n");
  EXPECT_THROW(read_csv(bad_header), FormatError);
}

TEST(FieldIo, JsonSchemaErrors) {
  std::istringstream not_json("{ nope");
  EXPECT_THROW(read_json(not_json), FormatError);
  std::istringstream no_entries(R"({"n": 2, "N": 3})");
  EXPECT_THROW(read_json(no_entries), FormatError);
  std::istringstream wrong_key(R"({"n": 2, "N": 3, "entries": [{"key": [1], "re": 0, "im": 0}]})");
  EXPECT_THROW(read_json(wrong_key), FormatError);
}

TEST(FieldIo, DuplicateKeysAndDensityConflict) {
  KeyedRecords records;
  records.n = 2;
  records.N = 3;
  records.entries = {{{1, 1}, 1.0}, {{1, 1}, 2.0}};
  EXPECT_THROW(from_records<SampleTag>(records, std::nullopt), FormatError);
  records.entries.pop_back();
  EXPECT_THROW(from_records<SampleTag>(records, 4), FormatError);
  EXPECT_NO_THROW(from_records<SampleTag>(records, 3));
}
