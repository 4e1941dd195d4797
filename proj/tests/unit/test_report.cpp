#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "ree/errors.hpp"
#include "ree/report.hpp"

namespace ree {
namespace {

namespace fs = std::filesystem;

std::size_t count_of(const std::string& text, std::string_view needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
  return count;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

class ScratchDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("reemono_report_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

TEST(LogBaseTest, Conversion) {
  EXPECT_EQ(to_base(std::numbers::ln2, LogBase::Two), 1.0);
  EXPECT_EQ(to_base(0.3, LogBase::E), 0.3);
  EXPECT_EQ(log_base_name(LogBase::Two), "2");
  EXPECT_EQ(unit_name(LogBase::E), "nats");
}

TEST(CsvTest, LayoutAndMetadata) {
  const auto records = sweep(2);
  const std::string csv = format_csv(records, {"closed", 2, 12345, LogBase::E});
  EXPECT_EQ(csv.rfind(kCsvHeader, 0), 0u);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_EQ(csv.back(), '\n');

  const CsvTable table = parse_csv(csv);
  EXPECT_EQ(table.rows.size(), 6u);
  EXPECT_EQ(table.header.size(), 7u);
  EXPECT_EQ(table.comment_value("engine"), "closed");
  EXPECT_EQ(table.comment_value("resolution"), "2");
  EXPECT_EQ(table.comment_value("seed"), "12345");
  EXPECT_EQ(table.comment_value("log_base"), "e");
  EXPECT_EQ(table.comment_value("rows"), "6");
  EXPECT_FALSE(table.comment_value("max_abs_delta_diff").has_value());
}

TEST(CsvTest, RoundTripRecomputesDeltaExactly) {
  for (LogBase base : {LogBase::E, LogBase::Two}) {
    const auto records = sweep(25);
    const CsvTable table = parse_csv(format_csv(records, {"closed", 25, 1, base}));
    const std::size_t ab = table.column("e_ab"), ac = table.column("e_ac"), abc = table.column("e_abc");
    const std::size_t d = table.column("delta");
    ASSERT_EQ(table.rows.size(), records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& row = table.rows[i];
      ASSERT_EQ(row[abc] - row[ab] - row[ac], row[d]);
      ASSERT_EQ(row[0], records[i].alpha_sq);
      ASSERT_EQ(row[ab], to_base(records[i].e_ab, base));
    }
  }
}

TEST(CsvTest, BaseTwoConvertsEntropies) {
  const auto records = sweep(4);
  const CsvTable table = parse_csv(format_csv(records, {"closed", 4, 1, LogBase::Two}));
  EXPECT_EQ(table.comment_value("log_base"), "2");
  const std::size_t abc = table.column("e_abc");
  for (std::size_t i = 0; i < records.size(); ++i) EXPECT_NEAR(table.rows[i][abc], records[i].e_abc / std::numbers::ln2, 1e-15);
}

TEST(CsvTest, PairedColumns) {
  const auto closed = sweep(6, Engine::ClosedForm);
  const auto numeric = sweep(6, Engine::RestrictedNumeric);
  const CsvTable table = parse_csv(format_csv(closed, {"both", 6, 7, LogBase::E}, numeric));
  EXPECT_EQ(table.header.size(), 10u);
  const std::size_t nd = table.column("delta_numeric");
  const std::size_t d = table.column("delta");
  double max_diff = 0.0;
  for (const auto& row : table.rows) max_diff = std::max(max_diff, std::abs(row[nd] - row[d]));
  const auto reported = table.comment_value("max_abs_delta_diff");
  ASSERT_TRUE(reported.has_value());
  EXPECT_EQ(std::stod(*reported), max_diff);
  EXPECT_LE(max_diff, 1e-7);
}

TEST(CsvTest, PairedLengthsMustMatch) {
  EXPECT_THROW(format_csv(sweep(2), {"both", 2, 1, LogBase::E}, sweep(3)), DimensionMismatch);
}

TEST(CsvTest, ParseErrors) {
  EXPECT_THROW(parse_csv(""), InvalidState);
  EXPECT_THROW(parse_csv("a,b\n1,2,3\n"), InvalidState);
  EXPECT_THROW(parse_csv("a,b\n1,x\n"), InvalidState);
  EXPECT_THROW(parse_csv("a,b\n1,2\n").column("c"), OutOfRange);
}

TEST(SvgTest, Structure) {
  const auto records = sweep(10);
  const std::string svg = render_svg(records, {10, LogBase::E});
  EXPECT_NE(svg.find("width=\"800\" height=\"700\""), std::string::npos);
  EXPECT_EQ(count_of(svg, "<line class=\"tick\""), 5u);
  EXPECT_EQ(count_of(svg, "<polygon"), 10u * 10u + 1u);  // n^2 cells plus the outline
  EXPECT_NE(svg.find("&#945;&#178;=1"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("nats"), std::string::npos);
  EXPECT_NE(render_svg(records, {10, LogBase::Two}).find("bits"), std::string::npos);
}

TEST(SvgTest, RejectsWrongRecordCount) { EXPECT_THROW(render_svg(sweep(3), {4, LogBase::E}), InvalidState); }

TEST_F(ScratchDir, AtomicWriteReplacesContentAndLeavesNoTemp) {
  const fs::path target = dir_ / "out.csv";
  write_file_atomic(target, "first\n");
  write_file_atomic(target, "second\n");
  EXPECT_EQ(slurp(target), "second\n");
  EXPECT_FALSE(fs::exists(dir_ / "out.csv.tmp"));
}

TEST_F(ScratchDir, AtomicWriteIntoMissingDirectoryFails) {
  EXPECT_THROW(write_file_atomic(dir_ / "missing" / "out.csv", "x"), IoError);
}

}  // namespace
}  // namespace ree
