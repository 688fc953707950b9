#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "rfw/io.hpp"

using rfw::WordSet;

TEST(TextFormat, A5Export) {
  std::ostringstream os;
  rfw::write_text(os, rfw::enumerate_A(5));
  EXPECT_EQ(os.str(), "11010\n10110\n01110\n11001\n10101\n01101\n10011\n01011\n");
}

TEST(TextFormat, RejectsMalformedInput) {
  std::istringstream mixed("01\n011\n");
  EXPECT_THROW(rfw::read_text(mixed), rfw::format_error);
  std::istringstream unordered("01\n10\n");  // packed 2 then 1
  EXPECT_THROW(rfw::read_text(unordered), rfw::format_error);
  std::istringstream junk("0a1\n");
  EXPECT_THROW(rfw::read_text(junk), rfw::format_error);
}

TEST(BinaryFormat, Layout) {
  std::ostringstream os;
  rfw::write_binary(os, rfw::enumerate_A(3));
  const std::string bytes = os.str();
  const std::string expected("RFW1\x01\x02\x02\x00\x00\x00"
                             "\x01\x00\x00\x00\x00\x00\x00\x00"
                             "\x02\x00\x00\x00\x00\x00\x00\x00",
                             26);
  EXPECT_EQ(bytes, expected);
}

TEST(BinaryFormat, RejectsMalformedInput) {
  std::istringstream bad_magic("RFW2\x01\x02\x00\x00\x00\x00");
  EXPECT_THROW(rfw::read_binary(bad_magic), rfw::format_error);
  std::istringstream truncated(std::string("RFW1\x01\x02\x02\x00\x00\x00\x01\x00", 12));
  EXPECT_THROW(rfw::read_binary(truncated), rfw::format_error);
  std::istringstream stray_bits(std::string("RFW1\x01\x01\x01\x00\x00\x00\x02\x00\x00\x00\x00\x00\x00\x00", 18));
  EXPECT_THROW(rfw::read_binary(stray_bits), rfw::format_error);
}

TEST(FormatProperty, RoundTrip) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t len = 1 + rng() % 64;
    std::vector<std::uint64_t> keys(rng() % 200);
    for (auto& k : keys) k = rng() & rfw::low_mask(len);
    const WordSet s = WordSet::from_keys(len, keys);

    std::stringstream text, bin;
    rfw::write_text(text, s);
    rfw::write_binary(bin, s);
    const WordSet from_text = rfw::read_text(text);
    if (!s.empty()) {
      EXPECT_EQ(from_text, s);
    }
    EXPECT_EQ(rfw::read_binary(bin), s);
  }
}

TEST(ReportJson, Schema) {
  const auto r = rfw::compute_report(6);
  const auto j = rfw::to_json(r);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["f_n"], 8);
  EXPECT_EQ(j["A_n"], "30");
  EXPECT_EQ(j["F_n"], "108");
  EXPECT_EQ(j["F_A_next"], "108");
  EXPECT_EQ(j["c_n"]["num"], 32);
  EXPECT_EQ(j["c_n"]["den"], 15);
  EXPECT_EQ(j["c_n"]["rounded"], "2.13333");
  const auto j0 = rfw::to_json(rfw::compute_report(0));
  EXPECT_TRUE(j0["F_n"].is_null());
  EXPECT_TRUE(j0["c_n"].is_null());
}

TEST(ReportCsv, Rows) {
  EXPECT_EQ(rfw::to_csv(rfw::compute_report(0)), "0,0,0,,,");
  EXPECT_EQ(rfw::to_csv(rfw::compute_report(1)), "1,1,1,2,1,");
  EXPECT_EQ(rfw::to_csv(rfw::compute_report(4)), "4,3,3,7,7,2.0");
  EXPECT_EQ(rfw::to_csv(rfw::compute_report(6)), "6,8,30,108,108,2.13333");
}
