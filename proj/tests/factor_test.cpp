#include <gtest/gtest.h>

#include <set>
#include <string>

#include "oracle.hpp"
#include "rfw/factor.hpp"

using rfw::Word;
using rfw::WordSet;

namespace {

std::set<std::string> as_strings(const WordSet& s) {
  std::set<std::string> out;
  for (const Word& w : s.words()) out.insert(w.str());
  return out;
}

rfw::Limits threads(unsigned t) {
  rfw::Limits l;
  l.threads = t;
  return l;
}

}  // namespace

TEST(SliceSet, Examples) {
  EXPECT_EQ(as_strings(rfw::slice_set(3, 1, 1).members), (std::set<std::string>{"0", "1"}));
  EXPECT_EQ(as_strings(rfw::slice_set(4, 1, 2).members), (std::set<std::string>{"01", "10", "11"}));
  for (unsigned n = 3; n <= 7; ++n)
    EXPECT_EQ(rfw::slice_set(n, 1, rfw::fib_u64(n)).members, rfw::enumerate_A(n));
  EXPECT_THROW(rfw::slice_set(4, 2, 1), rfw::index_error);
  EXPECT_THROW(rfw::slice_set(4, 1, 4), rfw::index_error);
  // Empty slice of a non-empty set is {empty word}.
  const WordSet e = rfw::slice_set(rfw::enumerate_A(4), 3, 2);
  EXPECT_EQ(e.size(), 1u);
  EXPECT_EQ(e.length(), 0u);
}

TEST(SliceSet, MatchesOracle) {
  for (unsigned n = 3; n <= 7; ++n) {
    const WordSet an = rfw::enumerate_A(n);
    const auto strings = oracle::recursion(n);
    for (std::size_t a = 1; a <= an.length(); ++a)
      for (std::size_t b = a; b <= an.length(); ++b)
        EXPECT_EQ(as_strings(rfw::slice_set(an, a, b)), oracle::slices(strings, a, b));
  }
}

TEST(FactorSet, Examples) {
  EXPECT_EQ(as_strings(rfw::factor_set(rfw::enumerate_A(4), 2)),
            (std::set<std::string>{"01", "10", "11"}));
  EXPECT_EQ(as_strings(rfw::factor_set(rfw::enumerate_A(5), 3)),
            (std::set<std::string>{"001", "010", "011", "100", "101", "110", "111"}));
  const WordSet single = WordSet::from_words(5, std::vector<Word>{Word::parse("01101")});
  EXPECT_EQ(rfw::factor_set(single, 5), single);
  EXPECT_THROW(rfw::factor_set(single, 0), rfw::index_error);
  EXPECT_THROW(rfw::factor_set(single, 6), rfw::index_error);
}

TEST(FactorSet, SixthGenerationListing) {
  const std::set<std::string> expected{
      "00101", "00110", "00111", "01001", "01010", "01011", "01100", "01101",
      "01110", "01111", "10010", "10011", "10100", "10101", "10110", "10111",
      "11001", "11010", "11011", "11100", "11101", "11110"};
  EXPECT_EQ(as_strings(rfw::factor_set(rfw::enumerate_A(6), 5)), expected);
}

TEST(FactorSetFn, SmallGenerations) {
  EXPECT_EQ(as_strings(rfw::factor_set_Fn(3)), (std::set<std::string>{"00", "01", "10", "11"}));
  EXPECT_EQ(rfw::factor_set_Fn(1).size(), 2u);
  EXPECT_EQ(rfw::factor_set_Fn(2).size(), 2u);
  // The generation-7 convention agrees with generation 8.
  for (unsigned n = 1; n <= 3; ++n)
    EXPECT_EQ(rfw::factor_set_Fn(n), rfw::factor_set(rfw::enumerate_A(8), rfw::fib_u64(n)));
  EXPECT_THROW(rfw::factor_set_Fn(0), rfw::argument_error);
}

TEST(FactorSetFn, TableSizes) {
  EXPECT_EQ(rfw::factor_set_Fn(4).size(), 7u);
  EXPECT_EQ(rfw::factor_set_Fn(5).size(), 22u);
  EXPECT_EQ(rfw::factor_set_Fn(6).size(), 108u);
  EXPECT_EQ(rfw::factor_set_Fn(7).size(), 1356u);
  EXPECT_EQ(rfw::factor_set_Fn(8).size(), 65800u);
}

TEST(FactorSetFn, WindowedEqualsDirectScan) {
  for (unsigned n = 2; n <= 7; ++n) {
    const WordSet windowed =
        rfw::windowed_factor_set(rfw::enumerate_A(n), rfw::enumerate_A(n - 1));
    EXPECT_EQ(windowed, rfw::factor_set(rfw::enumerate_A(n + 1), rfw::fib_u64(n))) << n;
    EXPECT_EQ(as_strings(windowed), oracle::factors(oracle::recursion(n + 1), rfw::fib_u64(n))) << n;
  }
}

TEST(FactorSetFn, IndependentOfThreadCount) {
  const WordSet one = rfw::factor_set_Fn(8, threads(1));
  EXPECT_EQ(rfw::factor_set_Fn(8, threads(3)), one);
  EXPECT_EQ(rfw::factor_set_Fn(8, threads(8)), one);
}

TEST(FactorSetFn, ItemCap) {
  rfw::Limits l;
  l.item_cap = 1000;
  EXPECT_THROW(rfw::factor_set_Fn(7, l), rfw::memory_budget_error);
}

TEST(FactorSetFn, ReversalClosureAndContainment) {
  for (unsigned n = 1; n <= 8; ++n) {
    const WordSet fn = rfw::factor_set_Fn(n);
    EXPECT_EQ(rfw::reversed(fn), fn) << n;
    if (n >= 3) {
      const WordSet an = rfw::enumerate_A(n);
      EXPECT_EQ(rfw::set_intersection(an, fn), an) << n;
    }
  }
}

TEST(CutProfile, MatchesSliceSets) {
  for (unsigned n = 3; n <= 8; ++n) {
    const WordSet an = rfw::enumerate_A(n);
    const auto prof = rfw::cut_profile(an);
    for (std::size_t k = 1; k < an.length(); ++k) {
      EXPECT_EQ(prof.prefix[k], rfw::slice_set(an, 1, k).size()) << n << ' ' << k;
      EXPECT_EQ(prof.suffix[k], rfw::slice_set(an, k + 1, an.length()).size()) << n << ' ' << k;
    }
  }
}

TEST(Rational, Rounding) {
  EXPECT_EQ(rfw::Rational::reduced(4, 2).table_string(), "2.0");
  EXPECT_EQ(rfw::Rational::reduced(64, 30).table_string(), "2.13333");
  EXPECT_EQ(rfw::Rational::reduced(2, 3).fixed(5), "0.66667");
  EXPECT_EQ(rfw::Rational::reduced(1, 8).fixed(2), "0.13");  // 0.125 rounds half up
  EXPECT_EQ(rfw::Rational::reduced(4, 2).fixed(5), "2.00000");
  EXPECT_THROW(rfw::Rational::reduced(1, 0), rfw::numeric_error);
}

TEST(CStat, TableValues) {
  const auto c3 = rfw::c_stat(3);
  EXPECT_EQ(c3.value, (rfw::Rational{2, 1}));
  EXPECT_EQ(c3.max_product, 4u);
  EXPECT_EQ(rfw::c_stat(4).value.table_string(), "2.0");
  EXPECT_EQ(rfw::c_stat(5).value.table_string(), "2.0");
  EXPECT_EQ(rfw::c_stat(6).value.table_string(), "2.13333");
  EXPECT_EQ(rfw::c_stat(7).value.table_string(), "2.11111");
  EXPECT_EQ(rfw::c_stat(8).value.table_string(), "2.17143");
  EXPECT_THROW(rfw::c_stat(2), rfw::argument_error);
}

TEST(CStat, MatchesBruteForceOverCuts) {
  for (unsigned n = 3; n <= 7; ++n) {
    const auto strings = oracle::recursion(n);
    const std::size_t len = rfw::fib_u64(n);
    std::uint64_t best = 0;
    for (std::size_t k = 1; k < len; ++k)
      best = std::max<std::uint64_t>(
          best, oracle::slices(strings, 1, k).size() * oracle::slices(strings, k + 1, len).size());
    EXPECT_EQ(rfw::c_stat(n).value, rfw::Rational::reduced(best, strings.size())) << n;
  }
}
