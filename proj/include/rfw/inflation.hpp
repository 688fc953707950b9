#pragma once

// Inflated random Fibonacci words: the random substitution
//
//   0 -> 1,   1 -> 01 (probability p) or 10 (probability 1 - p),
//
// the generation sets A_1 = {0}, A_2 = {1}, A_n = A_{n-1}A_{n-2} u A_{n-2}A_{n-1},
// and three independent formulas for |A_n|.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rfw/count.hpp"
#include "rfw/limits.hpp"
#include "rfw/word.hpp"
#include "rfw/word_set.hpp"

namespace rfw {

// ---------------------------------------------------------------------------
// Counting

template <class Count>
Count make_count(std::uint64_t v) {
  if constexpr (std::is_same_v<Count, BigCount>) {
    return BigCount(v);
  } else {
    return Count(v);
  }
}

// |A_n| from the cubic recursion
//   |A_n| = 2|A_{n-1}||A_{n-2}| - |A_{n-2}|^2 |A_{n-3}|,  |A_0| = 0, |A_1| = |A_2| = 1.
template <class Count = BigCount>
Count count_A_long(unsigned n) {
  std::vector<Count> a{make_count<Count>(0), make_count<Count>(1), make_count<Count>(1)};
  const Count two = make_count<Count>(2);
  for (unsigned m = 3; m <= n; ++m) {
    const Count& x = a[m - 1];
    const Count& y = a[m - 2];
    const Count& z = a[m - 3];
    a.push_back(two * x * y - y * y * z);
  }
  return a[n];
}

// |A_n| = (n-1)/(n-2) |A_{n-1}||A_{n-2}|. The division must be exact at every
// step; a remainder raises inexact_division_error.
template <class Count = BigCount>
Count count_A_short(unsigned n) {
  if (n == 0) return make_count<Count>(0);
  Count older = make_count<Count>(1);  // |A_1|
  Count newer = make_count<Count>(1);  // |A_2|
  if (n <= 2) return newer;
  for (unsigned m = 3; m <= n; ++m) {
    Count next = divide_exact(make_count<Count>(m - 1) * newer * older, make_count<Count>(m - 2));
    older = std::move(newer);
    newer = std::move(next);
  }
  return newer;
}

// |A_n| = (n-1) * prod_{i=2}^{n-1} (n-i)^{f_{i-2}} for n >= 3; 0, 1, 1 below.
template <class Count = BigCount>
Count count_A_explicit(unsigned n) {
  if (n == 0) return make_count<Count>(0);
  if (n <= 2) return make_count<Count>(1);
  Count out = make_count<Count>(n - 1);
  for (unsigned i = 2; i <= n - 1; ++i)
    out = out * pow_count(make_count<Count>(n - i), fib_u64(i - 2));
  return out;
}

// (log |A_n|) / f_n via the Fibonacci-weighted log sum
//   log(n-1)/f_n + sum_{i=2}^{n-1} (f_{i-2}/f_n) log(n-i).
// Ratios are formed as exact rationals and rounded once. Terms with
// f_{i-2}/f_n < 1e-16 are dropped: they are the smallest indices, and since
// f_0 + ... + f_m = f_{m+2} - 1, the dropped mass is below
// (f_{m+2}/f_n) log n < 2.7e-16 log n.
inline double log_growth(unsigned n) {
  if (n < 3) throw argument_error("log_growth requires n >= 3");
  using boost::multiprecision::cpp_rational;
  const BigCount fn = fib(n);
  std::vector<BigCount> f(n);
  f[1] = 1;
  for (unsigned k = 2; k < n; ++k) f[k] = f[k - 1] + f[k - 2];
  double sum = 0.0;
  // Largest weights first, so the cutoff drops only the tail.
  for (unsigned i = n - 1; i >= 2; --i) {
    const double ratio = cpp_rational(f[i - 2], fn).convert_to<double>();
    if (ratio < 1e-16) break;
    sum += ratio * std::log(static_cast<double>(n - i));
  }
  return std::log(static_cast<double>(n - 1)) / fn.convert_to<double>() + sum;
}

struct EntropyEstimate {
  double value = 0.0;
  unsigned n = 0;          // generation at which the iteration stopped
  double last_step = 0.0;  // |log_growth(n) - log_growth(n-1)|
  // Geometric tail estimate: successive steps shrink by about 1/phi, so the
  // remaining distance to the limit is at most about phi * last_step.
  double tail_bound = 0.0;
};

inline constexpr unsigned entropy_iteration_cap = 400;

// lim_n log|A_n| / f_n, evaluated at increasing n until successive values
// differ by less than tol.
inline EntropyEstimate entropy_estimate(double tol) {
  if (!(tol >= 1e-12)) throw argument_error("entropy tolerance must be >= 1e-12");
  double prev = log_growth(3);
  for (unsigned n = 4; n <= entropy_iteration_cap; ++n) {
    const double cur = log_growth(n);
    const double step = std::abs(cur - prev);
    if (step < tol) return {cur, n, step, std::numbers::phi * step};
    prev = cur;
  }
  throw numeric_error("entropy limit did not converge within the iteration cap");
}

inline double entropy_limit(double tol) { return entropy_estimate(tol).value; }

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

inline void append_product(std::vector<std::uint64_t>& out, const WordSet& u, const WordSet& v) {
  const std::size_t shift = u.length();
  for (std::uint64_t b : v.keys()) {
    const std::uint64_t high = b << shift;
    for (std::uint64_t a : u.keys()) out.push_back(a | high);
  }
}

}  // namespace detail

// A_{n-1}A_{n-2} u A_{n-2}A_{n-1} from the two previous generations.
inline WordSet next_generation(const WordSet& prev, const WordSet& prev2) {
  if (prev.length() + prev2.length() > Word::max_length)
    throw capacity_error("generation exceeds 64 symbols");
  std::vector<std::uint64_t> keys;
  keys.reserve(2 * prev.size() * prev2.size());
  detail::append_product(keys, prev, prev2);
  detail::append_product(keys, prev2, prev);
  sort_unique(keys);
  return WordSet::from_sorted_keys(prev.length() + prev2.length(), std::move(keys));
}

inline void check_enumerable(unsigned n, const BigCount& budget) {
  if (n > max_packed_generation)
    throw capacity_error("A_" + std::to_string(n) + " has words of length " +
                         fib(n).str() + " > 64");
  const BigCount predicted = count_A_explicit(n);
  if (predicted > budget)
    throw budget_error("|A_" + std::to_string(n) + "| = " + predicted.str() +
                       " exceeds the enumeration budget " + budget.str());
}

// The set A_n in canonical order. Throws capacity_error when f_n > 64 and
// budget_error when the predicted |A_n| exceeds `budget`.
inline WordSet enumerate_A(unsigned n, const BigCount& budget = Limits{}.budget) {
  check_enumerable(n, budget);
  if (n == 0) return {};
  WordSet older = WordSet::from_sorted_keys(1, {0});  // A_1
  if (n == 1) return older;
  WordSet newer = WordSet::from_sorted_keys(1, {1});  // A_2
  for (unsigned m = 3; m <= n; ++m) {
    WordSet next = next_generation(newer, older);
    older = std::move(newer);
    newer = std::move(next);
  }
  return newer;
}

// ---------------------------------------------------------------------------
// Sampling

// Seeded source for the random substitution. The engine is std::mt19937_64
// seeded with the 64-bit seed; a Bernoulli(p) draw consumes one output x and
// succeeds iff (x >> 11) * 2^-53 < p. Both are fully specified by the
// standard, so a seed gives the same stream on every platform. One handle
// must not be shared between threads.
class PrngHandle {
 public:
  explicit PrngHandle(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  bool bernoulli(double p) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

inline void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw argument_error("probability must lie in [0, 1]");
}

// One application of the random substitution; each 1 draws independently.
inline Word inflate_step(const Word& w, double p, PrngHandle& rng) {
  check_probability(p);
  const std::size_t out_len = w.size() + w.count_ones();
  if (out_len > Word::max_length) throw capacity_error("inflated word exceeds 64 symbols");
  std::uint64_t bits = 0;
  std::size_t pos = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (w.at(i) == 0) {
      bits |= std::uint64_t{1} << pos;
      pos += 1;
    } else {
      // 01 with probability p, else 10.
      bits |= std::uint64_t{1} << (rng.bernoulli(p) ? pos + 1 : pos);
      pos += 2;
    }
  }
  return Word(bits, out_len);
}

// r_n: n-1 substitution steps applied to the word 0.
inline Word sample_chain(unsigned n, double p, PrngHandle& rng) {
  if (n < 1) throw argument_error("sample_chain requires n >= 1");
  if (n > max_packed_generation) throw capacity_error("r_n exceeds 64 symbols for n > 10");
  check_probability(p);
  Word w(0, 1);
  for (unsigned i = 1; i < n; ++i) w = inflate_step(w, p, rng);
  return w;
}

}  // namespace rfw
