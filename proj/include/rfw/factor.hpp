#pragma once

// Slice sets A_n[a,b], factor sets F(S, l), the windowed construction of
// F_n = F(A_{n+1}, f_n), and the cut statistic c_n.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <iterator>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "rfw/count.hpp"
#include "rfw/inflation.hpp"
#include "rfw/limits.hpp"
#include "rfw/word.hpp"
#include "rfw/word_set.hpp"

namespace rfw {

// {w[a,b] : w in s}; a == b + 1 yields {empty word} for non-empty s.
inline WordSet slice_set(const WordSet& s, std::size_t a, std::size_t b) {
  if (a < 1 || a > b + 1 || b > s.length()) throw index_error("slice bounds out of range");
  const std::size_t len = b + 1 - a;
  const std::uint64_t mask = low_mask(len);
  std::vector<std::uint64_t> keys;
  keys.reserve(s.size());
  for (std::uint64_t k : s.keys()) keys.push_back((k >> (a - 1)) & mask);
  sort_unique(keys);
  return WordSet::from_sorted_keys(len, std::move(keys));
}

struct SliceSet {
  unsigned n = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  WordSet members;
};

// A_n[a,b] for 1 <= a <= b <= f_n.
inline SliceSet slice_set(unsigned n, std::size_t a, std::size_t b,
                          const BigCount& budget = Limits{}.budget) {
  const WordSet an = enumerate_A(n, budget);
  if (a < 1 || a > b || b > an.length()) throw index_error("slice bounds out of range");
  return {n, a, b, slice_set(an, a, b)};
}

// All distinct length-l factors of members of s, by sliding window.
inline WordSet factor_set(const WordSet& s, std::size_t l) {
  if (l < 1 || l > s.length()) throw index_error("factor length out of range");
  const std::size_t windows = s.length() - l + 1;
  const std::uint64_t mask = low_mask(l);
  std::vector<std::uint64_t> keys;
  keys.reserve(s.size() * windows);
  for (std::uint64_t k : s.keys())
    for (std::size_t off = 0; off < windows; ++off) keys.push_back((k >> off) & mask);
  sort_unique(keys);
  return WordSet::from_sorted_keys(l, std::move(keys));
}

namespace detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs body(i) for i in [0, count) on up to `threads` workers. The first
// exception thrown by any worker is rethrown on the caller's thread.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

// Words s + p (s first) for all s in suffixes, p in prefixes.
struct WindowChunk {
  WordSet suffixes;
  WordSet prefixes;

  std::uint64_t size() const { return std::uint64_t{suffixes.size()} * prefixes.size(); }
};

}  // namespace detail

// F(A_{n+1}, f_n) from A_n and A_{n-1} without materializing A_{n+1}.
//
// Every word of A_{n+1} is uv with u in A_n, v in A_{n-1}, or vu. For x = uv
// the window starting at offset k in [1, f_{n-1}+1] is u[k,f_n] v[1,k-1]; for
// x = vu it is v[k,f_{n-1}] u[1,k-1+f_{n-2}]. Because both products range over
// every pair, the windows at offset k are exactly the Cartesian product of a
// suffix-slice set and a prefix-slice set. Each (order, offset) chunk is
// expanded and sort-deduplicated on its own, then merged into the result.
//
// Throws memory_budget_error when the total number of candidates exceeds
// limits.item_cap.
inline WordSet windowed_factor_set(const WordSet& an, const WordSet& an1, const Limits& limits = {}) {
  const std::size_t fn = an.length();
  const std::size_t fn1 = an1.length();
  if (fn1 > fn || fn1 == 0) throw argument_error("windowed_factor_set expects A_n and A_{n-1}");
  const std::size_t fn2 = fn - fn1;

  std::vector<detail::WindowChunk> chunks;
  for (std::size_t k = 1; k <= fn1 + 1; ++k) {
    chunks.push_back({slice_set(an, k, fn), slice_set(an1, 1, k - 1)});
    chunks.push_back({slice_set(an1, k, fn1), slice_set(an, 1, k - 1 + fn2)});
  }

  std::uint64_t projected = 0;
  for (const auto& c : chunks) projected += c.size();
  if (projected > limits.item_cap)
    throw memory_budget_error("windowed construction of F(A_{n+1}, " + std::to_string(fn) +
                              ") needs " + std::to_string(projected) +
                              " candidate words; item cap is " + std::to_string(limits.item_cap));

  std::vector<std::uint64_t> result;
  std::mutex result_mutex;
  detail::parallel_for(chunks.size(), detail::resolve_threads(limits.threads), [&](std::size_t i) {
    const auto& c = chunks[i];
    const std::size_t shift = c.suffixes.length();
    std::vector<std::uint64_t> keys;
    keys.reserve(c.size());
    for (std::uint64_t p : c.prefixes.keys()) {
      const std::uint64_t high = shift >= 64 ? 0 : p << shift;
      for (std::uint64_t s : c.suffixes.keys()) keys.push_back(s | high);
    }
    sort_unique(keys);

    std::lock_guard lock(result_mutex);
    std::vector<std::uint64_t> merged;
    merged.reserve(result.size() + keys.size());
    std::set_union(result.begin(), result.end(), keys.begin(), keys.end(),
                   std::back_inserter(merged));
    result.swap(merged);
  });
  return WordSet::from_sorted_keys(fn, std::move(result));
}

// Generation whose length-f_n factors stand in for F_n when n <= 3.
inline constexpr unsigned small_factor_generation = 7;

// F_n, the length-f_n factors of the limit set A.
//
// n >= 4: windowed construction from A_n and A_{n-1}.
// n <= 3: direct scan of A_7; factor sets of length <= 2 stop changing from
// generation 5 on.
inline WordSet factor_set_Fn(unsigned n, const Limits& limits = {}) {
  if (n < 1) throw argument_error("F_n requires n >= 1");
  if (n <= 3)
    return factor_set(enumerate_A(small_factor_generation, limits.budget), fib_u64(n));
  const WordSet an = enumerate_A(n, limits.budget);
  const WordSet an1 = enumerate_A(n - 1, limits.budget);
  return windowed_factor_set(an, an1, limits);
}

// ---------------------------------------------------------------------------
// Cut statistics

// prefix[k] = |A[1,k]| and suffix[k] = |A[k+1,len]| for every cut 1 <= k < len.
// Index 0 is unused.
struct CutProfile {
  std::vector<std::uint64_t> prefix;
  std::vector<std::uint64_t> suffix;
};

// Counts distinct prefixes and suffixes at every cut in O(N log N).
//
// In lexicographic order (position 1 most significant) words that share a
// length-k prefix are contiguous, so the number of distinct length-k prefixes
// is 1 + #{adjacent pairs whose common prefix is shorter than k}. Ascending
// packed order is lexicographic order of the reversed words, which gives the
// suffix counts the same way.
inline CutProfile cut_profile(const WordSet& s) {
  const std::size_t len = s.length();
  CutProfile out;
  out.prefix.assign(len + 1, 0);
  out.suffix.assign(len + 1, 0);
  if (s.empty() || len < 2) return out;

  // pairs_by_prefix[j] = adjacent pairs whose longest common prefix is j.
  std::vector<std::uint64_t> pairs_by_prefix(len + 1, 0), pairs_by_suffix(len + 1, 0);

  for (std::size_t i = 1; i < s.size(); ++i) {
    const std::uint64_t diff = s.keys()[i] ^ s.keys()[i - 1];
    const std::size_t lcs = static_cast<std::size_t>(std::countl_zero(diff)) - (64 - len);
    ++pairs_by_suffix[lcs];
  }

  std::vector<std::uint64_t> lex(s.keys().begin(), s.keys().end());
  std::sort(lex.begin(), lex.end(), [len](std::uint64_t a, std::uint64_t b) {
    return reverse_bits(a, len) < reverse_bits(b, len);
  });
  for (std::size_t i = 1; i < lex.size(); ++i) {
    const std::size_t lcp = static_cast<std::size_t>(std::countr_zero(lex[i] ^ lex[i - 1]));
    ++pairs_by_prefix[lcp];
  }

  // distinct(m) = 1 + #{pairs with common part < m}.
  std::vector<std::uint64_t> distinct_prefix(len + 1, 1), distinct_suffix(len + 1, 1);
  std::uint64_t acc_p = 0, acc_s = 0;
  for (std::size_t m = 1; m <= len; ++m) {
    acc_p += pairs_by_prefix[m - 1];
    acc_s += pairs_by_suffix[m - 1];
    distinct_prefix[m] = 1 + acc_p;
    distinct_suffix[m] = 1 + acc_s;
  }
  for (std::size_t k = 1; k < len; ++k) {
    out.prefix[k] = distinct_prefix[k];
    out.suffix[k] = distinct_suffix[len - k];
  }
  return out;
}

// Non-negative reduced fraction.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational reduced(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw numeric_error("zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    return {num / g, den / g};
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  // Round half up to `digits` decimals, always printing all of them.
  std::string fixed(unsigned digits = 5) const {
    unsigned __int128 scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    const unsigned __int128 scaled = (static_cast<unsigned __int128>(num) * scale * 2 + den) / (2 * static_cast<unsigned __int128>(den));
    const auto whole = static_cast<std::uint64_t>(scaled / scale);
    auto frac = static_cast<std::uint64_t>(scaled % scale);
    std::string tail(digits, '0');
    for (unsigned i = digits; i-- > 0; frac /= 10) tail[i] = static_cast<char>('0' + frac % 10);
    return digits == 0 ? std::to_string(whole) : std::to_string(whole) + "." + tail;
  }

  // Table style: integers as "2.0", everything else with five decimals.
  std::string table_string() const {
    if (den == 1) return std::to_string(num) + ".0";
    return fixed(5);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct CStat {
  unsigned n = 0;
  Rational value;           // max_k |A[1,k]| |A[k+1,f_n]| / |A_n|
  std::size_t best_cut = 0; // smallest k attaining the maximum
  std::uint64_t max_product = 0;
};

// c_n from an already enumerated A_n.
inline CStat c_stat(unsigned n, const WordSet& an) {
  if (an.length() < 2) throw argument_error("c_n needs words of length >= 2");
  const CutProfile prof = cut_profile(an);
  CStat out;
  out.n = n;
  for (std::size_t k = 1; k < an.length(); ++k) {
    std::uint64_t prod;
    if (__builtin_mul_overflow(prof.prefix[k], prof.suffix[k], &prod))
      throw numeric_error("cut product exceeds 64 bits");
    if (prod > out.max_product) {
      out.max_product = prod;
      out.best_cut = k;
    }
  }
  out.value = Rational::reduced(out.max_product, an.size());
  return out;
}

inline CStat c_stat(unsigned n, const BigCount& budget = Limits{}.budget) {
  if (n < 3) throw argument_error("c_n is defined for n >= 3");
  return c_stat(n, enumerate_A(n, budget));
}

}  // namespace rfw
