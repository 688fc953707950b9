#pragma once

// Brute-force checks of the structural statements about A_n and F_n. Each
// check returns a Check carrying a witness (offending word or cut) on failure.

#include <sstream>
#include <string>

#include "rfw/count.hpp"
#include "rfw/factor.hpp"
#include "rfw/inflation.hpp"
#include "rfw/limits.hpp"
#include "rfw/word_set.hpp"

namespace rfw {

struct Check {
  bool ok = true;
  std::string witness;

  explicit operator bool() const noexcept { return ok; }

  static Check pass() { return {}; }
  static Check fail(std::string why) { return {false, std::move(why)}; }
};

namespace detail {

inline Check compare_sets(const WordSet& lhs, const WordSet& rhs, const std::string& lhs_name,
                          const std::string& rhs_name) {
  const Difference d = first_difference(lhs, rhs);
  if (!d.found) return Check::pass();
  std::ostringstream os;
  os << (d.word.empty() ? std::string("<empty>") : d.word.str()) << " is in "
     << (d.in_first ? lhs_name : rhs_name) << " but not in " << (d.in_first ? rhs_name : lhs_name);
  return Check::fail(os.str());
}

inline std::string gen(const char* set, unsigned n) { return std::string(set) + "_" + std::to_string(n); }

}  // namespace detail

// A_n equals its mirror image {w^r : w in A_n}.
inline Check verify_palindromic(unsigned n, const BigCount& budget = Limits{}.budget) {
  const WordSet an = enumerate_A(n, budget);
  return detail::compare_sets(reversed(an), an, "reverse(" + detail::gen("A", n) + ")",
                              detail::gen("A", n));
}

// (A_{n-1}A_{n-2}) n (A_{n-2}A_{n-1}) = A_{n-2}A_{n-3}A_{n-2}, n >= 4.
inline Check verify_overlap(unsigned n, const BigCount& budget = Limits{}.budget) {
  if (n < 4) throw argument_error("overlap identity needs n >= 4");
  const WordSet a1 = enumerate_A(n - 1, budget);
  const WordSet a2 = enumerate_A(n - 2, budget);
  const WordSet a3 = enumerate_A(n - 3, budget);
  const WordSet lhs = set_intersection(product(a1, a2), product(a2, a1));
  const WordSet rhs = product(product(a2, a3), a2);
  return detail::compare_sets(lhs, rhs, "overlap", "A_{n-2}A_{n-3}A_{n-2}");
}

// A_n[1,f_n-1] = A_{n+k}[1,f_n-1] and A_n[2,f_n] = A_{n+k}[f_{n+k}-f_n+2, f_{n+k}].
inline Check verify_prefix_stability(unsigned n, unsigned k, const BigCount& budget = Limits{}.budget) {
  if (n < 3) throw argument_error("prefix stability needs n >= 3");
  const WordSet an = enumerate_A(n, budget);
  const WordSet ank = enumerate_A(n + k, budget);
  const std::size_t fn = an.length();
  const std::size_t fnk = ank.length();
  const std::string lo = detail::gen("A", n), hi = detail::gen("A", n + k);

  Check prefix = detail::compare_sets(slice_set(an, 1, fn - 1), slice_set(ank, 1, fn - 1),
                                      lo + "[1,f-1]", hi + "[1,f-1]");
  if (!prefix) return prefix;
  return detail::compare_sets(slice_set(an, 2, fn), slice_set(ank, fnk - fn + 2, fnk),
                              lo + "[2,f]", hi + " suffix");
}

enum class Orientation { forward, reversed };

// Forward:  A_n within A_{n-1}[1,f_{n-1}-1] {0,1}^2 A_{n-2}[2,f_{n-2}].
// Reversed: A_n within A_{n-2}[1,f_{n-2}-1] {0,1}^2 A_{n-1}[2,f_{n-1}].
// The middle block is free, so membership only tests the outer slices.
inline Check verify_superset(unsigned n, Orientation orient = Orientation::forward,
                             const BigCount& budget = Limits{}.budget) {
  if (n < 4) throw argument_error("superset check needs n >= 4");
  const WordSet an = enumerate_A(n, budget);
  WordSet head_src = enumerate_A(n - 1, budget);
  WordSet tail_src = enumerate_A(n - 2, budget);
  if (orient == Orientation::reversed) std::swap(head_src, tail_src);

  const WordSet head = slice_set(head_src, 1, head_src.length() - 1);
  const WordSet tail = slice_set(tail_src, 2, tail_src.length());
  const std::size_t fn = an.length();
  if (head.length() + 2 + tail.length() != fn) throw numeric_error("superset block lengths mismatch");

  for (std::size_t i = 0; i < an.size(); ++i) {
    const Word w = an[i];
    const Word h = slice(w, 1, head.length());
    const Word t = slice(w, fn - tail.length() + 1, fn);
    if (!head.contains(h) || !tail.contains(t))
      return Check::fail(w.str() + " in " + detail::gen("A", n) + " is outside the product set");
  }
  return Check::pass();
}

// F(A_{n+1}, f_n) = F(A_{n+k}, f_n), both by direct sliding window.
inline Check verify_factor_stability(unsigned n, unsigned k, const BigCount& budget = Limits{}.budget) {
  if (n < 1 || k < 1) throw argument_error("factor stability needs n >= 1 and k >= 1");
  const std::size_t fn = fib_u64(n);
  const WordSet lhs = factor_set(enumerate_A(n + 1, budget), fn);
  const WordSet rhs = factor_set(enumerate_A(n + k, budget), fn);
  const std::string len = std::to_string(fn);
  return detail::compare_sets(lhs, rhs, "F(A_" + std::to_string(n + 1) + "," + len + ")",
                              "F(A_" + std::to_string(n + k) + "," + len + ")");
}

// |A_n[1,k]| |A_n[k+1,f_n]| <= 4^{n-2} |A_n| for every cut k.
inline Check verify_slice_bound(unsigned n, const WordSet& an) {
  if (n < 3) throw argument_error("slice bound needs n >= 3");
  const CutProfile prof = cut_profile(an);
  const BigCount rhs = pow_count(BigCount(4), n - 2) * an.size();
  for (std::size_t k = 1; k < an.length(); ++k) {
    const BigCount lhs = BigCount(prof.prefix[k]) * prof.suffix[k];
    if (lhs > rhs)
      return Check::fail("cut k=" + std::to_string(k) + ": " + lhs.str() + " > " + rhs.str());
  }
  return Check::pass();
}

inline Check verify_slice_bound(unsigned n, const BigCount& budget = Limits{}.budget) {
  return verify_slice_bound(n, enumerate_A(n, budget));
}

// 2 (4^{n-2} f_{n-1} + 1) |A_n|.
inline BigCount Fn_upper_bound(unsigned n) {
  if (n < 3) throw argument_error("F_n bound needs n >= 3");
  return 2 * (pow_count(BigCount(4), n - 2) * fib(n - 1) + 1) * count_A_explicit(n);
}

// |F_n| <= 2 (4^{n-2} f_{n-1} + 1) |A_n| with a precomputed |F_n|.
inline Check verify_Fn_bound(unsigned n, const BigCount& fn_size) {
  const BigCount bound = Fn_upper_bound(n);
  if (fn_size <= bound) return Check::pass();
  return Check::fail("|F_" + std::to_string(n) + "| = " + fn_size.str() + " > " + bound.str());
}

inline Check verify_Fn_bound(unsigned n, const Limits& limits = {}) {
  return verify_Fn_bound(n, BigCount(factor_set_Fn(n, limits).size()));
}

}  // namespace rfw
