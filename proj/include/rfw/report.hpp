#pragma once

// Per-generation summary rows: n, f_n, |A_n|, |F_n|, |F(A_{n+1}, f_n)|, c_n.

#include <map>
#include <optional>
#include <vector>

#include "rfw/count.hpp"
#include "rfw/factor.hpp"
#include "rfw/inflation.hpp"
#include "rfw/limits.hpp"
#include "rfw/verify.hpp"

namespace rfw {

struct FactorReport {
  unsigned n = 0;
  std::uint64_t f_n = 0;
  BigCount A_n;
  std::optional<BigCount> F_n;       // blank for n = 0
  std::optional<BigCount> F_A_next;  // |F(A_{n+1}, f_n)|, blank for n = 0
  std::optional<CStat> c_n;          // blank for n <= 2
  // 4^{n-2}|A_n| - max cut product, and the F_n bound minus |F_n| (n >= 3).
  std::optional<BigCount> slice_bound_slack;
  std::optional<BigCount> fn_bound_slack;
};

using TableRow = FactorReport;

// Memoizes A_n across the rows of one table run.
class GenerationCache {
 public:
  explicit GenerationCache(const Limits& limits) : limits_(limits) {}

  const WordSet& get(unsigned n) {
    auto it = sets_.find(n);
    if (it == sets_.end()) it = sets_.emplace(n, enumerate_A(n, limits_.budget)).first;
    return it->second;
  }

  bool enumerable(unsigned n) const {
    try {
      check_enumerable(n, limits_.budget);
      return true;
    } catch (const budget_error&) {
      return false;
    } catch (const capacity_error&) {
      return false;
    }
  }

  const Limits& limits() const { return limits_; }

 private:
  Limits limits_;
  std::map<unsigned, WordSet> sets_;
};

// One row. |F(A_{n+1}, f_n)| comes from a direct scan of A_{n+1} whenever
// that generation fits the budget, and from the windowed construction
// otherwise, so for n <= 8 the two F columns are computed independently.
inline FactorReport compute_report(unsigned n, GenerationCache& cache) {
  FactorReport r;
  r.n = n;
  r.f_n = fib_u64(n);
  const WordSet& an = cache.get(n);
  r.A_n = an.size();
  if (n == 0) return r;

  std::optional<WordSet> windowed;
  if (n >= 4) windowed = windowed_factor_set(an, cache.get(n - 1), cache.limits());
  const WordSet fn_set = n >= 4 ? *windowed
                                : factor_set(cache.get(small_factor_generation), r.f_n);
  r.F_n = fn_set.size();

  if (cache.enumerable(n + 1)) {
    r.F_A_next = factor_set(cache.get(n + 1), r.f_n).size();
  } else {
    if (!windowed) windowed = windowed_factor_set(an, cache.get(n - 1), cache.limits());
    r.F_A_next = windowed->size();
  }

  if (n >= 3) {
    r.c_n = c_stat(n, an);
    r.slice_bound_slack = pow_count(BigCount(4), n - 2) * r.A_n - r.c_n->max_product;
    r.fn_bound_slack = Fn_upper_bound(n) - *r.F_n;
  }
  return r;
}

inline FactorReport compute_report(unsigned n, const Limits& limits = {}) {
  GenerationCache cache(limits);
  return compute_report(n, cache);
}

// Rows 0..max_n. `on_row` (if given) sees each row as soon as it is ready.
template <class OnRow>
std::vector<FactorReport> compute_table(unsigned max_n, const Limits& limits, OnRow&& on_row) {
  GenerationCache cache(limits);
  std::vector<FactorReport> rows;
  for (unsigned n = 0; n <= max_n; ++n) {
    rows.push_back(compute_report(n, cache));
    on_row(rows.back());
  }
  return rows;
}

inline std::vector<FactorReport> compute_table(unsigned max_n, const Limits& limits = {}) {
  return compute_table(max_n, limits, [](const FactorReport&) {});
}

}  // namespace rfw
