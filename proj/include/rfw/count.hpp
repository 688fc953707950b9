#pragma once

// Exact non-negative integer counts.
//
// BigCount is a dense arbitrary-precision integer and holds every value the
// enumerations produce. FactoredCount stores the same kind of value as a
// prime-exponent map; it stays small for |A_n| at generations where the dense
// integer would need terabytes (|A_60| has roughly 10^12 bits).

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "rfw/errors.hpp"

namespace rfw {

using BigCount = boost::multiprecision::cpp_int;

inline BigCount fib(unsigned n) {
  BigCount a = 0, b = 1;
  for (unsigned i = 0; i < n; ++i) {
    BigCount next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

// Natural logarithm of a positive count with full double precision.
inline double log_count(const BigCount& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 53) return std::log(x.convert_to<double>());
  const std::size_t shift = bits - 53;
  const BigCount top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

inline BigCount divide_exact(const BigCount& num, const BigCount& den) {
  if (den == 0) throw numeric_error("division by zero");
  BigCount q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw inexact_division_error("exact division left remainder " + r.str());
  return q;
}

inline BigCount pow_count(const BigCount& base, std::uint64_t exp) {
  if (exp > std::numeric_limits<unsigned>::max())
    throw capacity_error("dense exponent too large; use FactoredCount");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw numeric_error("exponent overflow");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw numeric_error("exponent overflow");
  return r;
}

}  // namespace detail

class FactoredCount {
 public:
  using Exponents = std::map<std::uint64_t, std::uint64_t>;

  // Zero.
  FactoredCount() = default;

  // Factors `value` by trial division; meant for small operands.
  explicit FactoredCount(std::uint64_t value) : zero_(value == 0) {
    if (zero_) return;
    for (std::uint64_t p = 2; p <= value / p; ++p) {
      while (value % p == 0) {
        ++exps_[p];
        value /= p;
      }
    }
    if (value > 1) ++exps_[value];
  }

  bool is_zero() const noexcept { return zero_; }
  const Exponents& exponents() const noexcept { return exps_; }

  BigCount to_dense() const {
    if (zero_) return 0;
    BigCount out = 1;
    for (const auto& [p, e] : exps_) out *= pow_count(BigCount(p), e);
    return out;
  }

  double log() const {
    if (zero_) return -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (const auto& [p, e] : exps_) s += static_cast<double>(e) * std::log(static_cast<double>(p));
    return s;
  }

  friend bool operator==(const FactoredCount&, const FactoredCount&) = default;

  friend FactoredCount operator*(const FactoredCount& a, const FactoredCount& b) {
    if (a.zero_ || b.zero_) return {};
    FactoredCount out = a;
    for (const auto& [p, e] : b.exps_) out.exps_[p] = detail::checked_add(out.exps_[p], e);
    return out;
  }

  // Exact a - b for a >= b. Strips gcd(a, b) in factored form and evaluates
  // the coprime cofactors densely; they must fit in 64 bits, otherwise
  // numeric_error is thrown.
  friend FactoredCount operator-(const FactoredCount& a, const FactoredCount& b) {
    if (b.zero_) return a;
    if (a.zero_) throw numeric_error("negative count in subtraction");
    if (a == b) return {};
    FactoredCount common = gcd(a, b);
    const std::uint64_t ca = divide_exact(a, common).to_u64();
    const std::uint64_t cb = divide_exact(b, common).to_u64();
    if (ca < cb) throw numeric_error("negative count in subtraction");
    return common * FactoredCount(ca - cb);
  }

  friend FactoredCount gcd(const FactoredCount& a, const FactoredCount& b) {
    if (a.zero_) return b;
    if (b.zero_) return a;
    FactoredCount out(1);
    for (const auto& [p, e] : a.exps_) {
      auto it = b.exps_.find(p);
      if (it != b.exps_.end()) out.exps_[p] = std::min(e, it->second);
    }
    return out;
  }

  friend FactoredCount divide_exact(const FactoredCount& num, const FactoredCount& den) {
    if (den.zero_) throw numeric_error("division by zero");
    if (num.zero_) return {};
    FactoredCount out = num;
    for (const auto& [p, e] : den.exps_) {
      auto it = out.exps_.find(p);
      if (it == out.exps_.end() || it->second < e)
        throw inexact_division_error("exact division failed at prime " + std::to_string(p));
      it->second -= e;
      if (it->second == 0) out.exps_.erase(it);
    }
    return out;
  }

  friend FactoredCount pow_count(const FactoredCount& base, std::uint64_t exp) {
    if (exp == 0) return FactoredCount(1);
    if (base.zero_) return {};
    FactoredCount out = base;
    for (auto& [p, e] : out.exps_) e = detail::checked_mul(e, exp);
    return out;
  }

  // Dense value when it fits in 64 bits; numeric_error otherwise.
  std::uint64_t to_u64() const {
    if (zero_) return 0;
    std::uint64_t v = 1;
    for (const auto& [p, e] : exps_) {
      for (std::uint64_t i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(v, p, &v))
          throw numeric_error("cofactor exceeds 64 bits");
      }
    }
    return v;
  }

 private:
  bool zero_ = true;
  Exponents exps_;
};

// Namespace-scope declarations so rfw::divide_exact etc. resolve by
// qualified lookup as well as ADL.
FactoredCount gcd(const FactoredCount& a, const FactoredCount& b);
FactoredCount divide_exact(const FactoredCount& num, const FactoredCount& den);
FactoredCount pow_count(const FactoredCount& base, std::uint64_t exp);

inline std::ostream& operator<<(std::ostream& os, const FactoredCount& c) {
  if (c.is_zero()) return os << '0';
  if (c.exponents().empty()) return os << '1';
  bool first = true;
  for (const auto& [p, e] : c.exponents()) {
    if (!first) os << " * ";
    os << p;
    if (e != 1) os << '^' << e;
    first = false;
  }
  return os;
}

inline double log_count(const FactoredCount& x) { return x.log(); }

}  // namespace rfw
