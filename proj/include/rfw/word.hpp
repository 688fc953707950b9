#pragma once

// Packed binary words over {0,1}.
//
// The symbol at 1-based position i lives in bit i-1 of a 64-bit value, so a
// length-k prefix is `bits & mask(k)` and bits at positions >= length are
// always zero. The public API indexes symbols from 1 like w[a,b]; storage is
// 0-based.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "rfw/errors.hpp"

namespace rfw {

// Low `len` bits set; len in [0, 64].
constexpr std::uint64_t low_mask(std::size_t len) noexcept {
  return len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
}

// Reverses the low `len` bits of `bits`.
constexpr std::uint64_t reverse_bits(std::uint64_t bits, std::size_t len) noexcept {
  if (len == 0) return 0;
  std::uint64_t x = bits;
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
  x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
  x = (x >> 32) | (x << 32);
  return x >> (64 - len);
}

class Word {
 public:
  static constexpr std::size_t max_length = 64;

  constexpr Word() noexcept = default;

  // Throws capacity_error for len > 64 and argument_error when bits beyond
  // len are set.
  constexpr Word(std::uint64_t bits, std::size_t len) : bits_(bits), len_(len) {
    if (len > max_length) throw capacity_error("word length exceeds 64 symbols");
    if ((bits & ~low_mask(len)) != 0) throw argument_error("bits set beyond word length");
  }

  // Parses the ASCII form: '0'/'1', leftmost character is position 1.
  static Word parse(std::string_view text) {
    if (text.size() > max_length) throw capacity_error("word length exceeds 64 symbols");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      switch (text[i]) {
        case '0': break;
        case '1': bits |= std::uint64_t{1} << i; break;
        default: throw format_error("invalid symbol '" + std::string(1, text[i]) + "' in word");
      }
    }
    return Word(bits, text.size());
  }

  std::string str() const {
    std::string out(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
      if ((bits_ >> i) & 1U) out[i] = '1';
    return out;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr std::size_t size() const noexcept { return len_; }
  constexpr bool empty() const noexcept { return len_ == 0; }

  // Symbol at 1-based position `pos`.
  constexpr unsigned at(std::size_t pos) const {
    if (pos < 1 || pos > len_) throw index_error("symbol position out of range");
    return static_cast<unsigned>((bits_ >> (pos - 1)) & 1U);
  }

  constexpr std::size_t count_ones() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }

  // Orders by packed value first, then by length.
  friend constexpr auto operator<=>(const Word&, const Word&) noexcept = default;

 private:
  std::uint64_t bits_ = 0;
  std::size_t len_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

// w[a,b] with 1 <= a <= b+1 <= |w|+1; a == b+1 gives the empty word.
constexpr Word slice(const Word& w, std::size_t a, std::size_t b) {
  if (a < 1 || a > b + 1 || b > w.size()) throw index_error("slice bounds out of range");
  const std::size_t len = b + 1 - a;
  return Word((w.bits() >> (a - 1)) & low_mask(len), len);
}

constexpr Word reverse(const Word& w) noexcept {
  return Word(reverse_bits(w.bits(), w.size()), w.size());
}

constexpr Word concat(const Word& u, const Word& v) {
  if (u.size() + v.size() > Word::max_length)
    throw capacity_error("concatenation exceeds 64 symbols");
  const std::uint64_t high = v.size() == 0 ? 0 : v.bits() << u.size();
  return Word(u.bits() | high, u.size() + v.size());
}

// f_n as a machine integer; exact for n <= 93.
constexpr std::uint64_t fib_u64(unsigned n) {
  if (n > 93) throw capacity_error("Fibonacci number exceeds 64 bits");
  std::uint64_t a = 0, b = 1;
  for (unsigned i = 0; i < n; ++i) {
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

// Largest generation whose words fit in one Word (f_10 = 55 <= 64 < f_11).
inline constexpr unsigned max_packed_generation = 10;

}  // namespace rfw
