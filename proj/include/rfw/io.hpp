#pragma once

// Interchange formats.
//
// Text:   one ASCII word per line in canonical order, trailing newline.
// Binary: "RFW1", u8 version (1), u8 word length, u32 LE count, then count
//         u64 LE packed words in canonical order.
// JSON:   FactorReport objects; counts are decimal strings.

#include <array>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rfw/report.hpp"
#include "rfw/word_set.hpp"

namespace rfw {

inline void write_text(std::ostream& os, const WordSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) os << s[i].str() << '\n';
}

// Reads a text export. Blank trailing lines are ignored; all words must share
// one length and come in canonical order without repeats.
inline WordSet read_text(std::istream& is) {
  std::vector<std::uint64_t> keys;
  std::string line;
  std::size_t len = 0;
  bool first = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const Word w = Word::parse(line);
    if (first) {
      len = w.size();
      first = false;
    } else if (w.size() != len) {
      throw format_error("mixed word lengths in text word set");
    }
    if (!keys.empty() && keys.back() >= w.bits())
      throw format_error("text word set is not in canonical order");
    keys.push_back(w.bits());
  }
  return WordSet::from_sorted_keys(len, std::move(keys));
}

inline constexpr std::array<char, 4> binary_magic{'R', 'F', 'W', '1'};
inline constexpr std::uint8_t binary_version = 1;

namespace detail {

template <class T>
void put_le(std::ostream& os, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}

template <class T>
T get_le(std::istream& is) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    const int c = is.get();
    if (c == std::char_traits<char>::eof()) throw format_error("truncated RFW1 stream");
    v |= static_cast<T>(static_cast<std::uint8_t>(c)) << (8 * i);
  }
  return v;
}

}  // namespace detail

inline void write_binary(std::ostream& os, const WordSet& s) {
  if (s.size() > UINT32_MAX) throw capacity_error("RFW1 holds at most 2^32-1 words");
  os.write(binary_magic.data(), binary_magic.size());
  detail::put_le<std::uint8_t>(os, binary_version);
  detail::put_le<std::uint8_t>(os, static_cast<std::uint8_t>(s.length()));
  detail::put_le<std::uint32_t>(os, static_cast<std::uint32_t>(s.size()));
  for (std::uint64_t k : s.keys()) detail::put_le<std::uint64_t>(os, k);
}

inline WordSet read_binary(std::istream& is) {
  std::array<char, 4> magic{};
  if (!is.read(magic.data(), magic.size()) || magic != binary_magic)
    throw format_error("missing RFW1 magic");
  if (detail::get_le<std::uint8_t>(is) != binary_version)
    throw format_error("unsupported RFW1 version");
  const std::size_t len = detail::get_le<std::uint8_t>(is);
  if (len > Word::max_length) throw format_error("RFW1 word length exceeds 64");
  const std::uint32_t count = detail::get_le<std::uint32_t>(is);
  std::vector<std::uint64_t> keys;
  keys.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto k = detail::get_le<std::uint64_t>(is);
    if ((k & ~low_mask(len)) != 0) throw format_error("RFW1 word has bits beyond its length");
    if (!keys.empty() && keys.back() >= k) throw format_error("RFW1 words not in canonical order");
    keys.push_back(k);
  }
  return WordSet::from_sorted_keys(len, std::move(keys));
}

// ---------------------------------------------------------------------------
// Reports

inline nlohmann::json to_json(const FactorReport& r) {
  auto opt = [](const std::optional<BigCount>& v) -> nlohmann::json {
    return v ? nlohmann::json(v->str()) : nlohmann::json(nullptr);
  };
  nlohmann::json j;
  j["n"] = r.n;
  j["f_n"] = r.f_n;
  j["A_n"] = r.A_n.str();
  j["F_n"] = opt(r.F_n);
  j["F_A_next"] = opt(r.F_A_next);
  if (r.c_n)
    j["c_n"] = {{"num", r.c_n->value.num}, {"den", r.c_n->value.den}, {"rounded", r.c_n->value.fixed(5)}};
  else
    j["c_n"] = nullptr;
  return j;
}

inline constexpr const char* csv_header = "n,f_n,A_n,F_n,F_A_next,c_n";

inline std::string to_csv(const FactorReport& r) {
  std::ostringstream os;
  os << r.n << ',' << r.f_n << ',' << r.A_n << ',';
  if (r.F_n) os << *r.F_n;
  os << ',';
  if (r.F_A_next) os << *r.F_A_next;
  os << ',';
  if (r.c_n) os << r.c_n->value.table_string();
  return os.str();
}

inline void write_text_table_header(std::ostream& os) {
  os << std::setw(3) << "n" << std::setw(6) << "f_n" << std::setw(12) << "|A_n|" << std::setw(12)
     << "|F_n|" << std::setw(18) << "|F(A_n+1,f_n)|" << std::setw(10) << "c_n" << '\n';
}

inline void write_text_table_row(std::ostream& os, const FactorReport& r) {
  auto cell = [](const std::optional<BigCount>& v) { return v ? v->str() : std::string(); };
  os << std::setw(3) << r.n << std::setw(6) << r.f_n << std::setw(12) << r.A_n.str()
     << std::setw(12) << cell(r.F_n) << std::setw(18) << cell(r.F_A_next) << std::setw(10)
     << (r.c_n ? r.c_n->value.table_string() : std::string()) << '\n';
}

}  // namespace rfw
