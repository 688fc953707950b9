#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

#include "rfw/word.hpp"

namespace rfw {

// Sorts ascending and drops duplicates in place.
inline void sort_unique(std::vector<std::uint64_t>& keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
}

// Immutable, deduplicated set of equal-length words in ascending order of
// their packed value.
class WordSet {
 public:
  WordSet() = default;

  // Takes arbitrary packed keys of length `len`; sorts and deduplicates.
  static WordSet from_keys(std::size_t len, std::vector<std::uint64_t> keys) {
    if (len > Word::max_length) throw capacity_error("word length exceeds 64 symbols");
    const std::uint64_t mask = low_mask(len);
    for (std::uint64_t k : keys)
      if ((k & ~mask) != 0) throw argument_error("key has bits beyond the set's word length");
    sort_unique(keys);
    return WordSet(len, std::move(keys));
  }

  // Skips validation; keys must already be sorted, unique and masked.
  static WordSet from_sorted_keys(std::size_t len, std::vector<std::uint64_t> keys) {
    return WordSet(len, std::move(keys));
  }

  static WordSet from_words(std::size_t len, std::span<const Word> words) {
    std::vector<std::uint64_t> keys;
    keys.reserve(words.size());
    for (const Word& w : words) {
      if (w.size() != len) throw argument_error("word length differs from set length");
      keys.push_back(w.bits());
    }
    return from_keys(len, std::move(keys));
  }

  std::size_t length() const noexcept { return len_; }
  std::size_t size() const noexcept { return keys_.size(); }
  bool empty() const noexcept { return keys_.empty(); }
  std::span<const std::uint64_t> keys() const noexcept { return keys_; }

  Word operator[](std::size_t i) const { return Word(keys_[i], len_); }

  bool contains(const Word& w) const {
    return w.size() == len_ && std::binary_search(keys_.begin(), keys_.end(), w.bits());
  }
  bool contains_key(std::uint64_t key) const {
    return std::binary_search(keys_.begin(), keys_.end(), key);
  }

  std::vector<Word> words() const {
    std::vector<Word> out;
    out.reserve(keys_.size());
    for (std::uint64_t k : keys_) out.emplace_back(k, len_);
    return out;
  }

  friend bool operator==(const WordSet&, const WordSet&) = default;

 private:
  WordSet(std::size_t len, std::vector<std::uint64_t> keys) : len_(len), keys_(std::move(keys)) {}

  std::size_t len_ = 0;
  std::vector<std::uint64_t> keys_;
};

// {uv : u in U, v in V}.
inline WordSet product(const WordSet& u, const WordSet& v) {
  if (u.length() + v.length() > Word::max_length)
    throw capacity_error("set product exceeds 64 symbols");
  const std::size_t shift = u.length();
  std::vector<std::uint64_t> keys;
  keys.reserve(u.size() * v.size());
  for (std::uint64_t b : v.keys()) {
    const std::uint64_t high = shift == 64 ? 0 : b << shift;
    for (std::uint64_t a : u.keys()) keys.push_back(a | high);
  }
  return WordSet::from_keys(u.length() + v.length(), std::move(keys));
}

inline WordSet set_union(const WordSet& a, const WordSet& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.length() != b.length()) throw argument_error("union of sets with different lengths");
  std::vector<std::uint64_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.keys().begin(), a.keys().end(), b.keys().begin(), b.keys().end(),
                 std::back_inserter(out));
  return WordSet::from_sorted_keys(a.length(), std::move(out));
}

inline WordSet set_intersection(const WordSet& a, const WordSet& b) {
  if (a.length() != b.length()) return WordSet::from_sorted_keys(a.length(), {});
  std::vector<std::uint64_t> out;
  std::set_intersection(a.keys().begin(), a.keys().end(), b.keys().begin(), b.keys().end(),
                        std::back_inserter(out));
  return WordSet::from_sorted_keys(a.length(), std::move(out));
}

inline WordSet reversed(const WordSet& s) {
  std::vector<std::uint64_t> keys;
  keys.reserve(s.size());
  for (std::uint64_t k : s.keys()) keys.push_back(reverse_bits(k, s.length()));
  return WordSet::from_keys(s.length(), std::move(keys));
}

// Witness for a set inequality: the smallest word in exactly one of the sets.
struct Difference {
  bool found = false;
  Word word;
  bool in_first = false;
};

inline Difference first_difference(const WordSet& a, const WordSet& b) {
  auto ak = a.keys();
  auto bk = b.keys();
  std::size_t i = 0, j = 0;
  while (i < ak.size() || j < bk.size()) {
    if (j == bk.size() || (i < ak.size() && ak[i] < bk[j])) return {true, a[i], true};
    if (i == ak.size() || bk[j] < ak[i]) return {true, b[j], false};
    ++i;
    ++j;
  }
  if (a.length() != b.length() && (!a.empty() || !b.empty()))
    return {true, a.empty() ? b[0] : a[0], !a.empty()};
  return {};
}

}  // namespace rfw
