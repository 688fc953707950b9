#pragma once

// Slow string-based reference implementations. Nothing here touches the
// packed representation, so it is an independent check on the library.

#include <set>
#include <string>
#include <vector>

namespace oracle {

using StringSet = std::set<std::string>;

// Every possible outcome of applying the random substitution to each word.
inline StringSet substitute_all(const StringSet& words) {
  StringSet out;
  for (const std::string& w : words) {
    std::vector<std::string> partial{""};
    for (char c : w) {
      std::vector<std::string> next;
      if (c == '0') {
        for (auto& p : partial) next.push_back(p + "1");
      } else {
        for (auto& p : partial) {
          next.push_back(p + "01");
          next.push_back(p + "10");
        }
      }
      partial.swap(next);
    }
    out.insert(partial.begin(), partial.end());
  }
  return out;
}

// All realisations of theta^{n-1}(0).
inline StringSet realizations(unsigned n) {
  if (n == 0) return {};
  StringSet s{"0"};
  for (unsigned i = 1; i < n; ++i) s = substitute_all(s);
  return s;
}

// A_n straight from the set recursion on strings.
inline StringSet recursion(unsigned n) {
  if (n == 0) return {};
  StringSet older{"0"}, newer{"1"};
  if (n == 1) return older;
  for (unsigned m = 3; m <= n; ++m) {
    StringSet next;
    for (const auto& a : newer)
      for (const auto& b : older) {
        next.insert(a + b);
        next.insert(b + a);
      }
    older.swap(newer);
    newer.swap(next);
  }
  return newer;
}

inline StringSet factors(const StringSet& s, std::size_t l) {
  StringSet out;
  for (const auto& w : s)
    for (std::size_t i = 0; i + l <= w.size(); ++i) out.insert(w.substr(i, l));
  return out;
}

// {w[a,b]} with 1-based inclusive bounds.
inline StringSet slices(const StringSet& s, std::size_t a, std::size_t b) {
  StringSet out;
  for (const auto& w : s) out.insert(w.substr(a - 1, b + 1 - a));
  return out;
}

inline std::string reverse(std::string s) { return {s.rbegin(), s.rend()}; }

}  // namespace oracle
