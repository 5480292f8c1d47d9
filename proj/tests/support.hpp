#pragma once

// Independent reference implementations for the tests. Nothing here calls
// into the library's matchers.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ref {

inline bool substring(std::string_view text, std::string_view pattern) {
  return std::string(text).find(pattern) != std::string::npos;
}

// Longest-common-subsequence DP: pattern is a subsequence iff LCS = |pattern|.
inline bool subsequence(std::string_view text, std::string_view pattern) {
  std::vector<std::size_t> prev(pattern.size() + 1, 0), cur(pattern.size() + 1, 0);
  for (char t : text) {
    for (std::size_t j = 1; j <= pattern.size(); ++j)
      cur[j] = t == pattern[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    prev = cur;
  }
  return prev[pattern.size()] == pattern.size();
}

inline std::vector<std::uint32_t> counts(std::string_view letters, std::string_view s) {
  std::vector<std::uint32_t> c(letters.size(), 0);
  for (char ch : s) ++c[letters.find(ch)];
  return c;
}

// 1-based starts of windows with the given letter counts.
inline std::vector<std::size_t> jumbled_starts(std::string_view letters, std::string_view s,
                                               const std::vector<std::uint32_t>& want) {
  std::size_t len = 0;
  for (auto w : want) len += w;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + len <= s.size(); ++i)
    if (counts(letters, s.substr(i, len)) == want) out.push_back(i + 1);
  return out;
}

// Smallest L such that s[i] == s[i+L] throughout, by definition.
inline std::size_t period_length(std::string_view s) {
  for (std::size_t L = 1; L < s.size(); ++L) {
    bool ok = true;
    for (std::size_t i = 0; i + L < s.size() && ok; ++i) ok = s[i] == s[i + L];
    if (ok) return L;
  }
  return s.size();
}

inline bool has_period(std::string_view s, std::size_t L) {
  for (std::size_t i = 0; i + L < s.size(); ++i)
    if (s[i] != s[i + L]) return false;
  return true;
}

// Smallest period repeats at least `min_k` times.
inline bool periodic(std::string_view s, std::size_t min_k = 2) {
  return !s.empty() && s.size() / period_length(s) >= min_k;
}

// The n-th string of length `len` over `letters` in base-sigma order.
inline std::string nth_string(std::string_view letters, std::size_t len, std::uint64_t index) {
  std::string s(len, letters[0]);
  for (std::size_t i = len; i-- > 0;) {
    s[i] = letters[index % letters.size()];
    index /= letters.size();
  }
  return s;
}

inline std::uint64_t count_strings(std::size_t sigma, std::size_t len) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= sigma;
  return total;
}

inline std::string random_string(std::mt19937_64& rng, std::string_view letters, std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::string s(len, ' ');
  for (auto& c : s) c = letters[pick(rng)];
  return s;
}

inline std::string repeat(std::string_view x, std::size_t t) {
  std::string out;
  for (std::size_t i = 0; i < t; ++i) out += x;
  return out;
}

inline unsigned ceil_log2(std::uint64_t x) {
  unsigned m = 0;
  while ((std::uint64_t{1} << m) < x) ++m;
  return m;
}

inline unsigned floor_log2(std::uint64_t x) {
  unsigned m = 0;
  while ((x >> (m + 1)) != 0) ++m;
  return m;
}

}  // namespace ref
