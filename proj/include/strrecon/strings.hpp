#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "strrecon/alphabet.hpp"

namespace strrecon {

// Letter-frequency vector, one count per alphabet letter in alphabet order.
struct ParikhVector {
  std::vector<std::uint32_t> counts;

  ParikhVector() = default;
  explicit ParikhVector(std::size_t sigma) : counts(sigma, 0) {}
  explicit ParikhVector(std::vector<std::uint32_t> c) : counts(std::move(c)) {}

  std::size_t sigma() const noexcept { return counts.size(); }
  std::uint64_t total() const noexcept;

  // The vector with one extra occurrence of letter `i`.
  ParikhVector plus_letter(std::size_t i) const;

  // Unit vector for letter `i`.
  static ParikhVector unit(std::size_t sigma, std::size_t i);

  auto operator<=>(const ParikhVector&) const = default;
};

// Parikh vector over the letters plus the end-of-string marker '$'.
// The marker occurs once in S$, so `end` is 0 or 1.
struct ExtendedParikhVector {
  ParikhVector letters;
  std::uint32_t end = 0;

  std::uint64_t total() const noexcept { return letters.total() + end; }
  auto operator<=>(const ExtendedParikhVector&) const = default;
};

// S = p^k p' with p the smallest period and p' a proper prefix of p.
struct PeriodDecomposition {
  std::string p;
  std::size_t k = 0;
  std::string p_prime;

  std::string expand() const;
  bool operator==(const PeriodDecomposition&) const = default;
};

// Ground-truth matchers. Both throw AlphabetError if either argument leaves
// the alphabet.
bool naive_is_substring(const Alphabet& alphabet, std::string_view text, std::string_view pattern);
bool naive_is_subsequence(const Alphabet& alphabet, std::string_view text, std::string_view pattern);

// Unchecked variants used on hot paths.
bool window_contains(std::string_view text, std::string_view pattern) noexcept;
bool greedy_subsequence(std::string_view text, std::string_view pattern) noexcept;

// Linear-time (Knuth-Morris-Pratt) containment test.
bool kmp_contains(std::string_view text, std::string_view pattern);

// Suffix automaton of a fixed text: answers "is x a substring" in O(|x|)
// after O(n sigma) construction.
class SubstringIndex {
 public:
  SubstringIndex(const Alphabet& alphabet, std::string_view text);
  bool contains(std::string_view pattern) const noexcept;

 private:
  std::size_t sigma_;
  std::array<std::int16_t, 256> slot_{};
  std::vector<std::int32_t> next_;  // state * sigma + letter, -1 if absent
  std::vector<std::int32_t> link_;
  std::vector<std::int32_t> len_;
};

// O(n^2) scan over candidate period lengths. Throws ContractError on "".
PeriodDecomposition smallest_period(std::string_view s);

// s[i] == s[i+L] for every valid i. Requires 1 <= L <= |s|.
bool has_period_of_length(std::string_view s, std::size_t length);

// Throws ContractError on a length mismatch.
std::size_t hamming_distance(std::string_view a, std::string_view b);

ParikhVector parikh_of(const Alphabet& alphabet, std::string_view s);

// p[start..] . p[..start-1] with a 1-based start in 1..|p|.
std::string cyclic_rotation(std::string_view p, std::size_t start);

std::string reversed(std::string_view s);

// x^t
std::string power(std::string_view x, std::size_t t);

// The first `length` letters of q^inf read from offset `phase` (0-based).
std::string periodic_extension(std::string_view q, std::size_t phase, std::size_t length);

// True iff s is not a proper power of a shorter string.
bool is_primitive(std::string_view s);

// Largest integer m with 2^m <= x (x >= 1).
unsigned floor_lg(std::uint64_t x) noexcept;
// Smallest integer m with 2^m >= x (x >= 1).
unsigned ceil_lg(std::uint64_t x) noexcept;

}  // namespace strrecon
