#include "strrecon/strings.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "strrecon/errors.hpp"

namespace strrecon {

std::uint64_t ParikhVector::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

ParikhVector ParikhVector::plus_letter(std::size_t i) const {
  ParikhVector out = *this;
  ++out.counts.at(i);
  return out;
}

ParikhVector ParikhVector::unit(std::size_t sigma, std::size_t i) {
  ParikhVector out(sigma);
  out.counts.at(i) = 1;
  return out;
}

std::string PeriodDecomposition::expand() const { return power(p, k) + p_prime; }

bool window_contains(std::string_view text, std::string_view pattern) noexcept {
  if (pattern.size() > text.size()) return false;
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i)
    if (text.compare(i, pattern.size(), pattern) == 0) return true;
  return false;
}

bool greedy_subsequence(std::string_view text, std::string_view pattern) noexcept {
  std::size_t j = 0;
  for (std::size_t i = 0; i < text.size() && j < pattern.size(); ++i)
    if (text[i] == pattern[j]) ++j;
  return j == pattern.size();
}

bool naive_is_substring(const Alphabet& alphabet, std::string_view text, std::string_view pattern) {
  alphabet.require(text);
  alphabet.require(pattern);
  return window_contains(text, pattern);
}

bool naive_is_subsequence(const Alphabet& alphabet, std::string_view text, std::string_view pattern) {
  alphabet.require(text);
  alphabet.require(pattern);
  return greedy_subsequence(text, pattern);
}

bool kmp_contains(std::string_view text, std::string_view pattern) {
  const std::size_t m = pattern.size();
  if (m == 0) return true;
  if (m > text.size()) return false;
  std::vector<std::size_t> fail(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && pattern[i] != pattern[k]) k = fail[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    fail[i] = k;
  }
  for (std::size_t i = 0, k = 0; i < text.size(); ++i) {
    while (k > 0 && text[i] != pattern[k]) k = fail[k - 1];
    if (text[i] == pattern[k]) ++k;
    if (k == m) return true;
  }
  return false;
}

bool has_period_of_length(std::string_view s, std::size_t length) {
  if (length == 0 || length > s.size()) throw ContractError("period length must be in 1..|s|");
  for (std::size_t i = 0; i + length < s.size(); ++i)
    if (s[i] != s[i + length]) return false;
  return true;
}

PeriodDecomposition smallest_period(std::string_view s) {
  if (s.empty()) throw ContractError("smallest_period of the empty string");
  std::size_t len = 1;
  while (!has_period_of_length(s, len)) ++len;
  PeriodDecomposition d;
  d.p = std::string(s.substr(0, len));
  d.k = s.size() / len;
  d.p_prime = std::string(s.substr(d.k * len));
  return d;
}

std::size_t hamming_distance(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) throw ContractError("hamming_distance needs equal lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

ParikhVector parikh_of(const Alphabet& alphabet, std::string_view s) {
  ParikhVector v(alphabet.size());
  for (char c : s) {
    const auto i = alphabet.index_of(c);
    if (i == Alphabet::npos) alphabet.require(std::string_view(&c, 1));
    ++v.counts[i];
  }
  return v;
}

std::string cyclic_rotation(std::string_view p, std::size_t start) {
  if (start < 1 || start > p.size()) throw ContractError("rotation start must be in 1..|p|");
  std::string out(p.substr(start - 1));
  out.append(p.substr(0, start - 1));
  return out;
}

std::string reversed(std::string_view s) { return std::string(s.rbegin(), s.rend()); }

std::string power(std::string_view x, std::size_t t) {
  std::string out;
  out.reserve(x.size() * t);
  for (std::size_t i = 0; i < t; ++i) out.append(x);
  return out;
}

std::string periodic_extension(std::string_view q, std::size_t phase, std::size_t length) {
  std::string out;
  if (q.empty()) return out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(q[(phase + i) % q.size()]);
  return out;
}

bool is_primitive(std::string_view s) {
  if (s.empty()) return false;
  for (std::size_t len = 1; len < s.size(); ++len)
    if (s.size() % len == 0 && has_period_of_length(s, len)) return false;
  return true;
}

unsigned floor_lg(std::uint64_t x) noexcept { return x == 0 ? 0 : static_cast<unsigned>(std::bit_width(x) - 1); }

unsigned ceil_lg(std::uint64_t x) noexcept { return x <= 1 ? 0 : static_cast<unsigned>(std::bit_width(x - 1)); }

}  // namespace strrecon

namespace strrecon {

SubstringIndex::SubstringIndex(const Alphabet& alphabet, std::string_view text) : sigma_(alphabet.size()) {
  slot_.fill(-1);
  for (std::size_t i = 0; i < sigma_; ++i) slot_[static_cast<unsigned char>(alphabet[i])] = static_cast<std::int16_t>(i);
  const std::size_t cap = 2 * text.size() + 2;
  next_.reserve(cap * sigma_);
  link_.reserve(cap);
  len_.reserve(cap);
  auto add_state = [&](std::int32_t length) {
    next_.insert(next_.end(), sigma_, -1);
    link_.push_back(-1);
    len_.push_back(length);
    return static_cast<std::int32_t>(len_.size() - 1);
  };
  add_state(0);
  std::int32_t last = 0;
  for (char ch : text) {
    const auto c = slot_[static_cast<unsigned char>(ch)];
    if (c < 0) throw AlphabetError(std::string("letter '") + ch + "' is not in the alphabet");
    const std::int32_t cur = add_state(len_[last] + 1);
    std::int32_t p = last;
    while (p != -1 && next_[p * sigma_ + c] == -1) {
      next_[p * sigma_ + c] = cur;
      p = link_[p];
    }
    if (p == -1) {
      link_[cur] = 0;
    } else {
      const std::int32_t q = next_[p * sigma_ + c];
      if (len_[p] + 1 == len_[q]) {
        link_[cur] = q;
      } else {
        const std::int32_t clone = add_state(len_[p] + 1);
        std::copy_n(next_.begin() + q * sigma_, sigma_, next_.begin() + clone * sigma_);
        link_[clone] = link_[q];
        while (p != -1 && next_[p * sigma_ + c] == q) {
          next_[p * sigma_ + c] = clone;
          p = link_[p];
        }
        link_[q] = clone;
        link_[cur] = clone;
      }
    }
    last = cur;
  }
}

bool SubstringIndex::contains(std::string_view pattern) const noexcept {
  std::int32_t state = 0;
  for (char ch : pattern) {
    const auto c = slot_[static_cast<unsigned char>(ch)];
    if (c < 0) return false;
    state = next_[state * sigma_ + c];
    if (state < 0) return false;
  }
  return true;
}

}  // namespace strrecon
