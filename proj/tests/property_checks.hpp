#pragma once

// Exhaustive checks of the combinatorial facts the reconstructors rely on.
// Shared by the unit suite and the acceptance binary.

#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "strrecon/jumbled.hpp"
#include "strrecon/strings.hpp"
#include "support.hpp"

namespace props {

struct Outcome {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string example;  // first violation

  void fail(std::string what) {
    if (violations++ == 0) example = std::move(what);
  }
};

// Periods a, b of X with |X| >= a + b - gcd(a, b) imply period gcd(a, b).
inline Outcome fine_wilf(std::size_t max_n) {
  Outcome o;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::uint64_t i = 0; i < ref::count_strings(2, n); ++i) {
      const auto x = ref::nth_string("ab", n, i);
      std::vector<std::size_t> periods;
      for (std::size_t L = 1; L <= n; ++L)
        if (strrecon::has_period_of_length(x, L)) periods.push_back(L);
      for (std::size_t a : periods)
        for (std::size_t b : periods) {
          const std::size_t g = std::gcd(a, b);
          if (n < a + b - g) continue;
          ++o.checked;
          if (!ref::has_period(x, g)) o.fail(x + " periods " + std::to_string(a) + "," + std::to_string(b));
        }
    }
  return o;
}

// For periodic S with smallest period p, every substring T whose smallest
// period q is shorter than p satisfies |p| > |T| - |q| + 1, so the next
// candidate T[..|T|-|q|+1] never overshoots p.
inline Outcome candidate_growth(std::size_t max_n) {
  Outcome o;
  for (std::size_t n = 2; n <= max_n; ++n)
    for (std::uint64_t i = 0; i < ref::count_strings(2, n); ++i) {
      const auto s = ref::nth_string("ab", n, i);
      const std::size_t big_p = ref::period_length(s);
      if (n / big_p < 2) continue;
      for (std::size_t start = 0; start < n; ++start)
        for (std::size_t len = 1; start + len <= n; ++len) {
          const std::size_t q = ref::period_length(std::string_view(s).substr(start, len));
          if (q >= big_p) continue;
          ++o.checked;
          if (!(big_p > len - q + 1)) o.fail(s + " T=" + s.substr(start, len));
        }
    }
  return o;
}

// A window of (2d+1)|p| letters of a rotation of p^inf with at most d
// substitutions, cut into |p|-blocks: exactly one block value occurs at least
// d+1 times, and it is the uncorrupted rotation.
inline Outcome majority_block(std::size_t max_p, std::size_t max_d) {
  Outcome o;
  for (std::size_t len = 1; len <= max_p; ++len)
    for (std::uint64_t i = 0; i < ref::count_strings(2, len); ++i) {
      const auto p = ref::nth_string("ab", len, i);
      if (!strrecon::is_primitive(p)) continue;
      for (std::size_t d = 0; d <= max_d; ++d) {
        const std::size_t blocks = 2 * d + 1;
        const std::size_t w = blocks * len;
        for (std::size_t phase = 0; phase < len; ++phase) {
          const auto clean = strrecon::periodic_extension(p, phase, w);
          const auto expected = strrecon::cyclic_rotation(p, phase + 1);
          auto check = [&](const std::string& window) {
            ++o.checked;
            std::map<std::string, std::size_t> count;
            for (std::size_t b = 0; b < blocks; ++b) ++count[window.substr(b * len, len)];
            std::size_t winners = 0;
            bool right = false;
            for (const auto& [block, c] : count)
              if (c >= d + 1) {
                ++winners;
                right = block == expected;
              }
            if (winners != 1 || !right) o.fail(window + " p=" + p + " d=" + std::to_string(d));
          };
          check(clean);
          auto flip = [](char c) { return c == 'a' ? 'b' : 'a'; };
          for (std::size_t a = 0; a < w && d >= 1; ++a) {
            auto one = clean;
            one[a] = flip(one[a]);
            check(one);
            for (std::size_t b = a + 1; b < w && d >= 2; ++b) {
              auto two = one;
              two[b] = flip(two[b]);
              check(two);
            }
          }
        }
      }
    }
  return o;
}

// Plain jumbled yes/no answers (the set of substring Parikh vectors) agree for
// every non-palindrome and its reversal.
inline Outcome reversal(std::size_t max_n) {
  Outcome o;
  const strrecon::Alphabet ab("ab");
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::uint64_t i = 0; i < ref::count_strings(2, n); ++i) {
      const auto s = ref::nth_string("ab", n, i);
      const std::string r(s.rbegin(), s.rend());
      if (s == r) continue;
      ++o.checked;
      std::set<std::vector<std::uint32_t>> ts, tr;
      for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = a; b <= n; ++b) {
          ts.insert(ref::counts("ab", s.substr(a, b - a)));
          tr.insert(ref::counts("ab", r.substr(a, b - a)));
        }
      if (ts != tr) o.fail(s);
      if (n <= 8 && strrecon::jumbled::plain_jumbled_answers(ab, s) != strrecon::jumbled::plain_jumbled_answers(ab, r))
        o.fail(s + " (library table)");
    }
  return o;
}

}  // namespace props
