#include <doctest.h>

#include <random>

#include "strrecon/alphabet.hpp"
#include "strrecon/errors.hpp"
#include "strrecon/rng.hpp"
#include "strrecon/search.hpp"
#include "strrecon/strings.hpp"
#include "support.hpp"

using namespace strrecon;

TEST_CASE("alphabet rejects duplicates and empty letter lists") {
  CHECK_THROWS_AS(Alphabet("aba"), AlphabetError);
  CHECK_THROWS_AS(Alphabet(""), AlphabetError);
  const Alphabet ab("ab");
  CHECK(ab.size() == 2);
  CHECK(ab.index_of('b') == 1);
  CHECK(ab.index_of('z') == Alphabet::npos);
  CHECK_THROWS_AS(ab.require("abc"), AlphabetError);
  CHECK(Alphabet::first(3).letters() == "abc");
  CHECK(Alphabet::first(26).letters().back() == 'z');
}

TEST_CASE("naive matchers") {
  const Alphabet ab("ab");
  CHECK(naive_is_substring(ab, "ababab", "aba"));
  CHECK(naive_is_substring(ab, "ababab", ""));
  CHECK_FALSE(naive_is_substring(ab, "ab", "ba"));
  CHECK(naive_is_subsequence(ab, "ababab", "aaa"));
  CHECK_FALSE(naive_is_subsequence(ab, "ababab", "bbba"));
  CHECK(naive_is_subsequence(Alphabet("x"), "x", ""));
  CHECK_THROWS_AS(naive_is_substring(ab, "ab", "c"), AlphabetError);
  CHECK_THROWS_AS(naive_is_subsequence(ab, "ac", "a"), AlphabetError);
}

TEST_CASE("substring matchers agree with each other and with std::string::find") {
  std::mt19937_64 rng(11);
  const std::string letters = "abc";
  const Alphabet abc(letters);
  for (int trial = 0; trial < 300; ++trial) {
    const auto text = ref::random_string(rng, letters, rng() % 40);
    const SubstringIndex index(abc, text);
    for (int q = 0; q < 30; ++q) {
      const auto pattern = ref::random_string(rng, letters.substr(0, 1 + rng() % 3), rng() % 6);
      const bool expected = ref::substring(text, pattern);
      CHECK(window_contains(text, pattern) == expected);
      CHECK(kmp_contains(text, pattern) == expected);
      CHECK(index.contains(pattern) == expected);
      CHECK(greedy_subsequence(text, pattern) == ref::subsequence(text, pattern));
    }
  }
}

TEST_CASE("smallest_period") {
  CHECK(smallest_period("ababab") == PeriodDecomposition{"ab", 3, ""});
  CHECK(smallest_period("abababaababababaababababaab") == PeriodDecomposition{"abababaab", 3, ""});
  CHECK(smallest_period("aaaa") == PeriodDecomposition{"a", 4, ""});
  CHECK(smallest_period("abcab") == PeriodDecomposition{"abc", 1, "ab"});
  CHECK_THROWS_AS(smallest_period(""), ContractError);
  CHECK(smallest_period("abababa").expand() == "abababa");
}

TEST_CASE("smallest_period matches the definition exhaustively for binary strings up to 14") {
  for (std::size_t n = 1; n <= 14; ++n)
    for (std::uint64_t i = 0; i < ref::count_strings(2, n); ++i) {
      const auto s = ref::nth_string("ab", n, i);
      const auto d = smallest_period(s);
      REQUIRE(d.p.size() == ref::period_length(s));
      REQUIRE(d.expand() == s);
      REQUIRE(d.p_prime.size() < d.p.size());
      std::size_t min_l = 0;
      for (std::size_t L = 1; L <= n && !min_l; ++L)
        if (has_period_of_length(s, L)) min_l = L;
      REQUIRE(min_l == d.p.size());
    }
}

TEST_CASE("has_period_of_length") {
  CHECK(has_period_of_length("ababa", 2));
  CHECK(has_period_of_length("ababa", 5));
  CHECK_FALSE(has_period_of_length("abc", 2));
}

TEST_CASE("hamming_distance") {
  CHECK(hamming_distance("abab", "abab") == 0);
  CHECK(hamming_distance("abab", "abbb") == 1);
  CHECK(hamming_distance("aaaa", "bbbb") == 4);
  CHECK_THROWS_AS(hamming_distance("ab", "abc"), ContractError);
}

TEST_CASE("parikh_of") {
  const Alphabet ab("ab");
  CHECK(parikh_of(ab, "aab").counts == std::vector<std::uint32_t>{2, 1});
  CHECK(parikh_of(ab, "").counts == std::vector<std::uint32_t>{0, 0});
  CHECK(parikh_of(ab, "bbb").counts == std::vector<std::uint32_t>{0, 3});
  CHECK(parikh_of(ab, "bbb").total() == 3);
}

TEST_CASE("cyclic_rotation and periodic helpers") {
  CHECK(cyclic_rotation("abc", 2) == "bca");
  CHECK(cyclic_rotation("abc", 1) == "abc");
  CHECK(cyclic_rotation("abababaab", 8) == "ab" + std::string("abababa"));
  CHECK(periodic_extension("abc", 1, 7) == "bcabcab");
  CHECK(power("ab", 3) == "ababab");
  CHECK(reversed("abc") == "cba");
  CHECK(is_primitive("aba"));
  CHECK_FALSE(is_primitive("abab"));
  CHECK(floor_lg(13) == 3);
  CHECK(ceil_lg(13) == 4);
  CHECK(ceil_lg(1) == 0);
}

TEST_CASE("doubling_search examples") {
  auto upto = [](std::uint64_t v) { return [v](std::uint64_t m) { return m <= v; }; };
  auto r = doubling_search(upto(13), 1);
  CHECK(r.value == 13);
  CHECK(r.probes <= 7);
  r = doubling_search(upto(1), 1);
  CHECK(r.value == 1);
  CHECK(r.probes <= 1);
  r = doubling_search(upto(100), 1);
  CHECK(r.value == 100);
  CHECK(r.probes <= 15);
  r = doubling_search(upto(0), 0);
  CHECK(r.value == 0);
  CHECK(r.probes == 1);
  CHECK_THROWS_AS(doubling_search([](std::uint64_t) { return true; }, 1, std::nullopt, 1000), BudgetExceeded);
}

TEST_CASE("doubling_search probes stay within 2 floor(lg v) + 1 for v up to 10^6") {
  for (std::uint64_t v = 1; v <= 1000000; ++v) {
    std::uint64_t calls = 0;
    const auto r = doubling_search(
        [&](std::uint64_t m) {
          ++calls;
          return m <= v;
        },
        1);
    if (r.value != v || r.probes != calls || r.probes > 2 * ref::floor_log2(v) + 1) {
      FAIL("v = " << v << " value " << r.value << " probes " << r.probes);
    }
  }
}

TEST_CASE("doubling_search respects an upper ceiling") {
  for (std::uint64_t v = 0; v <= 40; ++v) {
    const auto r = doubling_search([v](std::uint64_t m) { return m <= v; }, 0, std::uint64_t{40});
    CHECK(r.value == v);
  }
}

TEST_CASE("bounded_binary_search") {
  for (std::uint64_t hi = 1; hi <= 64; ++hi)
    for (std::uint64_t v = 0; v < hi; ++v) {
      const auto r = bounded_binary_search([v](std::uint64_t m) { return m <= v; }, 0, hi);
      REQUIRE(r.value == v);
      REQUIRE(r.probes <= ref::ceil_log2(hi));
    }
}

TEST_CASE("SplitMix64 is deterministic and mix_seed separates streams") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a() == b());
  CHECK(mix_seed(1, 2) != mix_seed(1, 3));
  CHECK(mix_seed(1, 2) == mix_seed(1, 2));
  SplitMix64 g(3);
  for (int i = 0; i < 1000; ++i) CHECK(g.below(7) < 7);
}
