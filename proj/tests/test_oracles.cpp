#include <doctest.h>

#include <map>
#include <random>
#include <sstream>

#include "strrecon/errors.hpp"
#include "strrecon/jumbled.hpp"
#include "strrecon/oracle.hpp"
#include "support.hpp"

using namespace strrecon;

namespace {

ParikhVector pv(std::vector<std::uint32_t> c) { return ParikhVector(std::move(c)); }

ExtendedParikhVector epv(std::vector<std::uint32_t> c, std::uint32_t end) { return {ParikhVector(std::move(c)), end}; }

}  // namespace

TEST_CASE("is_substr and is_subseq examples") {
  OracleHandle o(Alphabet("ab"), "ababab");
  CHECK(o.is_substr("bab"));
  CHECK_FALSE(o.is_substr("aab"));
  CHECK(o.is_substr(""));
  CHECK(o.counters().substr == 3);
  CHECK(o.is_subseq("aaa"));
  CHECK_FALSE(o.is_subseq("aaaa"));
  CHECK(o.is_subseq("bbb"));
  CHECK(o.counters() == QueryCounters{3, 3, 0, 0, 0});
}

TEST_CASE("jie examples") {
  OracleHandle o(Alphabet("ab"), "ab");
  CHECK(o.jie(epv({1, 1}, 1)));
  CHECK_FALSE(o.jie(epv({1, 0}, 1)));
  CHECK(o.jie(epv({0, 0}, 1)));
  CHECK(o.jie(epv({1, 0}, 0)));
  CHECK_FALSE(o.jie(epv({0, 0}, 2)));
  CHECK(o.counters().jie == 5);
}

TEST_CASE("aji examples") {
  OracleHandle o(Alphabet("ab"), "ab");
  CHECK(o.aji(pv({1, 0})) == std::optional<std::size_t>(1));
  CHECK_FALSE(o.aji(pv({2, 0})).has_value());

  const auto pair = jumbled::build_indistinguishable_pair(1);
  OracleHandle adv(Alphabet("01"), pair.s1, 0, AdversaryPolicy{pair.s2});
  // Parikh vectors are in alphabet order: (#0, #1). A single '1'.
  const auto idx = adv.aji(pv({0, 1}));
  REQUIRE(idx.has_value());
  CHECK(pair.s1[*idx - 1] == '1');
  CHECK(pair.s2[*idx - 1] == '1');
  CHECK(*idx == 1);
}

TEST_CASE("aji adversary throws when no common answer exists") {
  OracleHandle adv(Alphabet("01"), "01", 0, AdversaryPolicy{std::string("10")});
  CHECK_THROWS_AS(adv.aji(pv({1, 0})), AdversaryBroken);
}

TEST_CASE("rji examples") {
  OracleHandle o(Alphabet("ab"), "aab", 5);
  std::map<std::size_t, int> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto r = o.rji(pv({1, 0}));
    REQUIRE(r.has_value());
    ++seen[*r];
  }
  CHECK(seen.size() == 2);
  CHECK(seen.count(1) == 1);
  CHECK(seen.count(2) == 1);
  CHECK_FALSE(o.rji(pv({0, 2})).has_value());
  for (int i = 0; i < 20; ++i) CHECK(o.rji(pv({2, 1})) == std::optional<std::size_t>(1));
}

TEST_CASE("counters: fresh handle is zero and each call counts once") {
  OracleHandle o(Alphabet("ab"), "abba");
  CHECK(o.counters() == QueryCounters{});
  o.is_substr("a");
  o.is_substr("b");
  o.is_substr("ab");
  CHECK(o.counters().substr == 3);
  o.is_subseq("aa");
  o.jie(epv({1, 1}, 0));
  o.aji(pv({1, 1}));
  o.rji(pv({0, 2}));
  o.rji(pv({0, 2}));
  CHECK(o.counters() == QueryCounters{3, 1, 1, 1, 2});
  CHECK(o.counters().total() == 8);
}

TEST_CASE("budget is enforced before a query is counted") {
  OracleHandle o(Alphabet("ab"), "abab");
  o.set_budget(2);
  o.is_substr("a");
  o.is_subseq("b");
  CHECK_THROWS_AS(o.is_substr("ab"), BudgetExceeded);
  CHECK(o.counters().total() == 2);
}

TEST_CASE("oracle rejects a hidden string outside the alphabet") {
  CHECK_THROWS_AS(OracleHandle(Alphabet("ab"), "abc"), AlphabetError);
}

TEST_CASE("truthfulness fuzz against reference matchers") {
  std::mt19937_64 rng(2024);
  const std::string letters = "abcd";
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t sigma = 1 + rng() % 4;
    const auto alpha = letters.substr(0, sigma);
    const auto hidden = ref::random_string(rng, alpha, rng() % 30);
    OracleHandle o(Alphabet(alpha), hidden, trial);
    for (int q = 0; q < 40; ++q) {
      const auto x = ref::random_string(rng, alpha, rng() % 7);
      REQUIRE(o.is_substr(x) == ref::substring(hidden, x));
      REQUIRE(o.is_subseq(x) == ref::subsequence(hidden, x));
      const auto c = ref::counts(alpha, x);
      const auto starts = ref::jumbled_starts(alpha, hidden, c);
      const auto aji = o.aji(ParikhVector(c));
      if (starts.empty() && !x.empty()) {
        REQUIRE_FALSE(aji.has_value());
      } else if (!x.empty()) {
        REQUIRE(aji == std::optional<std::size_t>(starts.front()));
        const auto r = o.rji(ParikhVector(c));
        REQUIRE(r.has_value());
        REQUIRE(std::find(starts.begin(), starts.end(), *r) != starts.end());
      }
      // JIE: a window of hidden$ with these counts and `end` markers.
      const std::string with_end = hidden + "$";
      const std::uint32_t end = rng() % 2;
      bool expected = false;
      const std::size_t len = x.size() + end;
      for (std::size_t i = 0; i + len <= with_end.size() && !expected; ++i) {
        const auto w = with_end.substr(i, len);
        const auto ends = static_cast<std::uint32_t>(std::count(w.begin(), w.end(), '$'));
        std::string letters_only;
        for (char ch : w)
          if (ch != '$') letters_only.push_back(ch);
        expected = ends == end && ref::counts(alpha, letters_only) == c;
      }
      REQUIRE(o.jie({ParikhVector(c), end}) == expected);
    }
  }
}

TEST_CASE("rji is uniform over match starts (chi-squared, alpha = 0.01)") {
  // Ten 'a's; critical value of chi-squared with 9 degrees of freedom at 0.01.
  const std::string hidden = "abababababababababab";
  const double critical = 21.666;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    OracleHandle o(Alphabet("ab"), hidden, seed);
    std::map<std::size_t, int> hist;
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) ++hist[*o.rji(pv({1, 0}))];
    REQUIRE(hist.size() == 10);
    double chi2 = 0;
    const double expected = draws / 10.0;
    for (const auto& [idx, count] : hist) {
      CHECK(hidden[idx - 1] == 'a');
      chi2 += (count - expected) * (count - expected) / expected;
    }
    CHECK(chi2 < critical);
  }
}

TEST_CASE("aji with a companion answers validly for both strings") {
  std::mt19937_64 rng(7);
  for (std::size_t b = 1; b <= 3; ++b) {
    const auto pair = jumbled::build_indistinguishable_pair(b);
    OracleHandle o(Alphabet("01"), pair.s1, 0, AdversaryPolicy{pair.s2});
    const std::size_t n = pair.s1.size();
    for (std::uint32_t zeros = 0; zeros <= n; ++zeros)
      for (std::uint32_t ones = 0; zeros + ones <= n; ++ones) {
        const std::vector<std::uint32_t> c{zeros, ones};
        const auto m1 = ref::jumbled_starts("01", pair.s1, c);
        const auto m2 = ref::jumbled_starts("01", pair.s2, c);
        const auto a = o.aji(ParikhVector(c));
        if (!a) {
          REQUIRE(m1.empty());
          REQUIRE(m2.empty());
        } else {
          REQUIRE(std::find(m1.begin(), m1.end(), *a) != m1.end());
          REQUIRE(std::find(m2.begin(), m2.end(), *a) != m2.end());
        }
      }
  }
}

TEST_CASE("transcript round trip") {
  OracleHandle o(Alphabet("ab"), "abba");
  o.record_transcript(true);
  o.is_substr("bb");
  o.is_subseq("aaa");
  o.jie(epv({1, 0}, 1));
  o.aji(pv({0, 2}));
  o.rji(pv({2, 0}));
  std::stringstream buf;
  write_transcript(buf, o.alphabet(), o.transcript());
  CHECK(buf.str() ==
        "#alphabet\tab\nsubstr\tbb\tyes\nsubseq\taaa\tno\njie\t1,0,1\tyes\naji\t0,2\t2\nrji\t2,0\tNONE\n");
  std::optional<Alphabet> alpha;
  const auto back = read_transcript(buf, &alpha);
  REQUIRE(alpha.has_value());
  CHECK(alpha->letters() == "ab");
  REQUIRE(back.size() == 5);
  CHECK(back[3].type == QueryType::aji);
  CHECK(back[3].payload == "0,2");
  CHECK(back[3].answer == "2");
  std::istringstream bad("substr\tonly-two-fields\n");
  CHECK_THROWS_AS(read_transcript(bad), TranscriptError);
}
