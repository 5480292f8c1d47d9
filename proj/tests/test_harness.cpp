#include <doctest.h>

#include <sstream>

#include "strrecon/errors.hpp"
#include "strrecon/harness/calibration.hpp"
#include "strrecon/harness/experiment.hpp"
#include "strrecon/harness/generators.hpp"
#include "strrecon/harness/sweep.hpp"
#include "strrecon/harness/transcript_verify.hpp"
#include "strrecon/strings.hpp"
#include "strrecon/substring.hpp"
#include "support.hpp"

using namespace strrecon;
using namespace strrecon::harness;

TEST_CASE("gen_periodic") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = gen_periodic(2, 2, 3, seed);
    REQUIRE(inst.period.has_value());
    CHECK((inst.period->p == "ab" || inst.period->p == "ba"));
    CHECK(inst.period->k == 3);
    CHECK(ref::period_length(inst.hidden) == 2);
    CHECK(inst.hidden.substr(0, 6) == ref::repeat(inst.period->p, 3));

    const auto unary = gen_periodic(2, 1, 4, seed);
    CHECK((unary.hidden == "aaaa" || unary.hidden == "bbbb"));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = gen_periodic(4, 7, 5, seed);
    CHECK(smallest_period(inst.hidden) == *inst.period);
    // The period does not depend on k.
    CHECK(gen_periodic(4, 7, 9, seed).period->p == inst.period->p);
  }
  CHECK_THROWS_AS(gen_periodic(2, 2, 1, 0), ConfigError);
  CHECK_THROWS_AS(gen_periodic(1, 2, 3, 0), ConfigError);
}

TEST_CASE("gen_corrupted") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto zero = gen_corrupted(2, 3, 6, 0, seed);
    CHECK(zero.hidden == gen_periodic(2, 3, 6, seed).hidden);

    const auto one = gen_corrupted(2, 2, 20, 1, seed);
    CHECK(hamming_distance(one.hidden, one.origin) == 1);

    const auto two = gen_corrupted(2, 3, 15, 2, seed, true);
    CHECK(hamming_distance(two.hidden, two.origin) == 2);
    REQUIRE(two.corrupted_positions.size() == 2);
    CHECK(two.corrupted_positions[0] < two.corrupted_positions[1]);
    for (auto pos : two.corrupted_positions) CHECK(two.hidden[pos - 1] != two.origin[pos - 1]);
  }
  CHECK(corruption_cap(20, 40) == 3);
  CHECK_THROWS_AS(gen_corrupted(2, 2, 8, 3, 0), ConfigError);
  CHECK_NOTHROW(gen_corrupted(2, 2, 8, 3, 0, true));
}

TEST_CASE("run_experiment examples") {
  ExperimentConfig c;
  c.algorithm = Algorithm::known_n_simple;
  c.sigma = 2;
  c.period_len = 2;
  c.k = 3;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    c.seed = seed;
    const auto r = run_experiment(c);
    CHECK(r.exact);
    CHECK(r.bounds_ok());
    CHECK(r.report.queries.substr <= 10);
  }

  c.algorithm = Algorithm::known_n_improved;
  CHECK_THROWS_AS(run_experiment(c), ConfigError);

  ExperimentConfig j;
  j.algorithm = Algorithm::jie;
  j.hidden = "ab";
  const auto r = run_experiment(j);
  CHECK(r.exact);
  CHECK(r.bounds_ok());
}

TEST_CASE("known n is refused by algorithms that cannot take it") {
  ExperimentConfig c;
  c.algorithm = Algorithm::unknown_n;
  c.n_known = true;
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("a broken promise is a failed run, not a crash") {
  ExperimentConfig c;
  c.algorithm = Algorithm::letter_by_letter;
  c.hidden = "abba";
  c.budget = 3;
  const auto r = run_experiment(c);
  CHECK_FALSE(r.exact);
  CHECK(exit_code({r}) == 2);
}

TEST_CASE("identical configs give byte-identical reports") {
  for (Algorithm a : all_algorithms()) {
    ExperimentConfig c;
    c.algorithm = a;
    c.sigma = 3;
    c.period_len = 3;
    c.k = 5;
    c.d = a == Algorithm::corrupted || a == Algorithm::corrupted_intercalated ? 1 : 0;
    c.seed = 77;
    c.force = true;
    const auto x = to_json(run_experiment(c), false).dump();
    const auto y = to_json(run_experiment(c), false).dump();
    CHECK(x == y);
  }
}

TEST_CASE("reports carry the lower-bound annotation on periodic runs") {
  ExperimentConfig c;
  c.algorithm = Algorithm::unknown_n;
  c.sigma = 4;
  c.period_len = 5;
  c.k = 6;
  const auto r = run_experiment(c);
  bool found = false;
  for (const auto& v : r.report.verdicts)
    if (v.kind == "annotation") {
      found = true;
      CHECK_FALSE(v.enforced);
      CHECK(v.bound == doctest::Approx(10.0));
    }
  CHECK(found);
  const auto j = to_json(r, false);
  CHECK(j["config"]["calibration"] == calibration::kVersion);
}

TEST_CASE("csv row layout") {
  ExperimentConfig c;
  c.algorithm = Algorithm::known_n_simple;
  const auto r = run_experiment(c);
  CHECK(csv_header() == "algo,sigma,period_len,k,d,n,seed,q_substr,q_subseq,q_jie,q_aji,q_rji,bound,pass");
  const auto row = csv_row(r);
  CHECK(row.rfind("known-n-simple,2,2,4,0,", 0) == 0);
  CHECK(row.substr(row.size() - 4) == "true");
}

TEST_CASE("exit codes") {
  ExperimentConfig c;
  auto ok = run_experiment(c);
  CHECK(exit_code({ok}) == 0);
  auto bound_fail = ok;
  bound_fail.report.verdicts.front().pass = false;
  CHECK(exit_code({ok, bound_fail}) == 1);
  auto inexact = ok;
  inexact.exact = false;
  CHECK(exit_code({bound_fail, inexact}) == 2);
}

TEST_CASE("transcript uniqueness examples") {
  const Alphabet ab("ab");
  OracleHandle o(ab, "ababab");
  o.record_transcript(true);
  substring::reconstruct_known_n_simple(o, 6);
  auto u = verify_transcript_uniqueness(o.transcript(), ab, 6, Promise::periodic);
  CHECK(u.unique);
  CHECK(u.witnesses == std::vector<std::string>{"ababab"});

  u = verify_transcript_uniqueness({}, ab, 2, Promise::any);
  CHECK_FALSE(u.unique);
  CHECK(u.consistent == 4);

  ExperimentConfig g;
  g.algorithm = Algorithm::general_subseq;
  g.n = 8;
  g.record_transcript = true;
  const auto r = run_experiment(g);
  CHECK(verify_transcript_uniqueness(r.transcript, r.instance.alphabet, 8, Promise::any).unique);

  std::vector<TranscriptRecord> lie{{QueryType::substr, "a", "no"}, {QueryType::substr, "b", "no"}};
  CHECK_THROWS_AS(verify_transcript_uniqueness(lie, ab, 3, Promise::any), TranscriptError);
  CHECK_THROWS_AS(verify_transcript_uniqueness({}, Alphabet::first(4), 13, Promise::any), ContractError);
}

TEST_CASE("promise names") {
  CHECK(promise_from_string("periodic-k>1") == Promise::periodic);
  CHECK(promise_from_string(to_string(Promise::corrupted)) == Promise::corrupted);
  CHECK_THROWS_AS(promise_from_string("nope"), ConfigError);
  CHECK(in_promise("abbbababab", Promise::corrupted, 1, Alphabet("ab")));
  CHECK_FALSE(in_promise("abbbababab", Promise::periodic, 0, Alphabet("ab")));
}

TEST_CASE("sweep: sorted, complete, and independent of thread count") {
  GridSpec g;
  g.algorithms = {Algorithm::unknown_n, Algorithm::known_n_simple, Algorithm::known_n_improved};
  g.sigmas = {2, 4};
  g.period_lens = {1, 3};
  g.ks = {2, 4, 8};
  g.seeds = {0, 1};
  g.threads = 1;
  const auto one = sweep(g);
  g.threads = 3;
  const auto three = sweep(g);
  // known-n-improved skips k = 2.
  CHECK(one.skipped == 2 * 2 * 2);
  CHECK(one.runs.size() == 3 * 2 * 2 * 3 * 2 - one.skipped);
  std::ostringstream a, b;
  write_csv(a, one.runs);
  write_csv(b, three.runs);
  CHECK(a.str() == b.str());
  for (const auto& [name, s] : one.summary) {
    CHECK(s.exact == s.runs);
    CHECK(s.bounds_pass == s.runs);
  }
}

TEST_CASE("sweep growth deltas for the unknown-n algorithm") {
  GridSpec g;
  g.algorithms = {Algorithm::unknown_n};
  g.sigmas = {2};
  g.period_lens = {3};
  g.ks = {2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
  g.seeds = {0, 1, 2};
  const auto result = sweep(g);
  const auto deltas = growth_deltas(result.runs, Algorithm::unknown_n);
  CHECK(deltas.size() == 9 * 3);
  for (const auto& d : deltas) CHECK(d.delta <= static_cast<long long>(calibration::kUnknownGrowthPerDoubling));
}

TEST_CASE("sweep over d: corrupted verdicts pass") {
  GridSpec g;
  g.algorithms = {Algorithm::corrupted};
  g.sigmas = {2, 4};
  g.period_lens = {2, 5};
  g.ks = {16};
  g.ds = {0, 1, 2, 3};
  g.seeds = {0, 1};
  g.force = true;
  const auto result = sweep(g);
  CHECK(result.runs.size() == 2 * 2 * 4 * 2);
  CHECK(exit_code(result.runs) == 0);
}
