#include <cmath>
#include <set>

#include "strrecon/errors.hpp"
#include "strrecon/jumbled.hpp"

namespace strrecon::jumbled {

namespace {

struct PositionMap {
  std::vector<std::set<std::size_t>> by_letter;
  std::set<std::size_t> all;

  explicit PositionMap(std::size_t sigma) : by_letter(sigma) {}

  void add(std::size_t letter, std::size_t position) {
    by_letter[letter].insert(position);
    all.insert(position);
  }
  // Positions found are exactly 1..m.
  bool contiguous() const { return !all.empty() && *all.rbegin() == all.size(); }
};

}  // namespace

ReconstructionReport reconstruct_rji(Oracle& oracle, RjiOptions options) {
  RunScope scope(oracle, "rji");
  if (options.beta < 2.0) throw ContractError("reconstruct_rji: beta must be at least 2");
  const auto& alphabet = oracle.alphabet();
  const std::size_t sigma = alphabet.size();
  PositionMap found(sigma);
  std::size_t big_n = 2;
  std::size_t rounds = 0;
  try {
    std::vector<std::size_t> present;
    for (std::size_t i = 0; i < sigma; ++i) {
      if (auto r = oracle.rji(ParikhVector::unit(sigma, i))) {
        present.push_back(i);
        found.add(i, *r);
        big_n = std::max(big_n, *r);
      }
    }

    // Every extension of the collected prefix by one letter is absent iff
    // nothing lies beyond it. A match at r proves n >= r + m.
    auto complete = [&] {
      if (!found.contiguous()) return false;
      ParikhVector base(sigma);
      for (std::size_t i = 0; i < sigma; ++i) base.counts[i] = static_cast<std::uint32_t>(found.by_letter[i].size());
      for (std::size_t i = 0; i < sigma; ++i) {
        if (auto r = oracle.rji(base.plus_letter(i))) {
          big_n = std::max(big_n, *r + found.all.size());
          return false;
        }
      }
      return true;
    };

    std::vector<std::size_t> estimate(sigma, 1);
    bool done = present.empty() ? true : complete();
    while (!done) {
      ++rounds;
      for (std::size_t i : present) {
        const ParikhVector unit = ParikhVector::unit(sigma, i);
        std::size_t draws = 0;
        for (;;) {
          const auto target = static_cast<std::size_t>(
              std::ceil(options.beta * static_cast<double>(estimate[i]) * std::log(static_cast<double>(big_n))));
          if (draws >= target) break;
          const auto r = oracle.rji(unit);
          ++draws;
          if (!r) throw ContractError("reconstruct_rji: a present letter was reported absent");
          found.add(i, *r);
          big_n = std::max(big_n, *r);
          if (found.by_letter[i].size() > estimate[i]) {
            while (found.by_letter[i].size() > estimate[i]) estimate[i] *= 2;
            draws = 0;
          }
        }
      }
      done = complete();
      if (!done) big_n *= 2;
    }

    std::string out(found.all.size(), '\0');
    for (std::size_t i = 0; i < sigma; ++i)
      for (std::size_t pos : found.by_letter[i]) out[pos - 1] = alphabet[i];
    auto report = scope.success(std::move(out));
    report.metrics["beta"] = options.beta;
    report.metrics["rounds"] = static_cast<double>(rounds);
    report.metrics["final_N"] = static_cast<double>(big_n);
    return report;
  } catch (const BudgetExceeded& e) {
    return scope.failure(e.what());
  }
}

double coupon_tail_bound_trial(std::size_t n_i, std::size_t N, double beta, std::size_t trials, std::uint64_t seed) {
  if (n_i < 1 || N < n_i || beta < 1 || trials < 1)
    throw ContractError("coupon_tail_bound_trial: need n_i >= 1, N >= n_i, beta >= 1, trials >= 1");
  const double threshold = beta * static_cast<double>(n_i) * std::log(static_cast<double>(N));
  SplitMix64 rng(seed);
  std::vector<char> seen(n_i);
  std::size_t exceed = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t have = 0;
    std::size_t trips = 0;
    while (have < n_i) {
      ++trips;
      auto& s = seen[rng.below(n_i)];
      if (!s) {
        s = 1;
        ++have;
      }
    }
    if (static_cast<double>(trips) > threshold) ++exceed;
  }
  return static_cast<double>(exceed) / static_cast<double>(trials);
}

}  // namespace strrecon::jumbled
