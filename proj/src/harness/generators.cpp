#include "strrecon/harness/generators.hpp"

#include <algorithm>
#include <cmath>

#include "strrecon/errors.hpp"
#include "strrecon/rng.hpp"

namespace strrecon::harness {

namespace {

constexpr int kMaxRejections = 100000;

}  // namespace

Instance gen_periodic(std::size_t sigma, std::size_t period_len, std::size_t k, std::uint64_t seed) {
  if (sigma < 1 || period_len < 1) throw ConfigError("gen_periodic: sigma and period length must be positive");
  if (k < 2) throw ConfigError("gen_periodic: k must be at least 2");
  if (sigma == 1 && period_len > 1)
    throw ConfigError("gen_periodic: no primitive string of length " + std::to_string(period_len) + " over one letter");
  const Alphabet alphabet = Alphabet::first(sigma);
  SplitMix64 rng(mix_seed(seed, (sigma << 20) ^ period_len));
  std::string p;
  for (int attempt = 0;; ++attempt) {
    if (attempt == kMaxRejections) throw ConfigError("gen_periodic: rejection sampling did not find a primitive period");
    p.clear();
    for (std::size_t i = 0; i < period_len; ++i) p.push_back(alphabet[rng.below(sigma)]);
    if (is_primitive(p)) break;
  }
  const std::size_t tail = rng.below(period_len);
  PeriodDecomposition dec{p, k, p.substr(0, tail)};
  Instance inst{alphabet, dec.expand(), dec, {}, {}};
  if (smallest_period(inst.hidden) != dec) throw ContractError("gen_periodic: generated decomposition is not minimal");
  return inst;
}

std::size_t corruption_cap(std::size_t k, std::size_t n) {
  if (n == 0) return 0;
  return static_cast<std::size_t>(std::floor(static_cast<double>(k) / (1.0 + std::log2(static_cast<double>(n)))));
}

Instance gen_corrupted(std::size_t sigma, std::size_t period_len, std::size_t k, std::size_t d, std::uint64_t seed,
                       bool force) {
  Instance inst = gen_periodic(sigma, period_len, k, seed);
  const std::size_t n = inst.hidden.size();
  if (d > 0 && sigma < 2) throw ConfigError("gen_corrupted: substitutions need at least two letters");
  if (d > n) throw ConfigError("gen_corrupted: more substitutions than positions");
  const std::size_t cap = corruption_cap(k, n);
  if (d > cap && !force)
    throw ConfigError("gen_corrupted: d = " + std::to_string(d) + " exceeds the cap " + std::to_string(cap) +
                      " (use force to override)");
  inst.origin = inst.hidden;
  SplitMix64 rng(mix_seed(seed, 0xc0 + d));
  std::vector<std::size_t> positions;
  while (positions.size() < d) {
    const std::size_t x = rng.below(n);
    if (std::find(positions.begin(), positions.end(), x) == positions.end()) positions.push_back(x);
  }
  std::sort(positions.begin(), positions.end());
  for (std::size_t x : positions) {
    // Uniform over the sigma - 1 other letters.
    const std::size_t cur = inst.alphabet.index_of(inst.hidden[x]);
    const std::size_t shift = 1 + rng.below(sigma - 1);
    inst.hidden[x] = inst.alphabet[(cur + shift) % sigma];
    inst.corrupted_positions.push_back(x + 1);
  }
  return inst;
}

Instance gen_random(std::size_t sigma, std::size_t n, std::uint64_t seed) {
  if (sigma < 1) throw ConfigError("gen_random: sigma must be positive");
  const Alphabet alphabet = Alphabet::first(sigma);
  SplitMix64 rng(mix_seed(seed, (sigma << 24) ^ n ^ 0x5a5a));
  std::string s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.push_back(alphabet[rng.below(sigma)]);
  return {alphabet, std::move(s), std::nullopt, {}, {}};
}

}  // namespace strrecon::harness
