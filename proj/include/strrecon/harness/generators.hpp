#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strrecon/alphabet.hpp"
#include "strrecon/strings.hpp"

namespace strrecon::harness {

struct Instance {
  Alphabet alphabet;
  std::string hidden;
  // Set for periodic instances and for the periodic origin of corrupted ones.
  std::optional<PeriodDecomposition> period;
  // Corrupted instances: the uncorrupted string and the changed positions (1-based).
  std::string origin;
  std::vector<std::size_t> corrupted_positions;
};

// p is uniform over primitive strings of length period_len and p' uniform
// over proper prefixes of p. Both depend only on (sigma, period_len, seed),
// so varying k keeps the period fixed. Throws ConfigError when k < 2 or no
// primitive string of that length exists.
Instance gen_periodic(std::size_t sigma, std::size_t period_len, std::size_t k, std::uint64_t seed);

// Default corruption ceiling floor(k / (1 + lg n)).
std::size_t corruption_cap(std::size_t k, std::size_t n);

// gen_periodic followed by exactly d substitutions at distinct positions,
// each to a different letter. d above corruption_cap needs `force`.
Instance gen_corrupted(std::size_t sigma, std::size_t period_len, std::size_t k, std::size_t d, std::uint64_t seed,
                       bool force = false);

Instance gen_random(std::size_t sigma, std::size_t n, std::uint64_t seed);

}  // namespace strrecon::harness
