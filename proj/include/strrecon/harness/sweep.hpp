#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "strrecon/harness/experiment.hpp"

namespace strrecon::harness {

struct GridSpec {
  std::vector<Algorithm> algorithms;
  std::vector<std::size_t> sigmas{2};
  std::vector<std::size_t> period_lens{2};
  std::vector<std::size_t> ks{4};
  std::vector<std::size_t> ds{0};
  // Random-string lengths; empty means period_len * k.
  std::vector<std::size_t> ns;
  std::vector<std::uint64_t> seeds{0};
  bool n_known = false;
  bool force = false;
  // Skip combinations that break a precondition instead of failing on them.
  bool skip_invalid = true;
  std::optional<std::uint64_t> budget;
  Constants constants = Constants::defaults();
  unsigned threads = 0;  // 0: hardware concurrency
};

struct AlgorithmSummary {
  std::size_t runs = 0;
  std::size_t exact = 0;
  std::size_t bounds_pass = 0;
  std::uint64_t max_queries = 0;
};

struct SweepResult {
  std::vector<ExperimentResult> runs;  // sorted by configuration key
  std::size_t skipped = 0;
  std::map<std::string, AlgorithmSummary> summary;
};

std::vector<ExperimentConfig> expand_grid(const GridSpec& grid);

SweepResult sweep(const GridSpec& grid);

struct GrowthPoint {
  std::size_t sigma = 0;
  std::string period;
  std::uint64_t seed = 0;
  std::size_t n_small = 0;
  std::size_t n_large = 0;
  long long delta = 0;  // Q(n_large) - Q(n_small)
};

// For each (algorithm, sigma, period, seed) series, the change in total
// queries between consecutive runs whose k doubles.
std::vector<GrowthPoint> growth_deltas(const std::vector<ExperimentResult>& runs, Algorithm algorithm);

void write_csv(std::ostream& out, const std::vector<ExperimentResult>& runs);
nlohmann::ordered_json sweep_json(const SweepResult& result, bool include_wall_time = false);

}  // namespace strrecon::harness
