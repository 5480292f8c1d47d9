#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "strrecon/harness/bounds.hpp"
#include "strrecon/harness/generators.hpp"
#include "strrecon/report.hpp"

namespace strrecon::harness {

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::known_n_simple;
  std::size_t sigma = 2;
  std::size_t period_len = 2;
  std::size_t k = 4;
  std::size_t d = 0;
  // Length of random instances; defaults to period_len * k.
  std::optional<std::size_t> n;
  // Tell the algorithm n (only for algorithms that accept it).
  bool n_known = false;
  std::uint64_t seed = 0;
  // Total-query ceiling; unset means the per-algorithm default.
  std::optional<std::uint64_t> budget;
  bool force = false;
  bool record_transcript = false;
  // Run on this string instead of a generated one.
  std::optional<std::string> hidden;
  Constants constants = Constants::defaults();
};

// Throws ConfigError when the parameters break the algorithm's precondition.
void validate(const ExperimentConfig& config);

Instance make_instance(const ExperimentConfig& config);

// The default ceiling: 4 sigma n + 64, or a multiple of n ln n for random-index runs.
std::uint64_t default_budget(Algorithm algorithm, std::size_t sigma, std::size_t n);

struct ExperimentResult {
  ExperimentConfig config;
  Instance instance;
  ReconstructionReport report{};
  bool exact = false;
  double wall_ms = 0;
  std::uint64_t budget = 0;
  std::vector<TranscriptRecord> transcript;

  bool bounds_ok() const { return bounds_pass(report.verdicts); }
  // The single enforced bound value (the first enforced verdict), for CSV.
  double headline_bound() const;
};

// Builds the instance, runs the algorithm on a fresh oracle, checks the output
// against the hidden string and evaluates the bounds.
ExperimentResult run_experiment(const ExperimentConfig& config);

nlohmann::ordered_json to_json(const ExperimentResult& result, bool include_wall_time = true);

std::string csv_header();
std::string csv_row(const ExperimentResult& result);

// 0 all pass, 1 some enforced bound failed, 2 some output was not exact.
int exit_code(const std::vector<ExperimentResult>& results);

}  // namespace strrecon::harness
