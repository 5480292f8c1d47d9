#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strrecon/oracle.hpp"
#include "strrecon/report.hpp"

namespace strrecon::harness {

enum class Algorithm {
  known_n_simple,
  known_n_improved,
  unknown_n,
  corrupted,
  corrupted_intercalated,
  letter_by_letter,
  periodic_subseq,
  general_subseq,
  jie,
  rji,
};

const char* to_string(Algorithm a) noexcept;
// Throws ConfigError on an unknown id.
Algorithm algorithm_from_string(std::string_view id);
const std::vector<Algorithm>& all_algorithms();

// Which instance family an algorithm is run on.
enum class Family { periodic, corrupted, random };
Family family_of(Algorithm a) noexcept;
// Whether the algorithm can be told n.
bool accepts_known_n(Algorithm a) noexcept;

struct Constants {
  double unknown_sigma_p;
  double unknown_lg_n;
  double unknown_sigma;
  double corrupted;
  double intercalated_slack;
  double rji_n_ln_n;
  double rji_sigma;

  static Constants defaults();
};

struct BoundInput {
  std::size_t sigma = 0;
  std::size_t n = 0;
  std::size_t period_len = 0;  // 0 when the instance has no period
  std::size_t d = 0;
  bool n_known = false;
};

// Every bound that applies to a run, evaluated against its counters. The
// lower-bound annotation |p| lg sigma is attached to periodic runs and never
// enforced.
std::vector<BoundVerdict> evaluate_bounds(Algorithm algorithm, const BoundInput& in, const QueryCounters& measured,
                                          const Constants& constants);

// True iff every enforced verdict passes.
bool bounds_pass(const std::vector<BoundVerdict>& verdicts);

}  // namespace strrecon::harness
