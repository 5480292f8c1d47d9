#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "strrecon/oracle.hpp"

namespace strrecon {

// One bound check: the bound's formula, its value on this instance, and the
// measured query count it constrains.
struct BoundVerdict {
  std::string name;
  std::string expression;
  double bound = 0;
  std::uint64_t measured = 0;
  bool pass = false;
  // "proven" (exact expression), "calibrated" (harness constant, not a
  // published figure), "annotation" (reported only).
  std::string kind;
  bool enforced = true;
};

struct ReconstructionReport {
  std::string algorithm;
  std::string output;
  bool completed = false;
  std::string failure;
  QueryCounters queries;
  std::vector<BoundVerdict> verdicts;
  // Algorithm-specific measurements (iterations, final estimates, ...).
  std::map<std::string, double> metrics;
};

// Captures the oracle counters at construction and turns them into the
// per-run deltas of a report.
class RunScope {
 public:
  RunScope(const Oracle& oracle, std::string algorithm)
      : oracle_(oracle), algorithm_(std::move(algorithm)), start_(oracle.counters()) {}

  ReconstructionReport success(std::string output) const {
    ReconstructionReport r = base();
    r.output = std::move(output);
    r.completed = true;
    return r;
  }

  ReconstructionReport failure(std::string reason, std::string partial = {}) const {
    ReconstructionReport r = base();
    r.output = std::move(partial);
    r.failure = std::move(reason);
    return r;
  }

 private:
  ReconstructionReport base() const {
    ReconstructionReport r;
    r.algorithm = algorithm_;
    r.queries = oracle_.counters() - start_;
    return r;
  }

  const Oracle& oracle_;
  std::string algorithm_;
  QueryCounters start_;
};

}  // namespace strrecon
