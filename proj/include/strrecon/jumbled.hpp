#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "strrecon/oracle.hpp"
#include "strrecon/report.hpp"

namespace strrecon::jumbled {

// Prepend-a-letter reconstruction over the extended Parikh vector of a known
// suffix of S$.
ReconstructionReport reconstruct_jie(Oracle& oracle, std::optional<std::size_t> n);

struct RjiOptions {
  double beta = 2.0;
};

// Las Vegas reconstruction from random-index queries; stops only after a
// completeness test in which every one-letter extension is absent.
ReconstructionReport reconstruct_rji(Oracle& oracle, RjiOptions options = {});

struct IndistinguishablePair {
  std::size_t b = 0;
  std::string s1;
  std::string s2;
};

// 101101 (10)^b 01 (10)^b 010010 and the same string with the middle "01"
// replaced by "10". Throws ContractError for b < 1.
IndistinguishablePair build_indistinguishable_pair(std::size_t b);

struct AjiCertificateEntry {
  ParikhVector psi;
  std::optional<std::size_t> common_index;  // smallest index valid in both
  bool distinguishing = false;              // matches exist but no common one
};

struct AjiVerdict {
  bool indistinguishable = true;
  std::vector<AjiCertificateEntry> entries;
  std::optional<ParikhVector> first_distinguishing;
};

// Exhaustive over every Parikh vector of total at most n: the two strings
// cannot be told apart by an adversarial index oracle iff every query has a
// common answer (a shared match start, or no match in either).
AjiVerdict verify_aji_indistinguishable(const Alphabet& alphabet, std::string_view s1, std::string_view s2);

// One line per query: "f1,...,fs -> index" or "-> NONE" or "-> DISTINGUISHING".
void write_certificate(std::ostream& out, const AjiVerdict& verdict);

// Fraction of simulated single-window collections of n_i coupons that need
// more than beta * n_i * ln N trips.
double coupon_tail_bound_trial(std::size_t n_i, std::size_t N, double beta, std::size_t trials, std::uint64_t seed);

// Every Parikh vector of a substring of s (the answer table of plain yes/no
// jumbled queries), the empty substring included.
std::set<ParikhVector> plain_jumbled_answers(const Alphabet& alphabet, std::string_view s);

}  // namespace strrecon::jumbled
