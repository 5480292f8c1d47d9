#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strrecon/oracle.hpp"
#include "strrecon/report.hpp"

namespace strrecon::subsequence {

struct LetterRun {
  char letter = 0;
  std::size_t count = 0;
};

// Number of occurrences of `a`. With n known this is a binary search over
// 0..n, otherwise a doubling search from 0.
LetterRun count_letter(Oracle& oracle, char a, std::optional<std::size_t> n);

struct MergeStats {
  std::size_t queries = 0;
  // Length of the interleaved prefix when the merge stopped asking.
  std::size_t prefix_length = 0;
  bool shortcut = false;
};

// Interleaves two letter-disjoint projections of the hidden string into the
// projection onto their union. In periodic mode a one-query shortcut
// q^k q' is tried after each step whenever it is a plausible interleaving.
std::string merge_children(Oracle& oracle, std::string_view sx, std::string_view sy, bool periodic_mode,
                           MergeStats* stats = nullptr);

struct MergeNode {
  std::size_t level = 0;  // leaves are level 0
  std::string letters;
  std::string projection;
  MergeStats stats;
};

ReconstructionReport reconstruct_periodic_subseq(Oracle& oracle, std::optional<std::size_t> n,
                                                 std::vector<MergeNode>* trace = nullptr);
ReconstructionReport reconstruct_general_subseq(Oracle& oracle, std::optional<std::size_t> n,
                                                std::vector<MergeNode>* trace = nullptr);

}  // namespace strrecon::subsequence
