#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "strrecon/oracle.hpp"
#include "strrecon/report.hpp"

namespace strrecon::substring {

// Substring-query front end shared by the reconstructors. Identical queries
// are answered from a memo, and facts implied by earlier answers can be
// recorded so they are never asked.
class Prober {
 public:
  explicit Prober(Oracle& oracle) : oracle_(oracle) {}

  Oracle& oracle() { return oracle_; }
  const Alphabet& alphabet() const { return oracle_.alphabet(); }

  bool ask(std::string_view x);
  // Records an answer that follows from what is already known.
  void assume(std::string_view x, bool answer);
  std::optional<bool> known(std::string_view x) const;

  // q.a for the first letter a (alphabet order) with q.a a substring. When
  // `guaranteed`, the last candidate is inferred instead of asked. `skip`
  // names a letter already known to fail; `prefer` is tried first.
  std::optional<std::string> append_letter(std::string_view q, bool guaranteed, std::optional<char> skip = {},
                                           std::optional<char> prefer = {});
  std::optional<std::string> prepend_letter(std::string_view q, bool guaranteed, std::optional<char> skip = {},
                                            std::optional<char> prefer = {});

 private:
  Oracle& oracle_;
  std::unordered_map<std::string, bool> memo_;
};

std::optional<std::string> append_letter(Oracle& oracle, std::string_view q, bool guaranteed);
std::optional<std::string> prepend_letter(Oracle& oracle, std::string_view q, bool guaranteed);

// Known n, S = p^k p' with k > 1.
ReconstructionReport reconstruct_known_n_simple(Oracle& oracle, std::size_t n);

// Rotation of q that the hidden string starts with. q must be a rotation of
// the smallest period and n the hidden length; the alignment is found by a
// binary search over suffix lengths of q against the aligned run q^inf[..n-|q|+1].
std::string true_rotation(Oracle& oracle, std::string_view q, std::size_t n);

// Known n, k > 3.
ReconstructionReport reconstruct_known_n_improved(Oracle& oracle, std::size_t n);

// The acceptance test closing the candidate loop of the known-n algorithms:
// is q^(floor(n/|q|) - 1) a substring? Issues at most one query.
bool candidate_loop_accepts(Oracle& oracle, std::string_view q, std::size_t n);

// Unknown n, k > 1.
ReconstructionReport reconstruct_unknown_n(Oracle& oracle);

struct ExpandResult {
  bool success = false;
  std::optional<std::string> text;
  std::size_t iterations = 0;
  std::size_t errors = 0;
};

ExpandResult expand(Oracle& oracle, std::string_view q, std::size_t d);
ExpandResult expand(Prober& prober, std::string_view q, std::size_t d);

// d-corrupted periodic string, d known, n unknown.
ReconstructionReport reconstruct_corrupted(Oracle& oracle, std::size_t d);

// Works for any string. Without n_known the empty string is allowed.
ReconstructionReport reconstruct_letter_by_letter(Oracle& oracle, std::optional<std::size_t> n_known = std::nullopt);

// Runs reconstruct_letter_by_letter and reconstruct_corrupted in alternation,
// one query each, and stops both as soon as either finishes.
ReconstructionReport reconstruct_corrupted_intercalated(Oracle& oracle, std::size_t d);

}  // namespace strrecon::substring
