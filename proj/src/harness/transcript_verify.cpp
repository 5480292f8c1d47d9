#include "strrecon/harness/transcript_verify.hpp"

#include <algorithm>
#include <charconv>

#include "strrecon/errors.hpp"

namespace strrecon::harness {

namespace {

constexpr std::uint64_t kMaxCandidates = std::uint64_t{1} << 24;

bool periodic_with(std::string_view s, std::size_t min_repeats) {
  if (s.empty()) return false;
  const auto dec = smallest_period(s);
  return dec.k >= min_repeats;
}

bool answer_yes(const TranscriptRecord& r) {
  if (r.answer == "yes") return true;
  if (r.answer == "no") return false;
  throw TranscriptError("expected yes/no answer, got \"" + r.answer + "\"");
}

bool index_answer_ok(const TranscriptRecord& r, const std::vector<std::size_t>& matches) {
  if (r.answer == "NONE") return matches.empty();
  std::size_t idx = 0;
  const auto [ptr, ec] = std::from_chars(r.answer.data(), r.answer.data() + r.answer.size(), idx);
  if (ec != std::errc() || ptr != r.answer.data() + r.answer.size())
    throw TranscriptError("expected an index or NONE, got \"" + r.answer + "\"");
  return std::binary_search(matches.begin(), matches.end(), idx);
}

}  // namespace

const char* to_string(Promise p) noexcept {
  switch (p) {
    case Promise::any: return "any";
    case Promise::periodic: return "periodic";
    case Promise::periodic_k_gt_3: return "periodic-k>3";
    case Promise::corrupted: return "corrupted";
  }
  return "?";
}

Promise promise_from_string(std::string_view name) {
  for (auto p : {Promise::any, Promise::periodic, Promise::periodic_k_gt_3, Promise::corrupted})
    if (name == to_string(p)) return p;
  if (name == "periodic-k>1") return Promise::periodic;
  throw ConfigError("unknown promise \"" + std::string(name) + "\" (expected any, periodic, periodic-k>3, corrupted)");
}

bool in_promise(std::string_view s, Promise promise, std::size_t d, const Alphabet& alphabet) {
  switch (promise) {
    case Promise::any:
      return true;
    case Promise::periodic:
      return periodic_with(s, 2);
    case Promise::periodic_k_gt_3:
      return periodic_with(s, 4);
    case Promise::corrupted: {
      if (periodic_with(s, 2)) return true;
      if (d == 0) return false;
      // Any periodic string of the same length within distance d.
      const std::size_t n = s.size();
      const std::size_t sigma = alphabet.size();
      for (std::size_t len = 1; 2 * len <= n; ++len) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < len; ++i) count *= sigma;
        std::string p(len, alphabet[0]);
        for (std::uint64_t code = 0; code < count; ++code) {
          std::uint64_t c = code;
          for (std::size_t i = 0; i < len; ++i, c /= sigma) p[i] = alphabet[c % sigma];
          if (hamming_distance(s, periodic_extension(p, 0, n)) <= d) return true;
        }
      }
      return false;
    }
  }
  return false;
}

bool consistent_with(const Alphabet& alphabet, std::string_view s, const std::vector<TranscriptRecord>& transcript) {
  for (const auto& r : transcript) {
    switch (r.type) {
      case QueryType::substr:
        if (window_contains(s, r.payload) != answer_yes(r)) return false;
        break;
      case QueryType::subseq:
        if (greedy_subsequence(s, r.payload) != answer_yes(r)) return false;
        break;
      case QueryType::jie:
        if (jie_answer(alphabet, s, parse_extended_parikh(r.payload)) != answer_yes(r)) return false;
        break;
      case QueryType::aji:
      case QueryType::rji:
        if (!index_answer_ok(r, jumbled_match_starts(alphabet, s, parse_parikh(r.payload)))) return false;
        break;
    }
  }
  return true;
}

std::vector<std::string> promise_class(const Alphabet& alphabet, std::size_t n, Promise promise, std::size_t d) {
  const std::size_t sigma = alphabet.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= sigma;
    if (total > kMaxCandidates) throw ContractError("promise_class: sigma^n is too large to enumerate");
  }
  std::vector<std::string> out;
  std::string s(n, alphabet[0]);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= sigma) s[i] = alphabet[c % sigma];
    if (in_promise(s, promise, d, alphabet)) out.push_back(s);
  }
  return out;
}

UniquenessResult verify_transcript_uniqueness(const std::vector<TranscriptRecord>& transcript, const Alphabet& alphabet,
                                              const std::vector<std::string>& candidates) {
  UniquenessResult result;
  for (const auto& s : candidates) {
    if (!consistent_with(alphabet, s, transcript)) continue;
    ++result.consistent;
    if (result.witnesses.size() < 8) result.witnesses.push_back(s);
  }
  if (result.consistent == 0) throw TranscriptError("no string of the promise class is consistent with the transcript");
  result.unique = result.consistent == 1;
  return result;
}

UniquenessResult verify_transcript_uniqueness(const std::vector<TranscriptRecord>& transcript, const Alphabet& alphabet,
                                              std::size_t n, Promise promise, std::size_t d) {
  return verify_transcript_uniqueness(transcript, alphabet, promise_class(alphabet, n, promise, d));
}

}  // namespace strrecon::harness
