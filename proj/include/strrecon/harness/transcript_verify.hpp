#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "strrecon/alphabet.hpp"
#include "strrecon/oracle.hpp"

namespace strrecon::harness {

// The instance class an algorithm is promised.
enum class Promise {
  any,
  periodic,          // smallest period repeats at least twice
  periodic_k_gt_3,   // ... at least four times
  corrupted,         // within Hamming distance d of a periodic string
};

const char* to_string(Promise p) noexcept;
// Throws ConfigError on an unknown name.
Promise promise_from_string(std::string_view name);

bool in_promise(std::string_view s, Promise promise, std::size_t d, const Alphabet& alphabet);

// True iff s answers every record of the transcript the same way.
bool consistent_with(const Alphabet& alphabet, std::string_view s, const std::vector<TranscriptRecord>& transcript);

// Every length-n string of the promise class. Throws ContractError if
// sigma^n exceeds 2^24.
std::vector<std::string> promise_class(const Alphabet& alphabet, std::size_t n, Promise promise, std::size_t d = 0);

struct UniquenessResult {
  bool unique = false;
  std::size_t consistent = 0;
  std::vector<std::string> witnesses;  // the first few consistent strings
};

// Enumerates every length-n string of the promise class and keeps those
// consistent with the transcript. Throws TranscriptError if none is, and
// ContractError if sigma^n exceeds 2^24.
UniquenessResult verify_transcript_uniqueness(const std::vector<TranscriptRecord>& transcript, const Alphabet& alphabet,
                                              std::size_t n, Promise promise, std::size_t d = 0);

// Same check against a precomputed candidate list (see promise_class).
UniquenessResult verify_transcript_uniqueness(const std::vector<TranscriptRecord>& transcript, const Alphabet& alphabet,
                                              const std::vector<std::string>& candidates);

}  // namespace strrecon::harness
