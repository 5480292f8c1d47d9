#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "strrecon/alphabet.hpp"
#include "strrecon/rng.hpp"
#include "strrecon/strings.hpp"

namespace strrecon {

enum class QueryType { substr, subseq, jie, aji, rji };

const char* to_string(QueryType t) noexcept;
std::optional<QueryType> query_type_from_string(std::string_view s) noexcept;

struct QueryCounters {
  std::uint64_t substr = 0;
  std::uint64_t subseq = 0;
  std::uint64_t jie = 0;
  std::uint64_t aji = 0;
  std::uint64_t rji = 0;

  std::uint64_t total() const noexcept { return substr + subseq + jie + aji + rji; }
  QueryCounters operator-(const QueryCounters& o) const noexcept {
    return {substr - o.substr, subseq - o.subseq, jie - o.jie, aji - o.aji, rji - o.rji};
  }
  bool operator==(const QueryCounters&) const = default;
};

// One line of a query log: type<TAB>payload<TAB>answer.
struct TranscriptRecord {
  QueryType type;
  std::string payload;
  std::string answer;
};

std::string format_parikh(const ParikhVector& v);
std::string format_parikh(const ExtendedParikhVector& v);
ParikhVector parse_parikh(std::string_view text);
ExtendedParikhVector parse_extended_parikh(std::string_view text);

void write_transcript(std::ostream& out, const Alphabet& alphabet, const std::vector<TranscriptRecord>& records);
// Reads the format produced by write_transcript. Returns the alphabet from the
// "#alphabet" header when present.
std::vector<TranscriptRecord> read_transcript(std::istream& in, std::optional<Alphabet>* alphabet = nullptr);

// The query interface every reconstructor is written against.
class Oracle {
 public:
  virtual ~Oracle() = default;

  virtual const Alphabet& alphabet() const = 0;
  virtual bool is_substr(std::string_view x) = 0;
  virtual bool is_subseq(std::string_view x) = 0;
  virtual bool jie(const ExtendedParikhVector& psi) = 0;
  // 1-based start index of a matching window, or nullopt.
  virtual std::optional<std::size_t> aji(const ParikhVector& psi) = 0;
  virtual std::optional<std::size_t> rji(const ParikhVector& psi) = 0;
  virtual QueryCounters counters() const = 0;
};

// Companion string for the adversarial index oracle. When set, every answer
// is chosen to be valid for both the hidden string and the companion; ties go
// to the smallest common start index.
struct AdversaryPolicy {
  std::optional<std::string> companion;
};

// Metered oracle over a hidden string. The hidden string is reachable only
// through queries. Not safe for concurrent use; give each experiment its own.
class OracleHandle final : public Oracle {
 public:
  OracleHandle(Alphabet alphabet, std::string hidden, std::uint64_t seed = 0, AdversaryPolicy adversary = {});

  const Alphabet& alphabet() const override { return alphabet_; }

  bool is_substr(std::string_view x) override;
  bool is_subseq(std::string_view x) override;
  bool jie(const ExtendedParikhVector& psi) override;
  std::optional<std::size_t> aji(const ParikhVector& psi) override;
  std::optional<std::size_t> rji(const ParikhVector& psi) override;

  QueryCounters counters() const override { return counters_; }

  // Total-query ceiling across all types; the call that would exceed it throws
  // BudgetExceeded before it is answered or counted.
  void set_budget(std::optional<std::uint64_t> max_queries) { budget_ = max_queries; }
  std::optional<std::uint64_t> budget() const { return budget_; }

  void record_transcript(bool on) { recording_ = on; }
  const std::vector<TranscriptRecord>& transcript() const { return transcript_; }

  std::uint64_t seed() const { return seed_; }

 private:
  void charge();
  void log(QueryType type, std::string payload, std::string answer);
  const std::vector<std::size_t>& matches_in(const std::string& s, std::map<ParikhVector, std::vector<std::size_t>>& cache,
                                             const ParikhVector& psi);

  Alphabet alphabet_;
  std::string hidden_;
  std::uint64_t seed_;
  SplitMix64 rng_;
  AdversaryPolicy adversary_;
  QueryCounters counters_;
  std::optional<std::uint64_t> budget_;
  bool recording_ = false;
  std::vector<TranscriptRecord> transcript_;
  std::map<ParikhVector, std::vector<std::size_t>> hidden_matches_;
  std::map<ParikhVector, std::vector<std::size_t>> companion_matches_;
  std::optional<SubstringIndex> substr_index_;
};

// All 1-based start positions of windows of `s` whose Parikh vector is `psi`.
// The all-zero vector matches the empty window at every position 1..|s|+1.
std::vector<std::size_t> jumbled_match_starts(const Alphabet& alphabet, std::string_view s, const ParikhVector& psi);

// True iff some window of s.$ has extended Parikh vector psi.
bool jie_answer(const Alphabet& alphabet, std::string_view s, const ExtendedParikhVector& psi);

}  // namespace strrecon
