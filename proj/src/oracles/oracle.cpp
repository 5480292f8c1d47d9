#include "strrecon/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <istream>

#include "strrecon/errors.hpp"

namespace strrecon {

const char* to_string(QueryType t) noexcept {
  switch (t) {
    case QueryType::substr: return "substr";
    case QueryType::subseq: return "subseq";
    case QueryType::jie: return "jie";
    case QueryType::aji: return "aji";
    case QueryType::rji: return "rji";
  }
  return "?";
}

std::optional<QueryType> query_type_from_string(std::string_view s) noexcept {
  for (auto t : {QueryType::substr, QueryType::subseq, QueryType::jie, QueryType::aji, QueryType::rji})
    if (s == to_string(t)) return t;
  return std::nullopt;
}

std::string format_parikh(const ParikhVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.counts.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(v.counts[i]);
  }
  return out;
}

std::string format_parikh(const ExtendedParikhVector& v) {
  std::string out = format_parikh(v.letters);
  if (!out.empty()) out.push_back(',');
  out += std::to_string(v.end);
  return out;
}

namespace {

std::vector<std::uint32_t> parse_counts(std::string_view text) {
  std::vector<std::uint32_t> counts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto field = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
      throw TranscriptError("malformed Parikh vector \"" + std::string(text) + "\"");
    counts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return counts;
}

}  // namespace

ParikhVector parse_parikh(std::string_view text) { return ParikhVector(parse_counts(text)); }

ExtendedParikhVector parse_extended_parikh(std::string_view text) {
  auto counts = parse_counts(text);
  ExtendedParikhVector v;
  v.end = counts.back();
  counts.pop_back();
  v.letters = ParikhVector(std::move(counts));
  return v;
}

void write_transcript(std::ostream& out, const Alphabet& alphabet, const std::vector<TranscriptRecord>& records) {
  out << "#alphabet\t" << alphabet.letters() << '\n';
  for (const auto& r : records) out << to_string(r.type) << '\t' << r.payload << '\t' << r.answer << '\n';
}

std::vector<TranscriptRecord> read_transcript(std::istream& in, std::optional<Alphabet>* alphabet) {
  std::vector<TranscriptRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("#alphabet\t", 0) == 0) {
      if (alphabet) *alphabet = Alphabet(line.substr(10));
      continue;
    }
    if (line[0] == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw TranscriptError("line " + std::to_string(lineno) + ": expected 3 tab-separated fields");
    const auto type = query_type_from_string(std::string_view(line).substr(0, t1));
    if (!type) throw TranscriptError("line " + std::to_string(lineno) + ": unknown query type");
    records.push_back({*type, line.substr(t1 + 1, t2 - t1 - 1), line.substr(t2 + 1)});
  }
  return records;
}

std::vector<std::size_t> jumbled_match_starts(const Alphabet& alphabet, std::string_view s, const ParikhVector& psi) {
  if (psi.sigma() != alphabet.size()) throw ContractError("Parikh vector size does not match the alphabet");
  std::vector<std::size_t> starts;
  const auto len = psi.total();
  if (len == 0) {
    for (std::size_t i = 1; i <= s.size() + 1; ++i) starts.push_back(i);
    return starts;
  }
  if (len > s.size()) return starts;

  // diff[c] = window count minus wanted count; `off` counts letters with diff != 0.
  std::vector<std::int64_t> diff(alphabet.size());
  std::size_t off = 0;
  for (std::size_t c = 0; c < diff.size(); ++c) {
    diff[c] = -static_cast<std::int64_t>(psi.counts[c]);
    off += diff[c] != 0;
  }
  auto bump = [&](char ch, std::int64_t delta) {
    auto& d = diff[alphabet.index_of(ch)];
    const bool was_off = d != 0;
    d += delta;
    off += static_cast<std::size_t>(d != 0) - static_cast<std::size_t>(was_off);
  };
  for (std::size_t i = 0; i < len; ++i) bump(s[i], +1);
  for (std::size_t start = 0;; ++start) {
    if (off == 0) starts.push_back(start + 1);
    if (start + len >= s.size()) break;
    bump(s[start], -1);
    bump(s[start + len], +1);
  }
  return starts;
}

bool jie_answer(const Alphabet& alphabet, std::string_view s, const ExtendedParikhVector& psi) {
  if (psi.end > 1) return false;
  if (psi.end == 1) {
    const auto len = psi.letters.total();
    if (len > s.size()) return false;
    return parikh_of(alphabet, s.substr(s.size() - len)) == psi.letters;
  }
  if (psi.letters.total() == 0) return true;
  return !jumbled_match_starts(alphabet, s, psi.letters).empty();
}

OracleHandle::OracleHandle(Alphabet alphabet, std::string hidden, std::uint64_t seed, AdversaryPolicy adversary)
    : alphabet_(std::move(alphabet)),
      hidden_(std::move(hidden)),
      seed_(seed),
      rng_(seed),
      adversary_(std::move(adversary)) {
  alphabet_.require(hidden_);
  if (adversary_.companion) alphabet_.require(*adversary_.companion);
}

void OracleHandle::charge() {
  if (budget_ && counters_.total() >= *budget_)
    throw BudgetExceeded("oracle query budget of " + std::to_string(*budget_) + " exhausted");
}

void OracleHandle::log(QueryType type, std::string payload, std::string answer) {
  if (recording_) transcript_.push_back({type, std::move(payload), std::move(answer)});
}

bool OracleHandle::is_substr(std::string_view x) {
  charge();
  ++counters_.substr;
  if (!substr_index_) substr_index_.emplace(alphabet_, hidden_);
  const bool yes = substr_index_->contains(x);
  log(QueryType::substr, std::string(x), yes ? "yes" : "no");
  return yes;
}

bool OracleHandle::is_subseq(std::string_view x) {
  charge();
  ++counters_.subseq;
  const bool yes = greedy_subsequence(hidden_, x);
  log(QueryType::subseq, std::string(x), yes ? "yes" : "no");
  return yes;
}

bool OracleHandle::jie(const ExtendedParikhVector& psi) {
  charge();
  ++counters_.jie;
  const bool yes = jie_answer(alphabet_, hidden_, psi);
  log(QueryType::jie, format_parikh(psi), yes ? "yes" : "no");
  return yes;
}

const std::vector<std::size_t>& OracleHandle::matches_in(const std::string& s,
                                                         std::map<ParikhVector, std::vector<std::size_t>>& cache,
                                                         const ParikhVector& psi) {
  auto it = cache.find(psi);
  if (it == cache.end()) it = cache.emplace(psi, jumbled_match_starts(alphabet_, s, psi)).first;
  return it->second;
}

std::optional<std::size_t> OracleHandle::aji(const ParikhVector& psi) {
  charge();
  ++counters_.aji;
  const auto& mine = matches_in(hidden_, hidden_matches_, psi);
  std::optional<std::size_t> answer;
  if (!adversary_.companion) {
    if (!mine.empty()) answer = mine.front();
  } else {
    const auto& theirs = matches_in(*adversary_.companion, companion_matches_, psi);
    if (mine.empty() && theirs.empty()) {
      answer = std::nullopt;
    } else {
      // Both lists are sorted, so the first common element is the smallest.
      std::vector<std::size_t> common;
      std::set_intersection(mine.begin(), mine.end(), theirs.begin(), theirs.end(), std::back_inserter(common));
      if (common.empty())
        throw AdversaryBroken("no answer to Parikh query (" + format_parikh(psi) + ") is valid for both strings");
      answer = common.front();
    }
  }
  log(QueryType::aji, format_parikh(psi), answer ? std::to_string(*answer) : "NONE");
  return answer;
}

std::optional<std::size_t> OracleHandle::rji(const ParikhVector& psi) {
  charge();
  ++counters_.rji;
  const auto& mine = matches_in(hidden_, hidden_matches_, psi);
  std::optional<std::size_t> answer;
  if (!mine.empty()) answer = mine[rng_.below(mine.size())];
  log(QueryType::rji, format_parikh(psi), answer ? std::to_string(*answer) : "NONE");
  return answer;
}

}  // namespace strrecon
