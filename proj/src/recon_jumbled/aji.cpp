#include <algorithm>
#include <map>

#include "strrecon/errors.hpp"
#include "strrecon/jumbled.hpp"

namespace strrecon::jumbled {

IndistinguishablePair build_indistinguishable_pair(std::size_t b) {
  if (b < 1) throw ContractError("build_indistinguishable_pair: b must be at least 1");
  const std::string half = power("10", b);
  IndistinguishablePair pair;
  pair.b = b;
  pair.s1 = "101101" + half + "01" + half + "010010";
  pair.s2 = "101101" + half + "10" + half + "010010";
  return pair;
}

namespace {

using MatchTable = std::map<ParikhVector, std::vector<std::size_t>>;

// Match starts of every window, keyed by Parikh vector.
MatchTable windows_of(const Alphabet& alphabet, std::string_view s) {
  MatchTable table;
  for (std::size_t start = 0; start < s.size(); ++start) {
    ParikhVector v(alphabet.size());
    for (std::size_t end = start; end < s.size(); ++end) {
      ++v.counts[alphabet.index_of(s[end])];
      table[v].push_back(start + 1);
    }
  }
  for (auto& [psi, starts] : table) std::sort(starts.begin(), starts.end());
  return table;
}

// Calls f for every vector with sigma components summing to at most `total`.
template <class F>
void for_each_vector(std::size_t sigma, std::size_t total, F&& f) {
  ParikhVector v(sigma);
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i + 1 == sigma) {
      for (std::size_t c = 0; c <= left; ++c) {
        v.counts[i] = static_cast<std::uint32_t>(c);
        f(v);
      }
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      v.counts[i] = static_cast<std::uint32_t>(c);
      self(self, i + 1, left - c);
    }
  };
  rec(rec, 0, total);
}

}  // namespace

AjiVerdict verify_aji_indistinguishable(const Alphabet& alphabet, std::string_view s1, std::string_view s2) {
  if (s1.size() != s2.size()) throw ContractError("verify_aji_indistinguishable: strings differ in length");
  alphabet.require(s1);
  alphabet.require(s2);
  const auto m1 = windows_of(alphabet, s1);
  const auto m2 = windows_of(alphabet, s2);
  const std::size_t n = s1.size();
  static const std::vector<std::size_t> none;
  auto starts = [&](const MatchTable& t, const ParikhVector& v) -> const std::vector<std::size_t>& {
    auto it = t.find(v);
    return it == t.end() ? none : it->second;
  };

  AjiVerdict verdict;
  for_each_vector(alphabet.size(), n, [&](const ParikhVector& v) {
    AjiCertificateEntry entry{v, std::nullopt, false};
    if (v.total() == 0) {
      entry.common_index = 1;  // the empty window matches everywhere
    } else {
      const auto& a = starts(m1, v);
      const auto& b = starts(m2, v);
      std::vector<std::size_t> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (!common.empty()) {
        entry.common_index = common.front();
      } else if (!a.empty() || !b.empty()) {
        entry.distinguishing = true;
        if (verdict.indistinguishable) verdict.first_distinguishing = v;
        verdict.indistinguishable = false;
      }
    }
    verdict.entries.push_back(std::move(entry));
  });
  return verdict;
}

void write_certificate(std::ostream& out, const AjiVerdict& verdict) {
  for (const auto& e : verdict.entries) {
    out << format_parikh(e.psi) << " -> ";
    if (e.distinguishing)
      out << "DISTINGUISHING";
    else if (e.common_index)
      out << *e.common_index;
    else
      out << "NONE";
    out << '\n';
  }
}

std::set<ParikhVector> plain_jumbled_answers(const Alphabet& alphabet, std::string_view s) {
  std::set<ParikhVector> out{ParikhVector(alphabet.size())};
  for (const auto& [psi, starts] : windows_of(alphabet, s)) out.insert(psi);
  return out;
}

}  // namespace strrecon::jumbled
