#include "strrecon/subsequence.hpp"

#include <algorithm>

#include "strrecon/errors.hpp"
#include "strrecon/search.hpp"

namespace strrecon::subsequence {

namespace {

LetterRun count_within(Oracle& oracle, char a, std::optional<std::size_t> most) {
  auto has = [&](std::uint64_t m) { return oracle.is_subseq(std::string(m, a)); };
  if (most) return {a, static_cast<std::size_t>(bounded_binary_search(has, 0, *most + 1).value)};
  return {a, static_cast<std::size_t>(doubling_search(has, 0).value)};
}

// Does `s` restricted to the letters of `part` equal `part`?
bool projects_to(std::string_view s, std::string_view part, std::string_view letters) {
  std::size_t j = 0;
  for (char c : s) {
    if (letters.find(c) == std::string_view::npos) continue;
    if (j == part.size() || part[j] != c) return false;
    ++j;
  }
  return j == part.size();
}

std::string distinct_letters(std::string_view s) {
  std::string out;
  for (char c : s)
    if (out.find(c) == std::string::npos) out.push_back(c);
  return out;
}

struct Subtree {
  std::string letters;
  std::string projection;
};

Subtree build(Oracle& oracle, const std::vector<LetterRun>& leaves, std::size_t lo, std::size_t hi, bool periodic,
              std::vector<MergeNode>* trace, std::size_t& height) {
  if (hi - lo == 1) {
    height = 0;
    Subtree leaf{std::string(1, leaves[lo].letter), std::string(leaves[lo].count, leaves[lo].letter)};
    if (trace) trace->push_back({0, leaf.letters, leaf.projection, {}});
    return leaf;
  }
  const std::size_t mid = lo + (hi - lo + 1) / 2;
  std::size_t hx = 0, hy = 0;
  Subtree x = build(oracle, leaves, lo, mid, periodic, trace, hx);
  Subtree y = build(oracle, leaves, mid, hi, periodic, trace, hy);
  height = std::max(hx, hy) + 1;
  MergeStats stats;
  Subtree v{x.letters + y.letters, merge_children(oracle, x.projection, y.projection, periodic, &stats)};
  if (trace) trace->push_back({height, v.letters, v.projection, stats});
  return v;
}

ReconstructionReport reconstruct(Oracle& oracle, std::optional<std::size_t> n, bool periodic, const char* name,
                                 std::vector<MergeNode>* trace) {
  RunScope scope(oracle, name);
  try {
    const auto& alphabet = oracle.alphabet();
    std::vector<LetterRun> present;
    std::optional<std::size_t> remaining = n;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      const char a = alphabet[i];
      LetterRun run{a, 0};
      if (remaining && (*remaining == 0 || i + 1 == alphabet.size()))
        run.count = *remaining;  // forced by the known total
      else
        run = count_within(oracle, a, remaining);
      if (remaining) *remaining -= run.count;
      if (run.count > 0) present.push_back(run);
    }
    if (present.empty()) return scope.success("");
    std::size_t height = 0;
    Subtree root = build(oracle, present, 0, present.size(), periodic, trace, height);
    auto report = scope.success(std::move(root.projection));
    report.metrics["present_letters"] = static_cast<double>(present.size());
    report.metrics["tree_height"] = static_cast<double>(height);
    return report;
  } catch (const BudgetExceeded& e) {
    return scope.failure(e.what());
  }
}

}  // namespace

LetterRun count_letter(Oracle& oracle, char a, std::optional<std::size_t> n) {
  if (!oracle.alphabet().contains(a)) throw AlphabetError(std::string("letter '") + a + "' is not in the alphabet");
  return count_within(oracle, a, n);
}

std::string merge_children(Oracle& oracle, std::string_view sx, std::string_view sy, bool periodic_mode,
                           MergeStats* stats) {
  const std::string lx = distinct_letters(sx);
  const std::string ly = distinct_letters(sy);
  if (std::any_of(lx.begin(), lx.end(), [&](char c) { return ly.find(c) != std::string::npos; }))
    throw ContractError("merge_children: children share a letter");
  const std::size_t total = sx.size() + sy.size();

  MergeStats local;
  std::string v;
  v.reserve(total);
  std::size_t i = 0, j = 0;
  while (i < sx.size() && j < sy.size()) {
    std::string probe = v;
    probe.push_back(sx[i]);
    probe.append(sy.substr(j));
    ++local.queries;
    if (oracle.is_subseq(probe))
      v.push_back(sx[i++]);
    else
      v.push_back(sy[j++]);
    if (!periodic_mode || i == sx.size() || j == sy.size()) continue;
    // Shortcut: v^k v' of the full length, when it could be the answer.
    std::string candidate = periodic_extension(v, 0, total);
    if (!projects_to(candidate, sx, lx) || !projects_to(candidate, sy, ly)) continue;
    ++local.queries;
    if (oracle.is_subseq(candidate)) {
      local.prefix_length = v.size();
      local.shortcut = true;
      if (stats) *stats = local;
      return candidate;
    }
  }
  local.prefix_length = v.size();
  v.append(sx.substr(i));
  v.append(sy.substr(j));
  if (stats) *stats = local;
  return v;
}

ReconstructionReport reconstruct_periodic_subseq(Oracle& oracle, std::optional<std::size_t> n,
                                                 std::vector<MergeNode>* trace) {
  return reconstruct(oracle, n, true, "periodic_subseq", trace);
}

ReconstructionReport reconstruct_general_subseq(Oracle& oracle, std::optional<std::size_t> n,
                                                std::vector<MergeNode>* trace) {
  return reconstruct(oracle, n, false, "general_subseq", trace);
}

}  // namespace strrecon::subsequence
