#include <map>

#include "strrecon/errors.hpp"
#include "strrecon/search.hpp"
#include "strrecon/substring.hpp"

namespace strrecon::substring {

namespace {

// The y letters of the q-periodic pattern that precede offset `phase`.
std::string periodic_before(std::string_view q, std::size_t phase, std::size_t y) {
  const std::size_t m = q.size();
  return periodic_extension(q, (phase + m - y % m) % m, y);
}

}  // namespace

ExpandResult expand(Prober& prober, std::string_view q, std::size_t d) {
  if (q.empty()) throw ContractError("expand: empty candidate");
  const std::size_t m = q.size();
  ExpandResult res;
  std::string text(q);
  // Offset in q^inf of text[0]; text is compared against the pattern from there.
  std::size_t phase = 0;
  bool right_closed = false;
  bool left_closed = false;
  while (res.errors <= d) {
    ++res.iterations;
    std::optional<char> right_expected;
    std::optional<char> left_expected;
    if (!right_closed) {
      const std::size_t from = (phase + text.size()) % m;
      const auto x = doubling_search(
          [&](std::uint64_t y) { return prober.ask(text + periodic_extension(q, from, y)); }, 0);
      text += periodic_extension(q, from, x.value);
      right_expected = q[(from + x.value) % m];
    }
    if (!left_closed) {
      const auto y = doubling_search([&](std::uint64_t c) { return prober.ask(periodic_before(q, phase, c) + text); }, 0);
      text = periodic_before(q, phase, y.value) + text;
      phase = (phase + m - y.value % m) % m;
      left_expected = q[(phase + m - 1) % m];
    }
    // The pattern letter on each side is known to fail, so any letter found
    // there is a mismatch.
    if (!right_closed) {
      if (auto r = prober.append_letter(text, false, right_expected)) {
        text = std::move(*r);
        ++res.errors;
      } else {
        right_closed = true;
      }
    }
    if (!left_closed) {
      if (auto l = prober.prepend_letter(text, false, left_expected)) {
        text = std::move(*l);
        phase = (phase + m - 1) % m;
        ++res.errors;
      } else {
        left_closed = true;
      }
    }
    if (right_closed && left_closed) break;
  }
  if (res.errors > d) return res;
  res.success = true;
  res.text = std::move(text);
  return res;
}

ExpandResult expand(Oracle& oracle, std::string_view q, std::size_t d) {
  Prober prober(oracle);
  return expand(prober, q, d);
}

ReconstructionReport reconstruct_corrupted(Oracle& oracle, std::size_t d) {
  RunScope scope(oracle, "corrupted");
  Prober prober(oracle);
  std::string a;
  try {
    if (oracle.alphabet().size() == 1) {
      const char c = oracle.alphabet()[0];
      const auto v = doubling_search([&](std::uint64_t m) { return prober.ask(std::string(m, c)); }, 1);
      return scope.success(std::string(v.value, c));
    }
    const std::size_t blocks = 2 * d + 1;
    bool right_closed = false;
    bool left_closed = false;
    std::size_t expansions = 0;
    for (std::size_t i = 1;; ++i) {
      for (std::size_t added = 0; added < blocks;) {
        if (!right_closed) {
          if (auto r = prober.append_letter(a, a.empty())) {
            a = std::move(*r);
            ++added;
            continue;
          }
          right_closed = true;
        }
        if (!left_closed) {
          if (auto l = prober.prepend_letter(a, false)) {
            a = std::move(*l);
            ++added;
            continue;
          }
          left_closed = true;
        }
        break;
      }
      if (right_closed && left_closed) {
        auto report = scope.success(a);
        report.metrics["iterations"] = static_cast<double>(i);
        report.metrics["expansions"] = static_cast<double>(expansions);
        return report;
      }

      // The only length-i block that can have produced `a` with at most d errors.
      std::map<std::string, std::size_t> tally;
      std::string candidate;
      for (std::size_t b = 0; b < blocks; ++b) {
        const std::string block = a.substr(b * i, i);
        if (++tally[block] == d + 1) candidate = block;
      }
      if (candidate.empty()) continue;
      ++expansions;
      auto res = expand(prober, candidate, d);
      if (res.success) {
        auto report = scope.success(std::move(*res.text));
        report.metrics["iterations"] = static_cast<double>(i);
        report.metrics["expansions"] = static_cast<double>(expansions);
        report.metrics["period_length"] = static_cast<double>(i);
        return report;
      }
    }
  } catch (const BudgetExceeded& e) {
    return scope.failure(e.what(), a);
  }
}

}  // namespace strrecon::substring
