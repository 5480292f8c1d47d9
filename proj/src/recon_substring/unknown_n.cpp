#include "strrecon/errors.hpp"
#include "strrecon/search.hpp"
#include "strrecon/substring.hpp"

namespace strrecon::substring {

namespace {

std::string unary_unknown_length(Prober& prober, std::uint64_t floor) {
  const char a = prober.alphabet()[0];
  const auto v = doubling_search([&](std::uint64_t m) { return prober.ask(std::string(m, a)); }, floor);
  return std::string(v.value, a);
}

}  // namespace

ReconstructionReport reconstruct_unknown_n(Oracle& oracle) {
  RunScope scope(oracle, "unknown_n");
  Prober prober(oracle);
  std::string q;
  try {
    if (oracle.alphabet().size() == 1) return scope.success(unary_unknown_length(prober, 1));

    // q = known[off, off + q.size()); letters of `known` around q come free.
    std::string known;
    std::size_t off = 0;
    bool right_closed = false;
    std::size_t rounds = 0;
    for (;;) {
      ++rounds;
      if (!right_closed) {
        if (off + q.size() < known.size()) {
          q.push_back(known[off + q.size()]);
        } else if (auto r = prober.append_letter(q, q.empty())) {
          q = std::move(*r);
          known = q;
          off = 0;
        } else {
          right_closed = true;
        }
      }
      if (right_closed) {
        if (off > 0) {
          --off;
          q.insert(q.begin(), known[off]);
        } else if (auto l = prober.prepend_letter(q, false)) {
          q = std::move(*l);
          known = q;
        } else {
          // No letter on either side: q is the whole string.
          auto report = scope.success(q);
          report.metrics["rounds"] = static_cast<double>(rounds);
          return report;
        }
      }

      const std::size_t m = q.size();
      const auto t = doubling_search([&](std::uint64_t c) { return prober.ask(power(q, c)); }, 1).value;
      std::string text;
      if (t == 1) {
        text = q;
      } else {
        const std::string run = power(q, t);
        const auto l = doubling_search([&](std::uint64_t c) { return prober.ask(q.substr(m - c) + run); }, 0, m - 1)
                           .value;
        const std::string left = q.substr(m - l);
        const auto r =
            doubling_search([&](std::uint64_t c) { return prober.ask(left + run + q.substr(0, c)); }, 0, m - 1).value;
        text = left + run + q.substr(0, r);
        // Continuing the q-periodic pattern on either side would contain q^(t+1).
        prober.assume(text + q[r], false);
        prober.assume(std::string(1, q[m - l - 1]) + text, false);
      }

      // End test: right letter first, then left.
      bool valid = false;
      const bool right_known_closed = t == 1 && right_closed;
      if (right_known_closed || !prober.append_letter(text, false)) valid = !prober.prepend_letter(text, false);
      if (valid) {
        auto report = scope.success(text);
        report.metrics["rounds"] = static_cast<double>(rounds);
        return report;
      }
      if (t > 1) {
        known = text;
        off = 0;
        q = text.substr(0, text.size() - m + 1);
        right_closed = false;
      }
    }
  } catch (const BudgetExceeded& e) {
    return scope.failure(e.what(), q);
  }
}

}  // namespace strrecon::substring
