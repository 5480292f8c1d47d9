#include "strrecon/errors.hpp"
#include "strrecon/search.hpp"
#include "strrecon/substring.hpp"

namespace strrecon::substring {

ReconstructionReport reconstruct_letter_by_letter(Oracle& oracle, std::optional<std::size_t> n_known) {
  RunScope scope(oracle, "letter_by_letter");
  Prober prober(oracle);
  std::string t;
  try {
    if (n_known && *n_known == 0) return scope.success("");
    if (oracle.alphabet().size() == 1) {
      const char a = oracle.alphabet()[0];
      if (n_known) return scope.success(std::string(*n_known, a));
      const auto v = doubling_search([&](std::uint64_t m) { return prober.ask(std::string(m, a)); }, 0);
      return scope.success(std::string(v.value, a));
    }
    auto full = [&] { return n_known && t.size() == *n_known; };
    while (!full()) {
      auto next = prober.append_letter(t, n_known && t.empty());
      if (!next) break;
      t = std::move(*next);
    }
    // Once t is a suffix shorter than a known n, a left letter must exist.
    while (!full()) {
      auto next = prober.prepend_letter(t, n_known.has_value());
      if (!next) break;
      t = std::move(*next);
    }
    return scope.success(t);
  } catch (const BudgetExceeded& e) {
    return scope.failure(e.what(), t);
  }
}

}  // namespace strrecon::substring
