#include "strrecon/errors.hpp"
#include "strrecon/jumbled.hpp"

namespace strrecon::jumbled {

ReconstructionReport reconstruct_jie(Oracle& oracle, std::optional<std::size_t> n) {
  RunScope scope(oracle, "jie");
  const auto& alphabet = oracle.alphabet();
  const std::size_t sigma = alphabet.size();
  std::string suffix;
  try {
    ExtendedParikhVector psi{ParikhVector(sigma), 1};
    for (;;) {
      if (n && suffix.size() == *n) break;
      std::optional<std::size_t> found;
      for (std::size_t i = 0; i < sigma && !found; ++i) {
        ExtendedParikhVector probe{psi.letters.plus_letter(i), 1};
        // With n known a letter must precede the suffix, so the last one is inferred.
        if ((n && i + 1 == sigma) || oracle.jie(probe)) found = i;
      }
      if (!found) break;
      psi.letters = psi.letters.plus_letter(*found);
      suffix.insert(suffix.begin(), alphabet[*found]);
    }
    return scope.success(suffix);
  } catch (const BudgetExceeded& e) {
    return scope.failure(e.what(), suffix);
  }
}

}  // namespace strrecon::jumbled
