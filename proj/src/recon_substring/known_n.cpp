#include "strrecon/errors.hpp"
#include "strrecon/search.hpp"
#include "strrecon/substring.hpp"

namespace strrecon::substring {

namespace {

bool accepts(Prober& prober, std::string_view q, std::size_t n) {
  const std::size_t g = n / q.size();
  // q^0 and q^1 are known substrings.
  if (g <= 2) return true;
  return prober.ask(power(q, g - 1));
}

// Grows q one guaranteed letter at a time until q^(g(q)-1) is a substring.
std::string grow_candidate(Prober& prober, std::size_t n, std::size_t& rounds) {
  std::string q;
  do {
    q = *prober.append_letter(q, true);
    ++rounds;
  } while (!accepts(prober, q, n));
  return q;
}

std::string true_rotation(Prober& prober, std::string_view q, std::size_t n) {
  if (q.empty() || q.size() > n) throw ContractError("true_rotation: need 1 <= |q| <= n");
  // q^inf[..n-|q|+1] occurs exactly once when q is a rotation of the smallest
  // period, so the longest suffix of q that fits in front of it fixes the phase.
  const std::string run = periodic_extension(q, 0, n - q.size() + 1);
  const auto s = bounded_binary_search(
      [&](std::uint64_t len) {
        return prober.ask(std::string(q.substr(q.size() - len)) + run);
      },
      0, q.size());
  if (s.value == 0) return std::string(q);
  return cyclic_rotation(q, q.size() - s.value + 1);
}

std::string unary(const Alphabet& alphabet, std::size_t n) { return std::string(n, alphabet[0]); }

}  // namespace

bool candidate_loop_accepts(Oracle& oracle, std::string_view q, std::size_t n) {
  if (q.empty() || q.size() > n) throw ContractError("candidate_loop_accepts: need 1 <= |q| <= n");
  Prober prober(oracle);
  return accepts(prober, q, n);
}

std::string true_rotation(Oracle& oracle, std::string_view q, std::size_t n) {
  Prober prober(oracle);
  return true_rotation(prober, q, n);
}

ReconstructionReport reconstruct_known_n_simple(Oracle& oracle, std::size_t n) {
  RunScope scope(oracle, "known_n_simple");
  if (n == 0) return scope.success("");
  if (oracle.alphabet().size() == 1) return scope.success(unary(oracle.alphabet(), n));
  Prober prober(oracle);
  std::string t;
  try {
    std::size_t rounds = 0;
    const std::string q = grow_candidate(prober, n, rounds);
    const std::size_t g = n / q.size();
    t = power(q, g > 2 ? g - 1 : 1);
    // The letter continuing the q-periodic pattern is tried first on both sides.
    while (t.size() < n) {
      auto next = prober.append_letter(t, false, std::nullopt, t[t.size() - q.size()]);
      if (!next) break;
      t = std::move(*next);
    }
    // t cannot grow right, so it is a suffix and every prepend must succeed.
    while (t.size() < n) t = *prober.prepend_letter(t, true, std::nullopt, t[q.size() - 1]);
    auto report = scope.success(t);
    report.metrics["candidate_rounds"] = static_cast<double>(rounds);
    report.metrics["candidate_length"] = static_cast<double>(q.size());
    return report;
  } catch (const BudgetExceeded& e) {
    return scope.failure(e.what(), t);
  }
}

ReconstructionReport reconstruct_known_n_improved(Oracle& oracle, std::size_t n) {
  RunScope scope(oracle, "known_n_improved");
  if (n == 0) return scope.success("");
  if (oracle.alphabet().size() == 1) return scope.success(unary(oracle.alphabet(), n));
  Prober prober(oracle);
  try {
    std::size_t rounds = 0;
    const std::string q = grow_candidate(prober, n, rounds);
    const std::string p = true_rotation(prober, q, n);
    auto report = scope.success(periodic_extension(p, 0, n));
    report.metrics["candidate_rounds"] = static_cast<double>(rounds);
    report.metrics["candidate_length"] = static_cast<double>(q.size());
    return report;
  } catch (const BudgetExceeded& e) {
    return scope.failure(e.what());
  }
}

}  // namespace strrecon::substring
