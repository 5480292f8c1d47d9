#include "strrecon/harness/bounds.hpp"

#include <cmath>

#include "strrecon/errors.hpp"
#include "strrecon/harness/calibration.hpp"

namespace strrecon::harness {

namespace {

struct Entry {
  Algorithm algorithm;
  const char* id;
};

constexpr Entry kIds[] = {
    {Algorithm::known_n_simple, "known-n-simple"},
    {Algorithm::known_n_improved, "known-n-improved"},
    {Algorithm::unknown_n, "unknown-n"},
    {Algorithm::corrupted, "corrupted"},
    {Algorithm::corrupted_intercalated, "corrupted-intercalated"},
    {Algorithm::letter_by_letter, "letter-by-letter"},
    {Algorithm::periodic_subseq, "subseq-periodic"},
    {Algorithm::general_subseq, "subseq-general"},
    {Algorithm::jie, "jie"},
    {Algorithm::rji, "rji"},
};

double lg(double x) { return std::log2(x); }

BoundVerdict make(std::string name, std::string expression, double bound, std::uint64_t measured, std::string kind,
                  bool enforced = true) {
  BoundVerdict v;
  v.name = std::move(name);
  v.expression = std::move(expression);
  v.bound = bound;
  v.measured = measured;
  v.pass = static_cast<double>(measured) <= bound;
  v.kind = std::move(kind);
  v.enforced = enforced;
  return v;
}

}  // namespace

const char* to_string(Algorithm a) noexcept {
  for (const auto& e : kIds)
    if (e.algorithm == a) return e.id;
  return "?";
}

Algorithm algorithm_from_string(std::string_view id) {
  for (const auto& e : kIds)
    if (id == e.id) return e.algorithm;
  std::string known;
  for (const auto& e : kIds) known += std::string(known.empty() ? "" : ", ") + e.id;
  throw ConfigError("unknown algorithm \"" + std::string(id) + "\" (expected one of: " + known + ")");
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> all = [] {
    std::vector<Algorithm> v;
    for (const auto& e : kIds) v.push_back(e.algorithm);
    return v;
  }();
  return all;
}

Family family_of(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::known_n_simple:
    case Algorithm::known_n_improved:
    case Algorithm::unknown_n:
    case Algorithm::periodic_subseq:
      return Family::periodic;
    case Algorithm::corrupted:
    case Algorithm::corrupted_intercalated:
      return Family::corrupted;
    default:
      return Family::random;
  }
}

bool accepts_known_n(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::letter_by_letter:
    case Algorithm::periodic_subseq:
    case Algorithm::general_subseq:
    case Algorithm::jie:
      return true;
    default:
      return false;
  }
}

Constants Constants::defaults() {
  namespace c = calibration;
  return {c::kUnknownSigmaP, c::kUnknownLgN, c::kUnknownSigma, c::kCorrupted,
          c::kIntercalatedSlack, c::kRjiNLnN, c::kRjiSigma};
}

std::vector<BoundVerdict> evaluate_bounds(Algorithm algorithm, const BoundInput& in, const QueryCounters& q,
                                          const Constants& c) {
  const double s = static_cast<double>(in.sigma);
  const double n = static_cast<double>(in.n);
  const double p = static_cast<double>(in.period_len);
  const double d = static_cast<double>(in.d);
  const double lg_n = in.n > 0 ? lg(n) : 0;
  const double clg_n = in.n > 0 ? ceil_lg(in.n) : 0;
  const double clg_s = ceil_lg(in.sigma);
  std::vector<BoundVerdict> out;

  switch (algorithm) {
    case Algorithm::known_n_simple:
      out.push_back(make("substr", "sigma|p| + sigma(2|p|-1)", s * p + s * (2 * p - 1), q.substr, "proven"));
      break;
    case Algorithm::known_n_improved:
      out.push_back(make("substr", "sigma|p| + ceil(lg |p|)", s * p + ceil_lg(in.period_len), q.substr, "proven"));
      break;
    case Algorithm::unknown_n:
      out.push_back(make("substr", "C1 sigma|p| + C2 lg n + C3 sigma",
                         c.unknown_sigma_p * s * p + c.unknown_lg_n * lg_n + c.unknown_sigma * s, q.substr,
                         "calibrated"));
      break;
    case Algorithm::corrupted:
      out.push_back(make("substr", "C (d sigma|p| + d|p| lg(n/(d+1)) + sigma|p|)",
                         c.corrupted * (d * s * p + d * p * lg(n / (d + 1)) + s * p), q.substr, "calibrated"));
      break;
    case Algorithm::corrupted_intercalated:
      out.push_back(make("substr", "2 sigma n + slack", 2 * s * n + c.intercalated_slack, q.substr, "calibrated"));
      break;
    case Algorithm::letter_by_letter:
      out.push_back(make("substr", "sigma n + 2 sigma", s * n + 2 * s, q.substr, "proven"));
      break;
    case Algorithm::periodic_subseq:
      if (in.n_known)
        out.push_back(make("subseq", "sigma ceil(lg n) + 2|p| ceil(lg sigma)", s * clg_n + 2 * p * clg_s, q.subseq,
                           "proven"));
      else
        out.push_back(make("subseq", "2 sigma ceil(lg n) + 2|p| ceil(lg sigma)", 2 * s * clg_n + 2 * p * clg_s,
                           q.subseq, "proven"));
      break;
    case Algorithm::general_subseq:
      if (in.n_known)
        out.push_back(make("subseq", "sigma ceil(lg n) + n ceil(lg sigma)", s * clg_n + n * clg_s, q.subseq, "proven"));
      else
        out.push_back(
            make("subseq", "2 sigma ceil(lg n) + n ceil(lg sigma)", 2 * s * clg_n + n * clg_s, q.subseq, "proven"));
      break;
    case Algorithm::jie:
      if (in.n_known)
        out.push_back(make("jie", "(sigma-1) n", (s - 1) * n, q.jie, "proven"));
      else
        out.push_back(make("jie", "sigma (n+1)", s * (n + 1), q.jie, "proven"));
      break;
    case Algorithm::rji:
      // The calibrated figure bounds the median over seeds, so a single run
      // is only compared against it.
      out.push_back(make("rji", "C1 n ln n + C2 sigma", c.rji_n_ln_n * n * (in.n > 0 ? std::log(n) : 0) + c.rji_sigma * s,
                         q.rji, "calibrated", false));
      break;
  }

  if (in.period_len > 0) {
    auto lower = make("lower_bound", "|p| lg sigma", p * lg(s), q.total(), "annotation", false);
    lower.pass = true;
    out.push_back(std::move(lower));
  }
  return out;
}

bool bounds_pass(const std::vector<BoundVerdict>& verdicts) {
  for (const auto& v : verdicts)
    if (v.enforced && !v.pass) return false;
  return true;
}

}  // namespace strrecon::harness
