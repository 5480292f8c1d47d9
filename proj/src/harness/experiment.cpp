#include "strrecon/harness/experiment.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "strrecon/errors.hpp"
#include "strrecon/harness/calibration.hpp"
#include "strrecon/jumbled.hpp"
#include "strrecon/rng.hpp"
#include "strrecon/subsequence.hpp"
#include "strrecon/substring.hpp"

namespace strrecon::harness {

void validate(const ExperimentConfig& c) {
  if (c.sigma < 1) throw ConfigError("sigma must be at least 1");
  if (c.n_known && !accepts_known_n(c.algorithm))
    throw ConfigError(std::string(to_string(c.algorithm)) + " does not take a known n");
  if (c.hidden) return;
  switch (family_of(c.algorithm)) {
    case Family::periodic:
    case Family::corrupted:
      if (c.period_len < 1) throw ConfigError("period length must be at least 1");
      if (c.k < 2) throw ConfigError("periodic instances need k >= 2");
      if (c.algorithm == Algorithm::known_n_improved && c.k <= 3)
        throw ConfigError("known-n-improved requires k > 3 (got k = " + std::to_string(c.k) + ")");
      break;
    case Family::random:
      break;
  }
}

Instance make_instance(const ExperimentConfig& c) {
  validate(c);
  if (c.hidden) {
    Instance inst{Alphabet::first(c.sigma), *c.hidden, std::nullopt, {}, {}};
    inst.alphabet.require(inst.hidden);
    if (!inst.hidden.empty()) {
      auto dec = smallest_period(inst.hidden);
      if (dec.k > 1) inst.period = dec;
    }
    if (family_of(c.algorithm) == Family::periodic) {
      if (!inst.period) throw ConfigError("the given string is not periodic");
      if (c.algorithm == Algorithm::known_n_improved && inst.period->k <= 3)
        throw ConfigError("known-n-improved requires k > 3");
    }
    return inst;
  }
  switch (family_of(c.algorithm)) {
    case Family::periodic:
      return gen_periodic(c.sigma, c.period_len, c.k, c.seed);
    case Family::corrupted:
      return gen_corrupted(c.sigma, c.period_len, c.k, c.d, c.seed, c.force);
    case Family::random:
      break;
  }
  return gen_random(c.sigma, c.n.value_or(c.period_len * c.k), c.seed);
}

std::uint64_t default_budget(Algorithm algorithm, std::size_t sigma, std::size_t n) {
  if (algorithm == Algorithm::rji) {
    const double x = static_cast<double>(n + sigma);
    return static_cast<std::uint64_t>(64 * x * (std::log(x + 2) + 1)) + 64;
  }
  return 4 * static_cast<std::uint64_t>(sigma) * n + 64;
}

double ExperimentResult::headline_bound() const {
  for (const auto& v : report.verdicts)
    if (v.kind != "annotation") return v.bound;
  return 0;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  ExperimentResult result{config, make_instance(config), {}, false, 0, 0, {}};
  const auto& inst = result.instance;
  const std::size_t n = inst.hidden.size();
  const std::optional<std::size_t> told = config.n_known ? std::optional<std::size_t>(n) : std::nullopt;

  OracleHandle oracle(inst.alphabet, inst.hidden, mix_seed(config.seed, 0x0c1e));
  result.budget = config.budget.value_or(default_budget(config.algorithm, inst.alphabet.size(), n));
  oracle.set_budget(result.budget);
  oracle.record_transcript(config.record_transcript);

  const auto start = std::chrono::steady_clock::now();
  try {
    switch (config.algorithm) {
      case Algorithm::known_n_simple:
        result.report = substring::reconstruct_known_n_simple(oracle, n);
        break;
      case Algorithm::known_n_improved:
        result.report = substring::reconstruct_known_n_improved(oracle, n);
        break;
      case Algorithm::unknown_n:
        result.report = substring::reconstruct_unknown_n(oracle);
        break;
      case Algorithm::corrupted:
        result.report = substring::reconstruct_corrupted(oracle, config.d);
        break;
      case Algorithm::corrupted_intercalated:
        result.report = substring::reconstruct_corrupted_intercalated(oracle, config.d);
        break;
      case Algorithm::letter_by_letter:
        result.report = substring::reconstruct_letter_by_letter(oracle, told);
        break;
      case Algorithm::periodic_subseq:
        result.report = subsequence::reconstruct_periodic_subseq(oracle, told);
        break;
      case Algorithm::general_subseq:
        result.report = subsequence::reconstruct_general_subseq(oracle, told);
        break;
      case Algorithm::jie:
        result.report = jumbled::reconstruct_jie(oracle, told);
        break;
      case Algorithm::rji:
        result.report = jumbled::reconstruct_rji(oracle);
        break;
    }
  } catch (const ContractError& e) {
    // A broken promise (e.g. a non-periodic string handed to a periodic
    // reconstructor) is a failed run, not a crash.
    result.report = ReconstructionReport{};
    result.report.algorithm = to_string(config.algorithm);
    result.report.failure = e.what();
    result.report.queries = oracle.counters();
  }
  result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  result.exact = result.report.completed && result.report.output == inst.hidden;
  BoundInput in;
  in.sigma = inst.alphabet.size();
  in.n = n;
  in.period_len = inst.period ? inst.period->p.size() : 0;
  in.d = family_of(config.algorithm) == Family::corrupted ? config.d : 0;
  in.n_known = config.n_known;
  result.report.verdicts = evaluate_bounds(config.algorithm, in, result.report.queries, config.constants);
  if (config.record_transcript) result.transcript = oracle.transcript();
  return result;
}

nlohmann::ordered_json to_json(const ExperimentResult& r, bool include_wall_time) {
  using nlohmann::ordered_json;
  const auto& c = r.config;
  ordered_json config{
      {"algo", to_string(c.algorithm)},
      {"sigma", c.sigma},
      {"period_len", c.period_len},
      {"k", c.k},
      {"d", c.d},
      {"n", r.instance.hidden.size()},
      {"n_known", c.n_known},
      {"seed", c.seed},
      {"budget", r.budget},
      {"force", c.force},
      {"calibration", calibration::kVersion},
  };
  ordered_json instance{{"alphabet", r.instance.alphabet.letters()}, {"hidden", r.instance.hidden}};
  if (r.instance.period)
    instance["period"] = {{"p", r.instance.period->p}, {"k", r.instance.period->k}, {"p_prime", r.instance.period->p_prime}};
  if (!r.instance.origin.empty()) {
    instance["origin"] = r.instance.origin;
    instance["corrupted_positions"] = r.instance.corrupted_positions;
  }
  const auto& q = r.report.queries;
  ordered_json queries{{"substr", q.substr}, {"subseq", q.subseq}, {"jie", q.jie},
                       {"aji", q.aji},       {"rji", q.rji},       {"total", q.total()}};
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : r.report.verdicts)
    verdicts.push_back({{"name", v.name},
                        {"expression", v.expression},
                        {"bound", v.bound},
                        {"measured", v.measured},
                        {"pass", v.pass},
                        {"kind", v.kind},
                        {"enforced", v.enforced}});
  ordered_json out{{"config", config},   {"instance", instance},     {"algorithm", r.report.algorithm},
                   {"output", r.report.output}, {"completed", r.report.completed}, {"exact", r.exact},
                   {"queries", queries}, {"verdicts", verdicts},     {"bounds_pass", r.bounds_ok()}};
  if (!r.report.failure.empty()) out["failure"] = r.report.failure;
  ordered_json metrics = ordered_json::object();
  for (const auto& [k, v] : r.report.metrics) metrics[k] = v;
  out["metrics"] = metrics;
  if (include_wall_time) out["wall_time_ms"] = r.wall_ms;
  return out;
}

std::string csv_header() { return "algo,sigma,period_len,k,d,n,seed,q_substr,q_subseq,q_jie,q_aji,q_rji,bound,pass"; }

std::string csv_row(const ExperimentResult& r) {
  const auto& c = r.config;
  const auto& q = r.report.queries;
  std::ostringstream out;
  out << to_string(c.algorithm) << ',' << r.instance.alphabet.size() << ','
      << (r.instance.period ? r.instance.period->p.size() : 0) << ',' << (r.instance.period ? r.instance.period->k : 0)
      << ',' << c.d << ',' << r.instance.hidden.size() << ',' << c.seed << ',' << q.substr << ',' << q.subseq << ','
      << q.jie << ',' << q.aji << ',' << q.rji << ',' << r.headline_bound() << ','
      << ((r.exact && r.bounds_ok()) ? "true" : "false");
  return out.str();
}

int exit_code(const std::vector<ExperimentResult>& results) {
  int code = 0;
  for (const auto& r : results) {
    if (!r.exact) return 2;
    if (!r.bounds_ok()) code = 1;
  }
  return code;
}

}  // namespace strrecon::harness
