#include "strrecon/harness/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>

#include "strrecon/errors.hpp"

namespace strrecon::harness {

namespace {

auto key_of(const ExperimentConfig& c) {
  return std::make_tuple(static_cast<int>(c.algorithm), c.sigma, c.period_len, c.k, c.d, c.n.value_or(0), c.seed);
}

}  // namespace

std::vector<ExperimentConfig> expand_grid(const GridSpec& g) {
  std::vector<ExperimentConfig> out;
  for (Algorithm a : g.algorithms) {
    const Family family = family_of(a);
    const std::vector<std::size_t> no_values{0};
    // Axes that do not affect a family collapse to a single value.
    const auto& lens = family == Family::random && !g.ns.empty() ? no_values : g.period_lens;
    const auto& ks = family == Family::random && !g.ns.empty() ? no_values : g.ks;
    const auto& ds = family == Family::corrupted ? g.ds : no_values;
    const std::vector<std::size_t> ns_or_none = family == Family::random && !g.ns.empty() ? g.ns : no_values;
    for (std::size_t sigma : g.sigmas)
      for (std::size_t len : lens)
        for (std::size_t k : ks)
          for (std::size_t d : ds)
            for (std::size_t n : ns_or_none)
              for (std::uint64_t seed : g.seeds) {
                ExperimentConfig c;
                c.algorithm = a;
                c.sigma = sigma;
                c.period_len = len;
                c.k = k;
                c.d = d;
                if (family == Family::random && !g.ns.empty()) c.n = n;
                c.n_known = g.n_known && accepts_known_n(a);
                c.seed = seed;
                c.budget = g.budget;
                c.force = g.force;
                c.constants = g.constants;
                out.push_back(std::move(c));
              }
  }
  return out;
}

SweepResult sweep(const GridSpec& grid) {
  auto configs = expand_grid(grid);
  std::vector<std::optional<ExperimentResult>> slots(configs.size());
  std::vector<std::string> errors(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < configs.size();) {
      try {
        slots[i] = run_experiment(configs[i]);
      } catch (const ConfigError& e) {
        errors[i] = e.what();
      }
    }
  };
  unsigned threads = grid.threads ? grid.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(configs.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SweepResult result;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    if (!slots[i]) {
      if (!grid.skip_invalid) throw ConfigError(errors[i]);
      ++result.skipped;
      continue;
    }
    result.runs.push_back(std::move(*slots[i]));
  }
  std::stable_sort(result.runs.begin(), result.runs.end(),
                   [](const ExperimentResult& a, const ExperimentResult& b) { return key_of(a.config) < key_of(b.config); });
  for (const auto& r : result.runs) {
    auto& s = result.summary[to_string(r.config.algorithm)];
    ++s.runs;
    s.exact += r.exact;
    s.bounds_pass += r.bounds_ok();
    s.max_queries = std::max(s.max_queries, r.report.queries.total());
  }
  return result;
}

std::vector<GrowthPoint> growth_deltas(const std::vector<ExperimentResult>& runs, Algorithm algorithm) {
  std::map<std::tuple<std::size_t, std::string, std::string, std::uint64_t>, std::map<std::size_t, const ExperimentResult*>>
      series;
  for (const auto& r : runs) {
    if (r.config.algorithm != algorithm || !r.instance.period) continue;
    const auto& p = *r.instance.period;
    series[{r.instance.alphabet.size(), p.p, p.p_prime, r.config.seed}][p.k] = &r;
  }
  std::vector<GrowthPoint> out;
  for (const auto& [key, by_k] : series) {
    for (const auto& [k, small] : by_k) {
      auto it = by_k.find(2 * k);
      if (it == by_k.end()) continue;
      GrowthPoint g;
      g.sigma = std::get<0>(key);
      g.period = std::get<1>(key);
      g.seed = std::get<3>(key);
      g.n_small = small->instance.hidden.size();
      g.n_large = it->second->instance.hidden.size();
      g.delta = static_cast<long long>(it->second->report.queries.total()) -
                static_cast<long long>(small->report.queries.total());
      out.push_back(std::move(g));
    }
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<ExperimentResult>& runs) {
  out << csv_header() << '\n';
  for (const auto& r : runs) out << csv_row(r) << '\n';
}

nlohmann::ordered_json sweep_json(const SweepResult& result, bool include_wall_time) {
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const auto& [name, s] : result.summary)
    summary[name] = {{"runs", s.runs}, {"exact", s.exact}, {"bounds_pass", s.bounds_pass}, {"max_queries", s.max_queries}};
  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  for (const auto& r : result.runs) runs.push_back(to_json(r, include_wall_time));
  return {{"summary", summary}, {"skipped", result.skipped}, {"runs", runs}};
}

}  // namespace strrecon::harness
