#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "strrecon/errors.hpp"
#include "strrecon/harness/experiment.hpp"
#include "strrecon/harness/sweep.hpp"
#include "strrecon/harness/transcript_verify.hpp"
#include "strrecon/jumbled.hpp"

namespace {

using namespace strrecon;
using namespace strrecon::harness;
using nlohmann::ordered_json;

constexpr int kExitConfig = 3;

// Reads a JSON object as CLI11 config items. Top-level keys go to the
// subcommand on the command line; nested objects address a subcommand
// explicitly ({"sweep": {"k": "2..64"}}); arrays become repeated values.
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* root) : root_(root) {}

  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    nlohmann::json j;
    for (const CLI::Option* opt : app->get_options()) {
      if (opt->get_lnames().empty() || opt->get_configurable() == false) continue;
      const std::string name = opt->get_lnames().front();
      if (opt->count() > 0) {
        const auto& res = opt->results();
        if (res.size() == 1) j[name] = res.front();
        else j[name] = res;
      } else if (default_also && !opt->get_default_str().empty()) {
        j[name] = opt->get_default_str();
      }
    }
    return j.dump(2);
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    try {
      input >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError(std::string("config file is not valid JSON: ") + e.what());
    }
    std::vector<CLI::ConfigItem> items;
    std::vector<std::string> parents;
    // Config files are read after the command line, so the subcommand is known.
    if (const auto subs = root_->get_subcommands(); !subs.empty()) parents.push_back(subs.front()->get_name());
    walk(j, parents, items);
    return items;
  }

 private:
  const CLI::App* root_;

  static std::string scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

  static void walk(const nlohmann::json& j, std::vector<std::string> parents, std::vector<CLI::ConfigItem>& items) {
    if (!j.is_object()) throw CLI::ConversionError("config file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        // Nested objects name their subcommand from the root.
        std::vector<std::string> deeper{key};
        walk(value, deeper, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array())
        for (const auto& v : value) item.inputs.push_back(scalar(v));
      else
        item.inputs.push_back(scalar(value));
      items.push_back(std::move(item));
    }
  }
};

std::uint64_t env_seed() {
  const char* s = std::getenv("STRRECON_SEED");
  if (!s || !*s) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("STRRECON_SEED is not an unsigned integer: ") + s);
  }
}

std::uint64_t parse_uint(const std::string& s) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || s.front() == '-') throw ConfigError("not an unsigned integer: \"" + s + "\"");
  return v;
}

// "4", "1..32" (step 1), "2..1024*2" (geometric), and comma lists of those.
std::vector<std::uint64_t> parse_values(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    if (part.empty()) continue;
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_uint(part));
      continue;
    }
    const auto lo = parse_uint(part.substr(0, dots));
    std::string rest = part.substr(dots + 2);
    std::uint64_t factor = 0;
    if (const auto star = rest.find('*'); star != std::string::npos) {
      factor = parse_uint(rest.substr(star + 1));
      rest = rest.substr(0, star);
      if (factor < 2 || lo == 0) throw ConfigError("geometric range \"" + part + "\" needs start >= 1 and factor >= 2");
    }
    const auto hi = parse_uint(rest);
    if (hi < lo) throw ConfigError("empty range \"" + part + "\"");
    for (std::uint64_t v = lo; v <= hi; v = factor ? v * factor : v + 1) out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty value list \"" + text + "\"");
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  auto v = parse_values(text);
  return {v.begin(), v.end()};
}

std::vector<Algorithm> parse_algorithms(const std::string& text) {
  if (text == "all") return all_algorithms();
  std::vector<Algorithm> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');)
    if (!part.empty()) out.push_back(algorithm_from_string(part));
  if (out.empty()) throw ConfigError("no algorithm given");
  return out;
}

// Writes to --out when given, stdout otherwise.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

struct RunFlags {
  std::string algo = "known-n-simple";
  std::size_t sigma = 2;
  std::size_t period_len = 2;
  std::size_t k = 4;
  std::size_t d = 0;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  bool force = false;
  bool n_known = false;
  std::optional<std::string> hidden;
  std::string out;
  std::string format = "json";
  std::string transcript;
  bool wall_time = false;
};

void add_instance_flags(CLI::App* app, RunFlags& f) {
  app->add_option("--algo", f.algo, "Algorithm id")
      ->check(CLI::IsMember([] {
        std::vector<std::string> ids;
        for (auto a : all_algorithms()) ids.emplace_back(to_string(a));
        return ids;
      }()))
      ->capture_default_str();
  app->add_option("--sigma", f.sigma, "Alphabet size (letters a, b, ...)")->capture_default_str();
  app->add_option("--period-len", f.period_len, "Length of the smallest period")->capture_default_str();
  app->add_option("--k", f.k, "Number of full period repetitions")->capture_default_str();
  app->add_option("--d", f.d, "Number of corrupted positions")->capture_default_str();
  app->add_option("--n", f.n, "Length of random instances");
  app->add_option("--seed", f.seed, "Seed (default: $STRRECON_SEED or 0)");
  app->add_flag("--force", f.force, "Allow d above the default corruption cap");
}

ExperimentConfig to_config(const RunFlags& f) {
  ExperimentConfig c;
  c.algorithm = algorithm_from_string(f.algo);
  c.sigma = f.sigma;
  c.period_len = f.period_len;
  c.k = f.k;
  c.d = f.d;
  c.n = f.n;
  c.n_known = f.n_known;
  c.seed = f.seed ? *f.seed : env_seed();
  c.budget = f.budget;
  c.force = f.force;
  c.hidden = f.hidden;
  c.record_transcript = !f.transcript.empty();
  return c;
}

int cmd_generate(const RunFlags& f) {
  const auto config = to_config(f);
  const auto inst = make_instance(config);
  ordered_json j{{"algo", f.algo}, {"seed", config.seed}, {"alphabet", inst.alphabet.letters()}, {"hidden", inst.hidden}};
  if (inst.period) j["period"] = {{"p", inst.period->p}, {"k", inst.period->k}, {"p_prime", inst.period->p_prime}};
  if (!inst.origin.empty()) {
    j["origin"] = inst.origin;
    j["corrupted_positions"] = inst.corrupted_positions;
  }
  emit(f.out, j.dump(2) + "\n");
  return 0;
}

int cmd_run(const RunFlags& f) {
  const auto result = run_experiment(to_config(f));
  if (!f.transcript.empty()) {
    std::ofstream t(f.transcript);
    if (!t) throw ConfigError("cannot write " + f.transcript);
    write_transcript(t, result.instance.alphabet, result.transcript);
  }
  if (f.format == "csv") {
    emit(f.out, csv_header() + "\n" + csv_row(result) + "\n");
  } else {
    auto j = to_json(result, f.wall_time);
    if (!f.transcript.empty()) j["transcript"] = f.transcript;
    emit(f.out, j.dump(2) + "\n");
  }
  return exit_code({result});
}

struct SweepFlags {
  std::string algo = "all";
  std::string sigma = "2";
  std::string period_len = "2";
  std::string k = "4";
  std::string d = "0";
  std::string n;
  std::string seeds = "0..4";
  std::optional<std::uint64_t> budget;
  bool force = false;
  bool n_known = false;
  unsigned threads = 0;
  std::string out;
  std::string format = "csv";
  std::string growth;
  bool wall_time = false;
};

int cmd_sweep(const SweepFlags& f) {
  GridSpec g;
  g.algorithms = parse_algorithms(f.algo);
  g.sigmas = parse_sizes(f.sigma);
  g.period_lens = parse_sizes(f.period_len);
  g.ks = parse_sizes(f.k);
  g.ds = parse_sizes(f.d);
  if (!f.n.empty()) g.ns = parse_sizes(f.n);
  g.seeds = parse_values(f.seeds);
  g.budget = f.budget;
  g.force = f.force;
  g.n_known = f.n_known;
  g.threads = f.threads;
  const auto result = sweep(g);

  if (f.format == "csv") {
    std::ostringstream out;
    write_csv(out, result.runs);
    emit(f.out, out.str());
  } else {
    emit(f.out, sweep_json(result, f.wall_time).dump(2) + "\n");
  }
  for (const auto& [name, s] : result.summary)
    std::cerr << name << ": " << s.runs << " runs, " << s.exact << " exact, " << s.bounds_pass
              << " within bounds, max queries " << s.max_queries << '\n';
  if (result.skipped) std::cerr << result.skipped << " grid points skipped (precondition not met)\n";

  if (!f.growth.empty()) {
    std::ofstream out(f.growth);
    if (!out) throw ConfigError("cannot write " + f.growth);
    out << "algo,sigma,period,seed,n_small,n_large,delta\n";
    for (Algorithm a : g.algorithms)
      for (const auto& p : growth_deltas(result.runs, a))
        out << to_string(a) << ',' << p.sigma << ',' << p.period << ',' << p.seed << ',' << p.n_small << ','
            << p.n_large << ',' << p.delta << '\n';
  }
  return exit_code(result.runs);
}

int cmd_verify_aji(const std::vector<std::size_t>& bs, const std::string& certificate) {
  bool all = true;
  std::ofstream cert;
  if (!certificate.empty()) {
    cert.open(certificate);
    if (!cert) throw ConfigError("cannot write " + certificate);
  }
  for (std::size_t b : bs) {
    const auto pair = jumbled::build_indistinguishable_pair(b);
    const auto verdict = jumbled::verify_aji_indistinguishable(Alphabet("01"), pair.s1, pair.s2);
    std::cout << "b=" << b << " s1=" << pair.s1 << " s2=" << pair.s2 << " queries=" << verdict.entries.size()
              << " indistinguishable=" << (verdict.indistinguishable ? "true" : "false");
    if (verdict.first_distinguishing) std::cout << " distinguished_by=" << format_parikh(*verdict.first_distinguishing);
    std::cout << '\n';
    if (cert) {
      cert << "# b=" << b << ' ' << pair.s1 << ' ' << pair.s2 << '\n';
      jumbled::write_certificate(cert, verdict);
    }
    all = all && verdict.indistinguishable;
  }
  return all ? 0 : 1;
}

int cmd_verify_transcript(const std::string& file, std::size_t n, const std::string& promise_name, std::size_t d,
                          std::optional<std::size_t> sigma) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot read " + file);
  std::optional<Alphabet> alphabet;
  const auto records = read_transcript(in, &alphabet);
  if (!alphabet && !sigma) throw ConfigError("transcript has no #alphabet header; pass --sigma");
  const Alphabet a = sigma ? Alphabet::first(*sigma) : *alphabet;
  const auto result = verify_transcript_uniqueness(records, a, n, promise_from_string(promise_name), d);
  ordered_json j{{"records", records.size()},
                 {"n", n},
                 {"promise", promise_name},
                 {"consistent", result.consistent},
                 {"unique", result.unique},
                 {"witnesses", result.witnesses}};
  std::cout << j.dump(2) << '\n';
  return result.unique ? 0 : 1;
}

int cmd_coupon(std::size_t n_i, std::size_t big_n, double beta, std::size_t trials, std::uint64_t seed) {
  const double rate = jumbled::coupon_tail_bound_trial(n_i, big_n, beta, trials, seed);
  const double bound = static_cast<double>(n_i) / std::pow(static_cast<double>(big_n), beta);
  const double stderr_ = std::sqrt(std::max(bound * (1 - bound), 1e-12) / static_cast<double>(trials));
  const bool pass = rate <= bound + 3 * stderr_;
  ordered_json j{{"n_i", n_i},         {"N", big_n},           {"beta", beta},           {"trials", trials},
                 {"seed", seed},       {"exceedance", rate},   {"bound", bound},         {"std_error", stderr_},
                 {"pass", pass}};
  std::cout << j.dump(2) << '\n';
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query-based string reconstruction: run reconstructors against metered oracles"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<JsonConfig>(&app));
  app.set_config("--config", "", "JSON file with option values; command-line flags override it");

  RunFlags gen;
  auto* generate = app.add_subcommand("generate", "Print the hidden instance an experiment would use");
  add_instance_flags(generate, gen);
  generate->add_option("--out", gen.out, "Output path (default stdout)");

  RunFlags run;
  auto* run_cmd = app.add_subcommand("run", "Run one reconstruction and report queries and bound verdicts");
  add_instance_flags(run_cmd, run);
  run_cmd->add_option("--hidden", run.hidden, "Use this hidden string instead of a generated one");
  run_cmd->add_flag("--n-known", run.n_known, "Tell the algorithm n (where supported)");
  run_cmd->add_option("--budget", run.budget, "Total query ceiling (default 4 sigma n + 64)");
  run_cmd->add_option("--format", run.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  run_cmd->add_option("--out", run.out, "Output path (default stdout)");
  run_cmd->add_option("--transcript", run.transcript, "Write the query transcript to this path");
  run_cmd->add_flag("--wall-time", run.wall_time, "Include wall time in the JSON report");

  SweepFlags sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a grid of experiments");
  sweep_cmd->add_option("--algo", sw.algo, "Comma list of algorithm ids, or all")->capture_default_str();
  sweep_cmd->add_option("--sigma", sw.sigma, "Values: 4 | 1..32 | 2..1024*2 | comma list")->capture_default_str();
  sweep_cmd->add_option("--period-len", sw.period_len, "Period lengths")->capture_default_str();
  sweep_cmd->add_option("--k", sw.k, "Repetition counts")->capture_default_str();
  sweep_cmd->add_option("--d", sw.d, "Corruption counts")->capture_default_str();
  sweep_cmd->add_option("--n", sw.n, "Lengths for random-string algorithms (default period-len * k)");
  sweep_cmd->add_option("--seed", sw.seeds, "Seeds")->capture_default_str();
  sweep_cmd->add_option("--budget", sw.budget, "Total query ceiling per run");
  sweep_cmd->add_flag("--force", sw.force, "Allow d above the default corruption cap");
  sweep_cmd->add_flag("--n-known", sw.n_known, "Tell n to the algorithms that accept it");
  sweep_cmd->add_option("--threads", sw.threads, "Worker threads (0: all cores)");
  sweep_cmd->add_option("--format", sw.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sweep_cmd->add_option("--out", sw.out, "Output path (default stdout)");
  sweep_cmd->add_option("--growth", sw.growth, "Write Q(2n) - Q(n) per series to this CSV");
  sweep_cmd->add_flag("--wall-time", sw.wall_time, "Include wall times in the JSON report");

  std::string b_text = "1..6";
  std::string certificate;
  auto* aji_cmd = app.add_subcommand("verify-aji", "Check the adversarial index-oracle indistinguishable pairs");
  aji_cmd->add_option("--b", b_text, "Values of b (e.g. 3 or 1..6)")->capture_default_str();
  aji_cmd->add_option("--certificate", certificate, "Write the per-query certificate to this path");

  std::string transcript_file;
  std::size_t vt_n = 0;
  std::string promise = "any";
  std::size_t vt_d = 0;
  std::optional<std::size_t> vt_sigma;
  auto* vt_cmd = app.add_subcommand("verify-transcript", "Count the strings consistent with a query transcript");
  vt_cmd->add_option("file", transcript_file, "Transcript file")->required();
  vt_cmd->add_option("--n", vt_n, "Hidden length")->required();
  vt_cmd->add_option("--promise", promise, "any | periodic | periodic-k>3 | corrupted")->capture_default_str();
  vt_cmd->add_option("--d", vt_d, "Corruption count for the corrupted promise")->capture_default_str();
  vt_cmd->add_option("--sigma", vt_sigma, "Alphabet size when the transcript has no header");

  std::size_t n_i = 16, big_n = 32, trials = 100000;
  double beta = 2.0;
  std::optional<std::uint64_t> coupon_seed;
  auto* coupon_cmd = app.add_subcommand("coupon-sim", "Simulate the per-window coupon-collector tail");
  coupon_cmd->add_option("--ni", n_i, "Number of windows with the wanted Parikh vector")->capture_default_str();
  coupon_cmd->add_option("--N", big_n, "Length estimate N")->capture_default_str();
  coupon_cmd->add_option("--beta", beta, "Trip multiplier")->capture_default_str();
  coupon_cmd->add_option("--trials", trials, "Number of simulated collections")->capture_default_str();
  coupon_cmd->add_option("--seed", coupon_seed, "Seed (default: $STRRECON_SEED or 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*run_cmd) return cmd_run(run);
    if (*sweep_cmd) return cmd_sweep(sw);
    if (*aji_cmd) return cmd_verify_aji(parse_sizes(b_text), certificate);
    if (*vt_cmd) return cmd_verify_transcript(transcript_file, vt_n, promise, vt_d, vt_sigma);
    if (*coupon_cmd) return cmd_coupon(n_i, big_n, beta, trials, coupon_seed ? *coupon_seed : env_seed());
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const AlphabetError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const TranscriptError& e) {
    std::cerr << "transcript error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return kExitConfig;
}
