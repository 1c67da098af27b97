// Copyright 2026 The randmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "randmeas/correlations.hpp"
#include "randmeas/criteria.hpp"
#include "randmeas/io.hpp"
#include "randmeas/moments.hpp"
#include "randmeas/sampling.hpp"

namespace randmeas::cli {
namespace {

constexpr const char* kToolName = "randmeas";
constexpr int kExitInputError = 1;
constexpr int kExitCrossCheck = 3;
constexpr const char* kSeedEnv = "RANDMEAS_SEED";
constexpr int kBootstrapResamples = 1000;
constexpr double kExactAgreement = 1e-12;
constexpr double kHalfDesignAgreement = 1e-13;
constexpr double kMonteCarloSigmas = 4.0;

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
    std::uint64_t v = 0;
    const std::string s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && ptr == s.data() + s.size()) return v;
    throw std::invalid_argument(std::string(kSeedEnv) + " is not an unsigned integer: '" + s + "'");
  }
  return 1;
}

struct RawArgs {
  std::string state = "bell";
  std::string orders = "2";
};

void add_options(CLI::App& sub, RunConfig& c, RawArgs& raw) {
  sub.add_option("--state", raw.state, "state spec kind[:param[,param]]; " + state_grammar_help());
  sub.add_option("--subset", c.subset, "parties: 'full', 'all' or a comma list such as 1,2");
  sub.add_option("--samples", c.samples, "Monte-Carlo samples, or measurement settings with --shots");
  sub.add_option("--shots", c.shots, "shots per setting (0 = exact expectation values)");
  sub.add_option("--design", c.design, "spherical design order for moments (0 = Haar Monte Carlo)");
  sub.add_flag("--half", c.half_design, "use one design point per antipodal pair (even orders)");
  sub.add_option("--orders", raw.orders, "comma list of moment orders");
  sub.add_option("--seed", c.seed, std::string("random seed (default from ") + kSeedEnv + ", else 1)");
  sub.add_option("--out", c.out, "output path prefix");
  sub.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub.add_option("--test", c.test, "criterion: gme4, wclass, bisep3 or length");
  sub.add_flag("--structure", c.structure, "report M tests for every marginal");
  sub.add_flag("--bootstrap", c.bootstrap, "bootstrap Monte-Carlo standard errors (1000 resamples)");
  sub.add_option("--z", c.z, "detection threshold in standard errors for statistical inputs");
  sub.add_option("--bins", c.bins, "histogram bins");
  sub.add_option("--order", c.order, "design order for the design command");
}

struct Parser {
  CLI::App app{"Random-measurement moments and entanglement criteria", kToolName};
  RunConfig config;
  RawArgs raw;

  Parser() {
    app.require_subcommand(1);
    config.seed = default_seed();
    const std::pair<const char*, const char*> commands[] = {
        {"sample", "sample the distribution of correlations and write histograms"},
        {"moments", "compute moments of the correlation distribution"},
        {"criteria", "evaluate entanglement criteria"},
        {"design", "export and validate a spherical design"},
    };
    for (const auto& [name, help] : commands) add_options(*app.add_subcommand(name, help), config, raw);
  }

  // CLI11 expects the arguments in reverse order.
  void parse(const std::vector<std::string>& args) {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    config.command = app.get_subcommands().front()->get_name();
    config.state = parse_state_spec(raw.state);
    config.orders = parse_int_list(raw.orders, "order list");
  }
};

std::vector<Parties> resolve_subsets(const std::string& text, int n) {
  const Parties full = Parties::full(n);
  if (text == "full") return {full};
  if (text == "all") return nonempty_subsets(full);
  const Parties p = Parties::parse(text);
  if (p.max_label() > n) {
    throw std::invalid_argument("subset {" + p.to_string() + "} refers to parties beyond n = " +
                                std::to_string(n));
  }
  return {p};
}

nlohmann::json envelope(const RunConfig& config) {
  nlohmann::json j;
  j["tool"] = kToolName;
  j["version"] = RANDMEAS_VERSION;
  j["config"] = config.to_json();
  return j;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << contents;
}

int cmd_sample(const RunConfig& c, std::ostream& out) {
  if (c.samples < 1) throw std::invalid_argument("sample needs --samples M with M >= 1");
  const DensityMatrix rho = make_state(c.state);
  const auto subsets = resolve_subsets(c.subset, rho.n_qubits());
  if (subsets.size() != 1) throw std::invalid_argument("sample takes a single subset");
  const Parties subset = subsets.front();
  const SampleSet samples = sample_distribution(rho, subset, c.samples, RngStream(c.seed));
  const Histogram hist = make_histogram(samples.values, c.bins);
  const std::string prefix = c.out.empty() ? "sample" : c.out;

  std::ostringstream samples_csv, hist_csv;
  write_samples_csv(samples_csv, samples);
  write_histogram_csv(hist_csv, hist);
  write_file(prefix + ".samples.csv", samples_csv.str());
  write_file(prefix + ".hist.csv", hist_csv.str());

  nlohmann::json meta = envelope(c);
  meta["state"] = to_string(c.state);
  meta["subset"] = to_json(subset);
  meta["M"] = c.samples;
  meta["seed"] = c.seed;
  meta["files"] = {{"samples", prefix + ".samples.csv"}, {"histogram", prefix + ".hist.csv"}};
  const auto reference = subset.size() == 2 && rho.n_qubits() == 2
                             ? reference_density_for(c.state)
                             : std::nullopt;
  if (reference) {
    std::ostringstream ref_csv;
    write_reference_csv(ref_csv, *reference);
    write_file(prefix + ".reference.csv", ref_csv.str());
    meta["files"]["reference"] = prefix + ".reference.csv";
    meta["reference_density"] = reference->name();
  }
  const std::string text = meta.dump(2) + "\n";
  write_file(prefix + ".json", text);
  out << text;
  return 0;
}

struct CrossCheck {
  Parties subset;
  int t = 0;
  std::string reference_method;
  double reference = 0.0;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

nlohmann::json to_json(const CrossCheck& x) {
  return {{"subset", randmeas::to_json(x.subset)},
          {"t", x.t},
          {"reference_method", x.reference_method},
          {"reference", x.reference},
          {"value", x.value},
          {"deviation", std::abs(x.value - x.reference)},
          {"tolerance", x.tolerance},
          {"pass", x.pass}};
}

CrossCheck compare(const MomentEstimate& est, double reference, const std::string& ref_method,
                   double exact_tolerance) {
  CrossCheck x;
  x.subset = est.subset;
  x.t = est.order;
  x.reference_method = ref_method;
  x.reference = reference;
  x.value = est.value;
  x.tolerance = est.std_error ? std::max(kMonteCarloSigmas * *est.std_error, exact_tolerance)
                              : exact_tolerance;
  x.pass = std::abs(est.value - reference) <= x.tolerance;
  return x;
}

int cmd_moments(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.orders.empty()) throw std::invalid_argument("no moment orders requested");
  for (int t : c.orders) {
    if (t < 1) throw std::invalid_argument("moment orders must be >= 1");
  }
  const int max_t = *std::max_element(c.orders.begin(), c.orders.end());
  const DensityMatrix rho = make_state(c.state);
  const int n = rho.n_qubits();
  const auto subsets = resolve_subsets(c.subset, n);
  const RngStream root(c.seed);

  std::optional<SphericalDesign> design;
  if (c.shots == 0 && c.design > 0) {
    design = design_points(c.design);
    if (design->degree < max_t) {
      throw std::invalid_argument("design order insufficient: design " + std::to_string(c.design) +
                                  " cannot reproduce moment order " + std::to_string(max_t));
    }
  }
  if (c.shots > 0 && c.samples < 1) {
    throw std::invalid_argument("--shots needs --samples M >= 1 measurement settings");
  }
  if (c.shots == 0 && c.design == 0 && c.samples == 0 && max_t != 2) {
    throw std::invalid_argument("exact tensor mode supports order 2 only; use --design or --samples");
  }
  if (c.shots == 0 && c.design == 0 && c.samples == 1) {
    throw std::invalid_argument("Monte-Carlo moments need --samples >= 2");
  }

  std::vector<MomentEstimate> estimates;
  std::vector<CrossCheck> checks;
  std::vector<std::pair<Parties, std::string>> shot_files;
  const bool check_oracles = n <= 4 && c.shots == 0;
  std::optional<SphericalDesign> oracle_design;
  if (check_oracles) oracle_design = design_points(5);

  for (Parties subset : subsets) {
    const RngStream stream = root.split(subset.mask());
    std::optional<SampleSet> samples;
    std::optional<ShotTable> shots;
    if (c.shots > 0) {
      const auto settings = random_settings(subset.size(), c.samples, stream.split(0));
      shots = simulate_shots(rho, subset, settings, c.shots, stream.split(1));
      if (!c.out.empty()) {
        std::ostringstream csv;
        write_shots_csv(csv, *shots);
        const std::string path = c.out + ".shots." + std::to_string(subset.mask()) + ".csv";
        write_file(path, csv.str());
        shot_files.emplace_back(subset, path);
      }
    } else if (!design && c.samples > 0) {
      samples = sample_distribution(rho, subset, c.samples, stream);
    }

    for (int t : c.orders) {
      MomentEstimate est;
      if (shots) {
        est = estimate_moment_from_shots(*shots, t);
      } else if (design) {
        est = (c.half_design && t % 2 == 0) ? moment_design_half(rho, subset, t, *design)
                                            : moment_design(rho, subset, t, *design);
      } else if (samples) {
        est = moment_mc(*samples, t);
        if (c.bootstrap) {
          est.std_error = bootstrap_std_error(*samples, t, kBootstrapResamples, stream.split(2));
        }
      } else {
        est = moment_exact_t2(correlation_tensor(rho, subset));
      }
      estimates.push_back(est);

      if (!check_oracles) continue;
      if (t == 2) {
        const double exact = moment_exact_t2(correlation_tensor(rho, subset)).value;
        if (est.method != MomentMethod::kExactTensor) {
          checks.push_back(compare(est, exact, "exact_tensor", kExactAgreement));
        }
      } else if (est.method == MomentMethod::kMonteCarlo && t <= oracle_design->degree) {
        const double ref = moment_design(rho, subset, t, *oracle_design).value;
        checks.push_back(compare(est, ref, "design", kExactAgreement));
      }
      if (est.method == MomentMethod::kDesign && t % 2 == 0) {
        const double ref = c.half_design ? moment_design(rho, subset, t, *design).value
                                         : moment_design_half(rho, subset, t, *design).value;
        checks.push_back(compare(est, ref, c.half_design ? "design_full" : "design_half",
                                 kHalfDesignAgreement));
      }
    }
  }

  const bool all_pass = std::all_of(checks.begin(), checks.end(), [](const auto& x) { return x.pass; });
  std::string text;
  if (c.format == "csv") {
    std::ostringstream csv;
    csv << "subset,t,value,std_error,method\n";
    for (const auto& e : estimates) {
      csv << '"' << e.subset.to_string() << "\"," << e.order << ',' << format_csv_number(e.value)
          << ',' << (e.std_error ? format_csv_number(*e.std_error) : "") << ','
          << to_string(e.method) << '\n';
    }
    text = csv.str();
  } else {
    nlohmann::json j = envelope(c);
    j["moments"] = nlohmann::json::array();
    for (const auto& e : estimates) j["moments"].push_back(randmeas::to_json(e));
    j["cross_checks"] = nlohmann::json::array();
    for (const auto& x : checks) j["cross_checks"].push_back(to_json(x));
    j["cross_checks_pass"] = all_pass;
    if (!shot_files.empty()) {
      j["shot_files"] = nlohmann::json::array();
      for (const auto& [subset, path] : shot_files) {
        j["shot_files"].push_back({{"subset", randmeas::to_json(subset)}, {"path", path}});
      }
    }
    text = j.dump(2) + "\n";
  }
  if (!c.out.empty()) write_file(c.out + "." + c.format, text);
  out << text;
  if (!all_pass) {
    err << "error: internal oracle cross-check failed\n";
    return kExitCrossCheck;
  }
  return 0;
}

int cmd_criteria(const RunConfig& c, std::ostream& out) {
  if (c.test.empty() && !c.structure) {
    throw std::invalid_argument("criteria needs --test (gme4, wclass, bisep3, length) and/or --structure");
  }
  const DensityMatrix rho = make_state(c.state);
  const int n = rho.n_qubits();
  const Parties full = Parties::full(n);
  const RngStream root(c.seed);
  const bool statistical = c.samples > 0;
  if (c.samples == 1) throw std::invalid_argument("statistical criteria need --samples >= 2");

  CriteriaConfig config;
  config.z = c.z;
  const MomentTable moments = statistical ? monte_carlo_moment_table(rho, 2, c.samples, root)
                                          : exact_moment_table(rho);

  std::vector<Verdict> verdicts;
  if (!c.test.empty()) {
    if (c.test == "gme4") {
      if (n != 4) {
        throw std::invalid_argument("criterion gme4 applies to 4 qubits; state has " + std::to_string(n));
      }
      verdicts.push_back(gme_test_4(moments, statistical ? std::nullopt
                                                         : std::optional<double>(purity_direct(rho)),
                                    config));
    } else if (c.test == "wclass") {
      if (n < 3) {
        throw std::invalid_argument("criterion wclass needs n >= 3 qubits; state has " + std::to_string(n));
      }
      verdicts.push_back(w_class_witness(moments.at(full), n, config));
    } else if (c.test == "bisep3") {
      if (n != 3) {
        throw std::invalid_argument("criterion bisep3 applies to 3 qubits; state has " + std::to_string(n));
      }
      const MomentEstimate r4 =
          statistical ? moment_mc(sample_distribution(rho, full, c.samples, root.split(1u << 20)), 4)
                      : moment_design(rho, full, 4, design_points(5));
      verdicts.push_back(bisep_line_3(moments.at(full), r4, config));
    } else if (c.test == "length") {
      const auto& m = moments.at(full);
      const double scale = std::pow(3.0, n);
      std::optional<double> error;
      if (m.std_error) error = scale * *m.std_error;
      verdicts.push_back(entanglement_by_length(scale * m.value, n, error, config));
    } else {
      throw std::invalid_argument("unknown criterion '" + c.test + "'; valid: gme4, wclass, bisep3, length");
    }
  }

  nlohmann::json j = envelope(c);
  j["verdicts"] = nlohmann::json::array();
  for (const auto& v : verdicts) j["verdicts"].push_back(randmeas::to_json(v));
  if (c.structure) {
    StructureReport report;
    if (statistical) {
      report = structure_report(moments, {}, config);
    } else {
      report = structure_report(rho, config);
    }
    j["structure"] = randmeas::to_json(report);
  }
  const std::string text = j.dump(2) + "\n";
  if (!c.out.empty()) write_file(c.out + ".json", text);
  out << text;
  return 0;
}

int cmd_design(const RunConfig& c, std::ostream& out) {
  const SphericalDesign design = design_points(c.order);
  const DesignReport report = validate_design(design, c.order);
  const std::string prefix = c.out.empty() ? "design" + std::to_string(c.order) : c.out;
  std::ostringstream csv;
  write_design_csv(csv, design);
  write_file(prefix + ".csv", csv.str());
  nlohmann::json j = envelope(c);
  j["points"] = design.points.size();
  j["validation"] = randmeas::to_json(report);
  j["files"] = {{"points", prefix + ".csv"}};
  const std::string text = j.dump(2) + "\n";
  write_file(prefix + ".json", text);
  out << text;
  return report.pass ? 0 : kExitCrossCheck;
}

}  // namespace

nlohmann::json RunConfig::to_json() const {
  return {{"command", command},     {"state", randmeas::to_string(state)},
          {"subset", subset},       {"samples", samples},
          {"shots", shots},         {"design", design},
          {"half", half_design},    {"orders", orders},
          {"seed", seed},           {"out", out},
          {"format", format},       {"test", test},
          {"structure", structure}, {"bootstrap", bootstrap},
          {"z", z},                 {"bins", bins},
          {"order", order}};
}

RunConfig parse_run_config(const std::vector<std::string>& args) {
  Parser parser;
  try {
    parser.parse(args);
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }
  return parser.config;
}

std::vector<std::string> render_run_config(const RunConfig& c) {
  std::vector<std::string> args = {c.command,
                                   "--state", randmeas::to_string(c.state),
                                   "--subset", c.subset,
                                   "--samples", std::to_string(c.samples),
                                   "--shots", std::to_string(c.shots),
                                   "--design", std::to_string(c.design),
                                   "--orders", join_ints(c.orders),
                                   "--seed", std::to_string(c.seed),
                                   "--format", c.format,
                                   "--z", shortest(c.z),
                                   "--bins", std::to_string(c.bins),
                                   "--order", std::to_string(c.order)};
  if (c.half_design) args.push_back("--half");
  if (!c.out.empty()) {
    args.push_back("--out");
    args.push_back(c.out);
  }
  if (!c.test.empty()) {
    args.push_back("--test");
    args.push_back(c.test);
  }
  if (c.structure) args.push_back("--structure");
  if (c.bootstrap) args.push_back("--bootstrap");
  return args;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<Parser> parser;
  try {
    parser.emplace();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  try {
    parser->parse(args);
  } catch (const CLI::ParseError& e) {
    return parser->app.exit(e, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  const RunConfig& c = parser->config;
  try {
    if (c.command == "sample") return cmd_sample(c, out);
    if (c.command == "moments") return cmd_moments(c, out, err);
    if (c.command == "criteria") return cmd_criteria(c, out);
    if (c.command == "design") return cmd_design(c, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: unknown command\n";
  return kExitInputError;
}

}  // namespace randmeas::cli
