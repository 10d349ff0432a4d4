// Copyright 2026 The cmaxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cmax/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "cmax/analytic.hpp"
#include "cmax/model.hpp"
#include "cmax/multimode.hpp"
#include "cmax/output.hpp"
#include "cmax/sideband.hpp"
#include "cmax/sweep.hpp"

namespace cmax::cli {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxPoints = 100'000'000;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Common {
  std::string format;
  std::string out;
  std::string config;
};

void add_common(CLI::App* sub, Common& common, const std::vector<std::string>& formats) {
  sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  sub->add_option("--out", common.out, "Output file (default: standard output)");
  sub->add_option("--config", common.config, "Flat key=value file; command-line flags override it");
}

ordered_json base_metadata(const std::string& command, const Common& common) {
  ordered_json m;
  m["artifact"] = "cmaxlab";
  m["version"] = kVersion;
  m["schema_version"] = io::kSchemaVersion;
  m["command"] = command;
  if (!common.config.empty()) m["config_file"] = common.config;
  return m;
}

std::string render(const io::Envelope& env, const std::string& format) {
  std::ostringstream os;
  io::write(os, env, io::parse_format(format));
  return os.str();
}

void emit(const Common& common, const std::string& document, std::ostream& out) {
  if (common.out.empty() || common.out == "-") {
    out << document << std::flush;
    return;
  }
  std::ofstream file(common.out, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file '" + common.out + "'");
  file << document;
  if (!file.flush()) throw std::runtime_error("write to '" + common.out + "' failed");
}

int sweep_threads() { return threads_from_env(std::getenv(kThreadsEnv)).value_or(0); }

ordered_json method_options_json(const sweep::MethodOptions& o) {
  return ordered_json{{"lindblad_tol", o.lindblad_tol},
                      {"lindblad_dt", o.lindblad_dt},
                      {"modes", o.modes},
                      {"window", o.window}};
}

struct MethodArgs {
  std::string method = "analytic";
  double tol = 1e-10;
  std::size_t modes = 2001;
  double window = 40.0;

  sweep::MethodOptions options() const {
    sweep::MethodOptions o;
    o.lindblad_tol = tol;
    o.modes = modes;
    o.window = window;
    return o;
  }
};

void add_method(CLI::App* sub, MethodArgs& m) {
  sub->add_option("--method", m.method, "Solver")
      ->check(CLI::IsMember({"analytic", "lindblad", "multimode"}))
      ->capture_default_str();
  sub->add_option("--tol", m.tol, "Lindblad local error tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--modes", m.modes, "Multimode bath size")->check(CLI::Range(2UL, kMaxPoints))->capture_default_str();
  sub->add_option("--window", m.window, "Multimode half bandwidth in units of kappa")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

// --- evolve -----------------------------------------------------------------

struct EvolveArgs {
  double xi = 0.0;
  double tau_max = 3.0;
  std::size_t steps = 301;
  MethodArgs method;
  Common common{"csv", "", ""};
};

std::string run_evolve(const EvolveArgs& a) {
  const auto start = Clock::now();
  const auto method = sweep::parse_method(a.method.method);
  const auto options = a.method.options();
  const auto taus = sweep::make_axis(0.0, a.tau_max, a.steps, sweep::Spacing::linear);

  io::Envelope env;
  env.metadata = base_metadata("evolve", a.common);
  env.metadata["config"] = ordered_json{{"xi", a.xi},
                                        {"tau_max", a.tau_max},
                                        {"steps", a.steps},
                                        {"method", a.method.method},
                                        {"method_options", method_options_json(options)},
                                        {"format", a.common.format}};
  auto& table = env.table;

  if (method == sweep::Method::multimode) {
    const auto bath = multimode::sample_bath(ModelParams::from_xi(a.xi), options.modes, options.window);
    env.metadata["recurrence_horizon"] = bath.recurrence_horizon();
    if (a.tau_max > bath.recurrence_horizon()) {
      env.metadata["warning"] = "tau_max exceeds the bath recurrence horizon";
    }
    table.columns = {"tau", "p_e0", "p_g1", "p_g0", "survival", "concurrence", "reservoir_concurrence"};
    for (const auto& s : multimode::evolve(bath, taus)) {
      const double pe = s.qubit_population();
      const double pg = std::norm(multimode::collective_amplitude(bath, s));
      table.rows.push_back({s.tau, pe, pg, 1.0 - pe - pg, pe + pg, multimode::extractable_concurrence(bath, s),
                            multimode::reservoir_concurrence(s)});
    }
  } else {
    const auto rows = sweep::evaluate_row(a.xi, taus, method, options);
    if (method == sweep::Method::analytic) {
      table.columns = {"tau",  "c_re_e0", "c_im_e0", "c_re_g1",  "c_im_g1",
                       "p_e0", "p_g1",    "p_g0",    "survival", "concurrence"};
      const auto params = ModelParams::from_xi(a.xi);
      for (const auto& r : rows) {
        const auto psi = analytic::amplitudes(params, RescaledTime::of(r.tau));
        table.rows.push_back({r.tau, psi.c_e0.real(), psi.c_e0.imag(), psi.c_g1.real(), psi.c_g1.imag(), r.p_e0,
                              r.p_g1, r.p_g0, r.survival, r.concurrence});
      }
    } else {
      table.columns = {"tau", "p_e0", "p_g1", "p_g0", "survival", "concurrence"};
      for (const auto& r : rows) table.rows.push_back({r.tau, r.p_e0, r.p_g1, r.p_g0, r.survival, r.concurrence});
    }
  }
  env.metadata["wall_seconds"] = seconds_since(start);
  return render(env, a.common.format);
}

// --- heatmap ----------------------------------------------------------------

struct HeatmapArgs {
  double xi_min = 0.01;
  double xi_max = 10.0;
  std::size_t xi_steps = 81;
  std::string xi_scale = "log";
  double tau_max = 3.0;
  std::size_t tau_steps = 301;
  MethodArgs method;
  Common common{"csv", "", ""};
};

std::string run_heatmap(const HeatmapArgs& a) {
  if (a.xi_max < a.xi_min) throw UsageError("--xi-max must be >= --xi-min");
  if (a.xi_steps > 1 && !(a.xi_max > a.xi_min)) throw UsageError("--xi-max must exceed --xi-min when --xi-steps > 1");
  if (a.tau_steps > 1 && !(a.tau_max > 0.0)) throw UsageError("--tau-max must be > 0 when --tau-steps > 1");

  sweep::SweepGrid grid;
  grid.xi_spacing = sweep::parse_spacing(a.xi_scale);
  grid.xi_values = sweep::make_axis(a.xi_min, a.xi_max, a.xi_steps, grid.xi_spacing);
  grid.tau_values = sweep::make_axis(0.0, a.tau_max, a.tau_steps, sweep::Spacing::linear);
  grid.method = sweep::parse_method(a.method.method);
  grid.options = a.method.options();

  const auto result = sweep::heatmap(grid, sweep_threads());

  io::Envelope env;
  env.metadata = base_metadata("heatmap", a.common);
  env.metadata["config"] = ordered_json{{"xi_min", a.xi_min},
                                        {"xi_max", a.xi_max},
                                        {"xi_steps", a.xi_steps},
                                        {"xi_scale", a.xi_scale},
                                        {"tau_max", a.tau_max},
                                        {"tau_steps", a.tau_steps},
                                        {"method", a.method.method},
                                        {"method_options", method_options_json(grid.options)},
                                        {"format", a.common.format}};
  env.metadata["order"] = "xi-major";
  env.metadata["row_count"] = result.rows.size();
  env.metadata["threads"] = result.metadata.threads;
  env.metadata["wall_seconds"] = result.metadata.wall_seconds;
  env.table.columns = {"xi", "tau", "concurrence", "p_e0", "p_g1", "p_g0", "survival"};
  env.table.rows.reserve(result.rows.size());
  for (const auto& r : result.rows) {
    env.table.rows.push_back({r.xi, r.tau, r.concurrence, r.p_e0, r.p_g1, r.p_g0, r.survival});
  }
  return render(env, a.common.format);
}

// --- cmax -------------------------------------------------------------------

struct CmaxArgs {
  double xi_min = 0.01;
  double xi_max = 100.0;
  std::size_t steps = 200;
  std::string scale = "log";
  Common common{"csv", "", ""};
};

std::string run_cmax(const CmaxArgs& a) {
  if (a.xi_max < a.xi_min) throw UsageError("--xi-max must be >= --xi-min");
  if (a.steps > 1 && !(a.xi_max > a.xi_min)) throw UsageError("--xi-max must exceed --xi-min when --steps > 1");
  const auto start = Clock::now();
  const auto xs = sweep::make_axis(a.xi_min, a.xi_max, a.steps, sweep::parse_spacing(a.scale));
  const auto curve = sweep::cmax_curve(xs, sweep_threads());

  io::Envelope env;
  env.metadata = base_metadata("cmax", a.common);
  env.metadata["config"] = ordered_json{{"xi_min", a.xi_min},
                                        {"xi_max", a.xi_max},
                                        {"steps", a.steps},
                                        {"scale", a.scale},
                                        {"format", a.common.format}};
  env.metadata["monotone"] = curve.monotone();
  env.metadata["monotonicity_violations"] = curve.monotonicity_violations;
  std::size_t zero_maxima = 0;
  env.table.columns = {"xi", "tau_opt", "c_max", "dcmax_dxi", "source"};
  for (const auto& p : curve.points) {
    if (p.record.zero_maximum) ++zero_maxima;
    env.table.rows.push_back({p.record.xi, p.record.tau_opt.tau, p.record.c_max, p.derivative,
                              analytic::to_string(p.record.source)});
  }
  env.metadata["zero_maximum_count"] = zero_maxima;
  env.metadata["wall_seconds"] = seconds_since(start);
  return render(env, a.common.format);
}

// --- sideband ---------------------------------------------------------------

struct SidebandArgs {
  double g = 0.0;
  double kappa = 0.0;
  int n = 1;
  double nu = 1.0;
  double target_xi = 0.0;
  double epsilon = 0.0;
  double omega_q = 0.0;
  double omega_r = 0.0;
  CLI::Option* target_opt = nullptr;
  CLI::Option* epsilon_opt = nullptr;
  CLI::Option* omega_q_opt = nullptr;
  CLI::Option* omega_r_opt = nullptr;
  Common common{"text", "", ""};
};

std::string run_sideband(const SidebandArgs& a) {
  const bool inverse = a.target_opt->count() > 0;
  if (inverse == (a.epsilon_opt->count() > 0)) throw UsageError("exactly one of --target-xi or --epsilon is required");

  sideband::SidebandConfig cfg;
  cfg.g = a.g;
  cfg.nu = a.nu;
  cfg.n = a.n;
  if (a.omega_q_opt->count() > 0) cfg.omega_q = a.omega_q;
  if (a.omega_r_opt->count() > 0) cfg.omega_r = a.omega_r;
  cfg.epsilon = inverse ? sideband::solve_amplitude(a.g, a.nu, a.n, a.kappa, a.target_xi) : a.epsilon;
  const double lambda = sideband::effective_coupling(cfg);
  const double xi = 4.0 * lambda / a.kappa;
  const double mu = cfg.epsilon / cfg.nu;

  io::Envelope env;
  env.metadata = base_metadata("sideband", a.common);
  ordered_json config{{"g", a.g}, {"kappa", a.kappa}, {"n", a.n}, {"nu", a.nu}};
  if (inverse) {
    config["target_xi"] = a.target_xi;
  } else {
    config["epsilon"] = a.epsilon;
  }
  if (cfg.omega_q) config["omega_q"] = *cfg.omega_q;
  if (cfg.omega_r) config["omega_r"] = *cfg.omega_r;
  config["format"] = a.common.format;
  env.metadata["config"] = config;
  env.metadata["regime_preset"] = xi > 0.0 ? sideband::regime_preset(xi) : 1;
  env.table.columns = {"mode", "epsilon", "mu", "lambda", "xi"};
  env.table.rows.push_back({std::string(inverse ? "inverse" : "forward"), cfg.epsilon, mu, lambda, xi});

  if (a.common.format != "text") return render(env, a.common.format);
  std::ostringstream os;
  os << "cmaxlab " << kVersion << " sideband (" << (inverse ? "inverse" : "forward") << ")\n";
  os << "order n: " << a.n << '\n';
  if (inverse) os << "target xi: " << io::format_double(a.target_xi) << '\n';
  os << "epsilon: " << io::format_double(cfg.epsilon) << '\n';
  os << "mu = epsilon/nu: " << io::format_double(mu) << '\n';
  os << "lambda: " << io::format_double(lambda) << '\n';
  os << "xi = 4 lambda/kappa: " << io::format_double(xi) << '\n';
  return os.str();
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  bool quick = false;
  bool full = false;
  bool mutate_sign = false;
  Common common{"text", "", ""};
};

std::string run_verify(const VerifyArgs& a, bool& all_pass) {
  sweep::VerifyOptions options;
  options.full = a.full;
  options.inject_sign_flip = a.mutate_sign;
  options.threads = sweep_threads();
  const auto report = sweep::verify(options);
  all_pass = report.all_pass();

  io::Envelope env;
  env.metadata = base_metadata("verify", a.common);
  env.metadata["config"] = ordered_json{
      {"mode", a.full ? "full" : "quick"}, {"mutate_sign", a.mutate_sign}, {"format", a.common.format}};
  env.metadata["all_pass"] = all_pass;
  env.metadata["notes"] = report.notes;
  env.metadata["wall_seconds"] = report.wall_seconds;
  env.table.columns = {"name", "budget", "measured", "pass", "note"};
  for (const auto& c : report.checks) env.table.rows.push_back({c.name, c.budget, c.measured, c.pass, c.note});

  if (a.common.format != "text") return render(env, a.common.format);
  std::ostringstream os;
  os << "cmaxlab " << kVersion << " verify (" << (a.full ? "full" : "quick") << ")\n";
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    if (c.pass) ++passed;
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-36s measured=%-12.4g budget=%-10.3g", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.measured, c.budget);
    os << line;
    if (!c.note.empty()) os << ' ' << c.note;
    os << '\n';
  }
  for (const auto& note : report.notes) os << "note: " << note << '\n';
  char summary[128];
  std::snprintf(summary, sizeof summary, "%zu/%zu checks passed in %.1f s\n", passed, report.checks.size(),
                report.wall_seconds);
  os << summary;
  return os.str();
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    std::string key = eq == std::string::npos ? "" : trim(line.substr(0, eq));
    if (key.empty()) throw UsageError(path + ":" + std::to_string(number) + ": expected key=value");
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    for (char& c : key) {
      if (c == '_') c = '-';
    }
    if (key == "config") throw UsageError(path + ":" + std::to_string(number) + ": nested config is not supported");
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::size_t sub = 0;
  while (sub < args.size() && (args[sub].empty() || args[sub][0] == '-')) ++sub;
  if (sub == args.size()) return args;

  std::string path;
  for (std::size_t i = sub + 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty()) return args;

  std::vector<std::string> out(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(sub) + 1);
  for (const auto& [key, value] : read_config(path)) out.push_back("--" + key + "=" + value);
  out.insert(out.end(), args.begin() + static_cast<std::ptrdiff_t>(sub) + 1, args.end());
  return out;
}

std::optional<int> threads_from_env(const char* value) {
  if (value == nullptr || *value == '\0') return std::nullopt;
  const std::string text = trim(value);
  char* end = nullptr;
  const long n = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0' || n < 1 || n > 4096) {
    throw UsageError(std::string(kThreadsEnv) + " must be a positive integer, got '" + value + "'");
  }
  return static_cast<int>(n);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> expanded;
  try {
    expanded = expand_config(args);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Qubit-reservoir entanglement toolkit", "cmaxlab"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  app.failure_message(CLI::FailureMessage::help);

  EvolveArgs evolve;
  auto* evolve_cmd = app.add_subcommand("evolve", "Time series for one coupling strength");
  evolve_cmd->add_option("--xi", evolve.xi, "Coupling ratio 4*lambda0/kappa")->required()->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--tau-max", evolve.tau_max, "Final rescaled time kappa*t/4")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  evolve_cmd->add_option("--steps", evolve.steps, "Number of samples")
      ->check(CLI::Range(2UL, kMaxPoints))
      ->capture_default_str();
  add_method(evolve_cmd, evolve.method);
  add_common(evolve_cmd, evolve.common, {"csv", "json"});

  HeatmapArgs heat;
  auto* heat_cmd = app.add_subcommand("heatmap", "Concurrence over a (xi, tau) grid");
  heat_cmd->add_option("--xi-min", heat.xi_min)->check(CLI::PositiveNumber)->capture_default_str();
  heat_cmd->add_option("--xi-max", heat.xi_max)->check(CLI::PositiveNumber)->capture_default_str();
  heat_cmd->add_option("--xi-steps", heat.xi_steps)->check(CLI::Range(1UL, kMaxPoints))->capture_default_str();
  heat_cmd->add_option("--xi-scale", heat.xi_scale)->check(CLI::IsMember({"log", "linear"}))->capture_default_str();
  heat_cmd->add_option("--tau-max", heat.tau_max)->check(CLI::NonNegativeNumber)->capture_default_str();
  heat_cmd->add_option("--tau-steps", heat.tau_steps)->check(CLI::Range(1UL, kMaxPoints))->capture_default_str();
  add_method(heat_cmd, heat.method);
  add_common(heat_cmd, heat.common, {"csv", "json"});

  CmaxArgs cmax_args;
  auto* cmax_cmd = app.add_subcommand("cmax", "Maximum concurrence and its time versus xi");
  cmax_cmd->add_option("--xi-min", cmax_args.xi_min)->check(CLI::PositiveNumber)->capture_default_str();
  cmax_cmd->add_option("--xi-max", cmax_args.xi_max)->check(CLI::PositiveNumber)->capture_default_str();
  cmax_cmd->add_option("--steps", cmax_args.steps)->check(CLI::Range(1UL, kMaxPoints))->capture_default_str();
  cmax_cmd->add_option("--scale", cmax_args.scale)->check(CLI::IsMember({"log", "linear"}))->capture_default_str();
  add_common(cmax_cmd, cmax_args.common, {"csv", "json"});

  SidebandArgs side;
  auto* side_cmd = app.add_subcommand("sideband", "Sideband modulation amplitude and effective coupling");
  side_cmd->add_option("--g", side.g, "On-resonance coupling (angular frequency)")
      ->required()
      ->check(CLI::PositiveNumber);
  side_cmd->add_option("--kappa", side.kappa, "Resonator decay rate, same units as --g")
      ->required()
      ->check(CLI::PositiveNumber);
  side_cmd->add_option("--n", side.n, "Sideband order")->required()->check(CLI::Range(0, sideband::kMaxOrder));
  side_cmd->add_option("--nu", side.nu, "Modulation frequency")->check(CLI::PositiveNumber)->capture_default_str();
  side.target_opt = side_cmd->add_option("--target-xi", side.target_xi, "Solve for epsilon giving this xi")
                        ->check(CLI::NonNegativeNumber);
  side.epsilon_opt = side_cmd->add_option("--epsilon", side.epsilon, "Modulation amplitude, same units as --nu");
  side.target_opt->excludes(side.epsilon_opt);
  side.omega_q_opt = side_cmd->add_option("--omega-q", side.omega_q, "Qubit frequency for the consistency check");
  side.omega_r_opt = side_cmd->add_option("--omega-r", side.omega_r, "Resonator frequency for the consistency check");
  add_common(side_cmd, side.common, {"text", "csv", "json"});

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Cross-check the solvers against each other");
  auto* quick_flag = ver_cmd->add_flag("--quick", ver.quick, "Coarse grids (default)");
  auto* full_flag = ver_cmd->add_flag("--full", ver.full, "Complete budgets");
  quick_flag->excludes(full_flag);
  ver_cmd->add_flag("--mutate-sign", ver.mutate_sign, "Flip the Lindblad exchange sign; checks must then fail");
  add_common(ver_cmd, ver.common, {"text", "csv", "json"});

  try {
    app.parse(std::vector<std::string>(expanded.rbegin(), expanded.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::string document;
    int status = kExitOk;
    if (evolve_cmd->parsed()) {
      document = run_evolve(evolve);
      emit(evolve.common, document, out);
    } else if (heat_cmd->parsed()) {
      document = run_heatmap(heat);
      emit(heat.common, document, out);
    } else if (cmax_cmd->parsed()) {
      document = run_cmax(cmax_args);
      emit(cmax_args.common, document, out);
    } else if (side_cmd->parsed()) {
      document = run_sideband(side);
      emit(side.common, document, out);
    } else if (ver_cmd->parsed()) {
      bool all_pass = false;
      document = run_verify(ver, all_pass);
      emit(ver.common, document, out);
      if (!all_pass) {
        err << "verify: one or more checks failed\n";
        status = kExitFailure;
      }
    }
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sideband::RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace cmax::cli
