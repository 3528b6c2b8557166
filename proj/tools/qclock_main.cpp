// qclock -- command line front end over libqclock: sampled clock paths,
// single random trajectories, truncated-order orbit families, Monte Carlo
// self-checks, and physical bound reports, as CSV or JSON.
//
// Subcommands: clock-paths, trajectory, orbits, mc-vs-exact, bounds.
// Values come from flags, then an optional JSON --config file, then the
// named --preset, then built-in defaults. Every run is deterministic in
// (config, seed) and re-running writes byte-identical files.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qclock/bounds.hpp"
#include "qclock/clock.hpp"
#include "qclock/errors.hpp"
#include "qclock/master.hpp"
#include "qclock/montecarlo.hpp"
#include "qclock/qstate.hpp"
#include "qclock/rng.hpp"

namespace {

using nlohmann::json;
using namespace qclock;

constexpr std::uint64_t kDefaultSeed = 20260825ULL;
constexpr const char* kSeedEnvVar = "QCLOCK_SEED";

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- formatting

std::string sci17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string compact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// --------------------------------------------------------- config file merge

// Binds JSON config keys to the same storage as the CLI flags. Flags win
// over config values; unknown or wrongly typed fields fail fast with the
// field name in the message.
class ConfigBinder {
 public:
  template <class T>
  void bind(const std::string& key, CLI::Option* opt, T* target,
            const char* expected) {
    entries_[key] = Entry{
        opt, false,
        [target, key, expected](const json& v) {
          try {
            *target = v.get<T>();
          } catch (const json::exception&) {
            throw CliError("config field '" + key + "': expected " +
                           expected);
          }
        }};
  }

  void apply_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError("cannot open config file '" + path + "'");
    json cfg;
    try {
      cfg = json::parse(in);
    } catch (const json::parse_error& e) {
      throw CliError("config file '" + path + "': " + e.what());
    }
    if (!cfg.is_object()) {
      throw CliError("config file '" + path + "': expected a JSON object");
    }
    for (const auto& item : cfg.items()) {
      auto it = entries_.find(item.key());
      if (it == entries_.end()) {
        throw CliError("config field '" + item.key() +
                       "' is not recognized by this command");
      }
      if (it->second.opt != nullptr && it->second.opt->count() > 0) {
        continue;  // explicit flag wins
      }
      it->second.apply(item.value());
      it->second.from_config = true;
    }
  }

  /// True when the user pinned this key via flag or config file.
  bool effective(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return false;
    return (it->second.opt != nullptr && it->second.opt->count() > 0) ||
           it->second.from_config;
  }

 private:
  struct Entry {
    CLI::Option* opt = nullptr;
    bool from_config = false;
    std::function<void(const json&)> apply;
  };
  std::map<std::string, Entry> entries_;
};

// ------------------------------------------------------------------ options

struct CommonOptions {
  std::string model = "gamma";
  double kappa = 10.0;
  double lambda = 0.1;
  std::string units;  // filled per command
  std::string preset;
  std::string config_path;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = kDefaultSeed;
  std::string seed_source = "default";

  CLI::Option* kappa_opt = nullptr;
  CLI::Option* lambda_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

ClockKind parse_kind(const std::string& model) {
  if (model == "gamma") return ClockKind::Gamma;
  if (model == "ig") return ClockKind::InverseGaussian;
  throw CliError("--model must be 'gamma' or 'ig', got '" + model + "'");
}

void validate_units(const std::string& units) {
  if (units != "si" && units != "natural") {
    throw CliError("--units must be 'si' or 'natural', got '" + units + "'");
  }
}

void validate_format(const std::string& format) {
  if (format != "csv" && format != "json") {
    throw CliError("--format must be 'csv' or 'json', got '" + format + "'");
  }
}

std::uint64_t parse_env_seed(const char* text) {
  std::uint64_t value = 0;
  const char* end = text + std::string_view(text).size();
  auto [ptr, ec] = std::from_chars(text, end, value);
  if (ec != std::errc() || ptr != end) {
    throw CliError(std::string(kSeedEnvVar) + " must be an unsigned integer, got '" +
                   text + "'");
  }
  return value;
}

// flag > config > environment > built-in default, with the source recorded
void resolve_seed(CommonOptions& opts, const ConfigBinder& binder) {
  if (opts.seed_opt != nullptr && opts.seed_opt->count() > 0) {
    opts.seed_source = "flag";
    return;
  }
  if (binder.effective("seed")) {
    opts.seed_source = "config";
    return;
  }
  if (const char* env = std::getenv(kSeedEnvVar)) {
    opts.seed = parse_env_seed(env);
    opts.seed_source = std::string("env:") + kSeedEnvVar;
    return;
  }
  opts.seed_source = "default";
}

ClockModel resolve_model(const CommonOptions& opts,
                         const ConfigBinder& binder) {
  const ClockKind kind = parse_kind(opts.model);
  if (binder.effective("kappa") && binder.effective("lambda")) {
    throw CliError("set either --kappa or --lambda, not both");
  }
  if (binder.effective("lambda")) {
    return ClockModel::from_lambda(kind, opts.lambda);
  }
  return kind == ClockKind::Gamma ? ClockModel::gamma(opts.kappa)
                                  : ClockModel::inverse_gaussian(opts.kappa);
}

RealVector build_grid(double t_end, double dt) {
  if (!(t_end >= 0.0)) throw CliError("--t-end must be >= 0");
  if (!(dt > 0.0)) throw CliError("--dt must be > 0");
  const long long n =
      t_end == 0.0 ? 0 : std::max<long long>(1, std::llround(t_end / dt));
  RealVector grid(n + 1);
  for (long long i = 0; i <= n; ++i) {
    grid(i) = t_end * static_cast<double>(i) / std::max<long long>(n, 1);
  }
  return grid;
}

DensityMatrix build_initial_state(const std::string& init, int dim) {
  if (dim < 2) throw CliError("--dim must be >= 2");
  if (init == "plus-x") {
    if (dim != 2) {
      throw CliError("--init plus-x requires --dim 2, got " +
                     std::to_string(dim));
    }
    ComplexVector psi(2);
    psi << Complex(1.0, 0.0), Complex(1.0, 0.0);
    return pure_state(psi);
  }
  if (init == "mixed") return maximally_mixed(dim);
  if (init == "ground") {
    ComplexVector psi = ComplexVector::Zero(dim);
    psi(0) = Complex(1.0, 0.0);
    return pure_state(psi);
  }
  throw CliError("--init must be one of plus-x, mixed, ground; got '" + init +
                 "'");
}

// equally spaced spectrum omega*(d-1-2k); for d = 2 this is omega*sigma_z
HamiltonianSpec build_hamiltonian(double omega, int dim) {
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    h(k, k) = Complex(omega * static_cast<double>(dim - 1 - 2 * k), 0.0);
  }
  return spectral_decompose(h);
}

// ------------------------------------------------------------------- output

using MetaList = std::vector<std::pair<std::string, std::string>>;

std::string meta_comment(const std::string& command, const MetaList& meta) {
  std::string line = "# qclock " + command;
  for (const auto& [key, value] : meta) {
    line += " " + key + "=" + value;
  }
  return line;
}

json meta_object(const std::string& command, const MetaList& meta) {
  json obj;
  obj["command"] = command;
  for (const auto& [key, value] : meta) obj[key] = value;
  return obj;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CliError("cannot open output file '" + path + "'");
  return out;
}

void write_table(const std::string& path, const std::string& command,
                 const MetaList& meta, const std::vector<std::string>& columns,
                 const std::vector<std::vector<std::string>>& rows,
                 const std::string& format) {
  std::ofstream out = open_output(path);
  if (format == "csv") {
    out << meta_comment(command, meta) << "\n";
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c == 0 ? "" : ",") << columns[c];
    }
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c == 0 ? "" : ",") << row[c];
      }
      out << "\n";
    }
  } else {
    json doc;
    doc["meta"] = meta_object(command, meta);
    doc["columns"] = columns;
    doc["rows"] = rows;
    out << doc.dump(2) << "\n";
  }
  std::cout << "wrote " << path << " (" << rows.size() << " rows)\n";
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
  const std::size_t dot = path.rfind('.');
  if (dot == std::string::npos) return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

// ------------------------------------------------------------- clock-paths

struct ClockPathsOptions {
  CommonOptions common;
  std::vector<double> kappas;
  double t_end = 1.0;
  double dt = 1e-3;
};

int cmd_clock_paths(ClockPathsOptions& o, const ConfigBinder& binder) {
  validate_format(o.common.format);
  if (o.common.units.empty()) o.common.units = "natural";
  validate_units(o.common.units);
  if (!o.common.preset.empty() && o.common.preset != "fig1") {
    throw CliError("clock-paths supports --preset fig1, got '" +
                   o.common.preset + "'");
  }
  if (!o.kappas.empty() &&
      (binder.effective("kappa") || binder.effective("lambda"))) {
    throw CliError("set --kappa-list or a single --kappa/--lambda, not both");
  }
  if (o.kappas.empty()) {
    if (binder.effective("lambda")) {
      o.kappas = {ClockModel::from_lambda(parse_kind(o.common.model),
                                          o.common.lambda)
                      .kappa()};
    } else if (binder.effective("kappa")) {
      o.kappas = {o.common.kappa};
    } else {
      // fig1 choice: four rates spanning rough to nearly Newtonian
      o.kappas = {100.0, 10.0, 1.0, 0.01};
    }
  }
  const ClockKind kind = parse_kind(o.common.model);

  const RealVector grid = build_grid(o.t_end, o.dt);
  std::vector<ClockPath> paths;
  for (std::size_t j = 0; j < o.kappas.size(); ++j) {
    ClockModel model = kind == ClockKind::Gamma
                           ? ClockModel::gamma(o.kappas[j])
                           : ClockModel::inverse_gaussian(o.kappas[j]);
    RandomStream rng(child_seed(o.common.seed, j));
    paths.push_back(sample_path(model, grid, rng));
  }

  std::vector<std::string> columns{"t"};
  for (double k : o.kappas) columns.push_back("gamma_kappa_" + compact(k));
  std::vector<std::vector<std::string>> rows;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    std::vector<std::string> row{sci17(grid(i))};
    for (const ClockPath& p : paths) row.push_back(sci17(p.values(i)));
    rows.push_back(std::move(row));
  }

  MetaList meta{{"seed", std::to_string(o.common.seed)},
                {"seed_source", o.common.seed_source},
                {"units", o.common.units},
                {"model", o.common.model},
                {"t_end", compact(o.t_end)},
                {"dt", compact(o.dt)}};
  std::string kappa_list;
  for (std::size_t j = 0; j < o.kappas.size(); ++j) {
    kappa_list += (j == 0 ? "" : ";") + compact(o.kappas[j]);
  }
  meta.emplace_back("kappa", kappa_list);

  if (o.common.out.empty()) {
    o.common.out =
        o.common.format == "csv" ? "clock_paths.csv" : "clock_paths.json";
  }
  write_table(o.common.out, "clock-paths", meta, columns, rows,
              o.common.format);
  return 0;
}

// -------------------------------------------------------------- trajectory

struct TrajectoryOptions {
  CommonOptions common;
  double omega = 0.8;
  int dim = 2;
  std::string init = "plus-x";
  double t_end = 10.0;
  double dt = 0.01;
};

void write_trajectory_file(const std::string& path, TrajectoryOptions& o,
                           const ClockModel& model, std::uint64_t seed) {
  if (o.dim != 2) {
    throw CliError("trajectory reports Bloch coordinates; --dim must be 2");
  }
  DensityMatrix rho0 = build_initial_state(o.init, o.dim);
  HamiltonianSpec h = build_hamiltonian(o.omega, o.dim);
  const RealVector grid = build_grid(o.t_end, o.dt);
  TrajectoryRecord record = evolve_trajectory(rho0, h, model, grid, seed);

  std::vector<std::string> columns{"t", "gamma", "x", "y", "z"};
  std::vector<std::vector<std::string>> rows;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    BlochVector b =
        bloch_coordinates(record.states[static_cast<std::size_t>(i)]);
    rows.push_back({sci17(grid(i)), sci17(record.clock(i)), sci17(b.x),
                    sci17(b.y), sci17(b.z)});
  }

  MetaList meta{{"seed", std::to_string(seed)},
                {"seed_source", o.common.seed_source},
                {"units", o.common.units},
                {"model", o.common.model},
                {"kappa", compact(model.kappa())},
                {"omega", compact(o.omega)},
                {"init", o.init},
                {"t_end", compact(o.t_end)},
                {"dt", compact(o.dt)}};
  write_table(path, "trajectory", meta, columns, rows, o.common.format);
}

int cmd_trajectory(TrajectoryOptions& o, const ConfigBinder& binder) {
  validate_format(o.common.format);
  if (o.common.units.empty()) o.common.units = "natural";
  validate_units(o.common.units);

  const std::string ext = o.common.format == "csv" ? ".csv" : ".json";
  if (o.common.out.empty()) o.common.out = "trajectory" + ext;

  if (o.common.preset.empty()) {
    write_trajectory_file(o.common.out, o, resolve_model(o.common, binder),
                          o.common.seed);
    return 0;
  }
  if (o.common.preset != "fig2") {
    throw CliError("trajectory supports --preset fig2, got '" +
                   o.common.preset + "'");
  }
  // the fig2 family does not pin its rates; sample kappa in {100, 10, 1},
  // one file per rate
  const ClockKind kind = parse_kind(o.common.model);
  const std::vector<double> kappas{100.0, 10.0, 1.0};
  for (std::size_t j = 0; j < kappas.size(); ++j) {
    ClockModel model = kind == ClockKind::Gamma
                           ? ClockModel::gamma(kappas[j])
                           : ClockModel::inverse_gaussian(kappas[j]);
    write_trajectory_file(
        with_suffix(o.common.out, "_kappa" + compact(kappas[j])), o, model,
        child_seed(o.common.seed, j));
  }
  return 0;
}

// ------------------------------------------------------------------ orbits

struct OrbitsOptions {
  CommonOptions common;
  double omega = 0.8;
  std::vector<int> orders;
  double t_end = 20.0;
  double dt = 0.01;
};

int cmd_orbits(OrbitsOptions& o, const ConfigBinder& binder) {
  validate_format(o.common.format);
  if (o.common.units.empty()) o.common.units = "natural";
  validate_units(o.common.units);

  // presets pin the named parameter families in one place:
  //   fig3a: lambda = 0.005 (nearly Newtonian), orders 0..3, long window
  //   fig3b: lambda = 0.5 (rough clock), orders 1..3, short window
  bool use_lambda = binder.effective("lambda");
  if (!o.common.preset.empty()) {
    if (o.common.preset != "fig3a" && o.common.preset != "fig3b") {
      throw CliError("orbits supports --preset fig3a or fig3b, got '" +
                     o.common.preset + "'");
    }
    const bool rough = o.common.preset == "fig3b";
    if (!binder.effective("lambda") && !binder.effective("kappa")) {
      o.common.lambda = rough ? 0.5 : 0.005;
      use_lambda = true;
    }
    if (!binder.effective("t-end")) o.t_end = rough ? 5.0 : 20.0;
    if (!binder.effective("order")) {
      o.orders = rough ? std::vector<int>{1, 2, 3}
                       : std::vector<int>{0, 1, 2, 3};
    }
  }
  if (o.orders.empty()) o.orders = {0, 1, 2, 3};

  const ClockKind kind = parse_kind(o.common.model);
  ClockModel model = use_lambda
                         ? ClockModel::from_lambda(kind, o.common.lambda)
                         : (kind == ClockKind::Gamma
                                ? ClockModel::gamma(o.common.kappa)
                                : ClockModel::inverse_gaussian(o.common.kappa));

  DensityMatrix rho0 = build_initial_state("plus-x", 2);
  HamiltonianSpec h = build_hamiltonian(o.omega, 2);

  std::vector<std::string> columns{"t",  "order",          "x", "y", "z",
                                   "min_eigenvalue", "trace_error"};
  std::vector<std::vector<std::string>> rows;
  for (int m : o.orders) {
    auto points = integrate(rho0, h, model, TruncationOrder(m), o.t_end, o.dt);
    for (const StatePoint& p : points) {
      // diagnostics are reported, not clipped: a truncated equation may
      // step outside the state space and the row should show it
      ComplexMatrix rho = p.rho;
      BlochVector b{2.0 * std::real(rho(0, 1)), 2.0 * std::imag(rho(1, 0)),
                    std::real(rho(0, 0) - rho(1, 1))};
      rows.push_back({sci17(p.t), std::to_string(m), sci17(b.x), sci17(b.y),
                      sci17(b.z), sci17(p.min_eigenvalue),
                      sci17(p.trace_error)});
    }
  }
  const RealVector grid = build_grid(o.t_end, o.dt);
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    DensityMatrix exact = exact_energy_basis_solution(rho0, h, model, grid(i));
    BlochVector b = bloch_coordinates(exact);
    rows.push_back({sci17(grid(i)), "exact", sci17(b.x), sci17(b.y),
                    sci17(b.z), sci17(exact.min_eigenvalue()),
                    sci17(exact.trace_error())});
  }

  std::string order_list;
  for (std::size_t j = 0; j < o.orders.size(); ++j) {
    order_list += (j == 0 ? "" : ";") + std::to_string(o.orders[j]);
  }
  MetaList meta{{"seed", std::to_string(o.common.seed)},
                {"seed_source", o.common.seed_source},
                {"units", o.common.units},
                {"model", o.common.model},
                {"lambda", compact(model.lambda())},
                {"kappa", compact(model.kappa())},
                {"omega", compact(o.omega)},
                {"orders", order_list},
                {"t_end", compact(o.t_end)},
                {"dt", compact(o.dt)}};
  if (!o.common.preset.empty()) meta.emplace_back("preset", o.common.preset);

  if (o.common.out.empty()) {
    o.common.out = o.common.format == "csv" ? "orbits.csv" : "orbits.json";
  }
  write_table(o.common.out, "orbits", meta, columns, rows, o.common.format);
  return 0;
}

// ------------------------------------------------------------- mc-vs-exact

struct McVsExactOptions {
  CommonOptions common;
  double omega = 0.8;
  int dim = 2;
  std::string init = "plus-x";
  double t_end = 5.0;
  double dt = 0.1;
  std::int64_t n_traj = 10000;
};

int cmd_mc_vs_exact(McVsExactOptions& o, const ConfigBinder& binder) {
  if (!binder.effective("format")) o.common.format = "json";
  validate_format(o.common.format);
  if (o.common.units.empty()) o.common.units = "natural";
  validate_units(o.common.units);
  if (!o.common.preset.empty()) {
    throw CliError("mc-vs-exact has no presets, got '" + o.common.preset +
                   "'");
  }
  ClockModel model = resolve_model(o.common, binder);
  DensityMatrix rho0 = build_initial_state(o.init, o.dim);
  HamiltonianSpec h = build_hamiltonian(o.omega, o.dim);
  const RealVector grid = build_grid(o.t_end, o.dt);

  EnsembleEstimate est =
      ensemble_average(rho0, h, model, grid, o.n_traj, o.common.seed);

  bool all_pass = true;
  double overall_dev = 0.0;
  json points = json::array();
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    DensityMatrix exact = exact_energy_basis_solution(rho0, h, model, grid(i));
    ComplexMatrix dev = est.mean[idx].matrix() - exact.matrix();

    bool point_pass = true;
    double max_dev = 0.0, envelope = 0.0;
    for (Eigen::Index r = 0; r < dev.rows(); ++r) {
      for (Eigen::Index c = 0; c < dev.cols(); ++c) {
        const double sr = est.stderr_real[idx](r, c);
        const double si = est.stderr_imag[idx](r, c);
        if (std::abs(std::real(dev(r, c))) > 4.0 * sr + 1e-12 ||
            std::abs(std::imag(dev(r, c))) > 4.0 * si + 1e-12) {
          point_pass = false;
        }
        max_dev = std::max(max_dev, std::abs(dev(r, c)));
        envelope = std::max(envelope, 4.0 * std::hypot(sr, si));
      }
    }
    all_pass = all_pass && point_pass;
    overall_dev = std::max(overall_dev, max_dev);
    points.push_back({{"t", grid(i)},
                      {"max_abs_deviation", max_dev},
                      {"envelope_4sigma", envelope},
                      {"pass", point_pass}});
  }

  json report{{"command", "mc-vs-exact"},
              {"seed", o.common.seed},
              {"seed_source", o.common.seed_source},
              {"units", o.common.units},
              {"model", o.common.model},
              {"kappa", model.kappa()},
              {"lambda", model.lambda()},
              {"omega", o.omega},
              {"dim", o.dim},
              {"init", o.init},
              {"t_end", o.t_end},
              {"dt", o.dt},
              {"n_traj", o.n_traj},
              {"points", points},
              {"max_abs_deviation", overall_dev},
              {"pass", all_pass}};

  if (o.common.out.empty()) {
    o.common.out =
        o.common.format == "json" ? "mc_vs_exact.json" : "mc_vs_exact.csv";
  }
  if (o.common.format == "json") {
    std::ofstream out = open_output(o.common.out);
    out << report.dump(2) << "\n";
    std::cout << "wrote " << o.common.out << "\n";
  } else {
    MetaList meta{{"seed", std::to_string(o.common.seed)},
                  {"seed_source", o.common.seed_source},
                  {"units", o.common.units},
                  {"model", o.common.model},
                  {"kappa", compact(model.kappa())},
                  {"omega", compact(o.omega)},
                  {"n_traj", std::to_string(o.n_traj)}};
    std::vector<std::string> columns{"t", "max_abs_deviation",
                                     "envelope_4sigma", "pass"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : points) {
      rows.push_back({sci17(p["t"].get<double>()),
                      sci17(p["max_abs_deviation"].get<double>()),
                      sci17(p["envelope_4sigma"].get<double>()),
                      p["pass"].get<bool>() ? "true" : "false"});
    }
    write_table(o.common.out, "mc-vs-exact", meta, columns, rows, "csv");
  }
  std::cout << (all_pass ? "PASS" : "FAIL")
            << " max_abs_deviation=" << sci17(overall_dev) << "\n";
  return all_pass ? 0 : 1;
}

// ------------------------------------------------------------------ bounds

struct BoundsOptions {
  CommonOptions common;
  double kappa = 1e19;
  double delta = constants::planck_time_seconds;
  double tau = 1e-21;
  double ramsey_time = 1.0;
  double t_years = 30e9;
  double frequency = constants::cesium_hyperfine_hz;
};

int cmd_bounds(BoundsOptions& o, const ConfigBinder& binder) {
  if (!binder.effective("format")) o.common.format = "json";
  validate_format(o.common.format);
  if (o.common.units.empty()) o.common.units = "si";
  validate_units(o.common.units);
  if (!o.common.preset.empty() && o.common.preset != "bounds-paper") {
    throw CliError("bounds supports --preset bounds-paper, got '" +
                   o.common.preset + "'");
  }

  AtomicClockSpec spec{o.frequency, o.ramsey_time, "configured standard"};
  const double kappa_ordinary =
      kappa_lower_bound(spec, FrequencyConvention::Ordinary);
  const double kappa_angular =
      kappa_lower_bound(spec, FrequencyConvention::Angular);
  TickReport tick = planck_tick_report(o.kappa, o.delta, o.tau);
  const double t_seconds = o.t_years * constants::seconds_per_julian_year;
  EstimationErrorBound err = estimation_error_bound(o.kappa, t_seconds);

  json report{{"command", "bounds"},
              {"units", o.common.units},
              {"inputs",
               {{"kappa", o.kappa},
                {"delta", o.delta},
                {"tau", o.tau},
                {"ramsey_time_s", o.ramsey_time},
                {"t_years", o.t_years},
                {"transition_frequency_hz", o.frequency}}},
              {"kappa_min_ordinary", kappa_ordinary},
              {"kappa_min_angular", kappa_angular},
              {"convention_ratio", kappa_angular / kappa_ordinary},
              {"transition_energy_ev", transition_energy_ev(spec)},
              {"r_delta", tick.rate},
              {"p_at_least_one", tick.p_at_least_one},
              {"fisher_information", fisher_information(o.kappa, t_seconds)},
              {"inverse_information", err.inverse_information},
              {"root_inverse_information", err.root_inverse_information}};

  if (o.common.out.empty()) {
    o.common.out = o.common.format == "json" ? "bounds.json" : "bounds.csv";
  }
  if (o.common.format == "json") {
    std::ofstream out = open_output(o.common.out);
    out << report.dump(2) << "\n";
    std::cout << "wrote " << o.common.out << "\n";
  } else {
    MetaList meta{{"units", o.common.units},
                  {"kappa", compact(o.kappa)},
                  {"delta", compact(o.delta)},
                  {"tau", compact(o.tau)},
                  {"ramsey_time_s", compact(o.ramsey_time)},
                  {"t_years", compact(o.t_years)},
                  {"transition_frequency_hz", compact(o.frequency)}};
    std::vector<std::string> columns{"key", "value"};
    std::vector<std::vector<std::string>> rows;
    for (const char* key :
         {"kappa_min_ordinary", "kappa_min_angular", "convention_ratio",
          "transition_energy_ev", "r_delta", "p_at_least_one",
          "fisher_information", "inverse_information",
          "root_inverse_information"}) {
      rows.push_back({key, sci17(report[key].get<double>())});
    }
    write_table(o.common.out, "bounds", meta, columns, rows, "csv");
  }
  return 0;
}

// -------------------------------------------------------------------- main

void add_common(CLI::App* cmd, CommonOptions& c, ConfigBinder& binder,
                std::string* config_path) {
  auto* model =
      cmd->add_option("--model", c.model, "clock model: gamma or ig");
  c.kappa_opt = cmd->add_option("--kappa", c.kappa, "clock rate kappa > 0");
  c.lambda_opt =
      cmd->add_option("--lambda", c.lambda, "mean tick scale 1/kappa");
  c.kappa_opt->excludes(c.lambda_opt);
  c.lambda_opt->excludes(c.kappa_opt);
  c.seed_opt = cmd->add_option("--seed", c.seed, "master random seed");
  auto* units = cmd->add_option("--units", c.units, "si or natural");
  auto* preset = cmd->add_option("--preset", c.preset, "named parameter set");
  auto* out = cmd->add_option("--out", c.out, "output file path");
  auto* format =
      cmd->add_option("--format", c.format, "output format: csv or json");
  cmd->add_option("--config", *config_path,
                  "JSON config file; flags take precedence");

  binder.bind("model", model, &c.model, "a string");
  binder.bind("kappa", c.kappa_opt, &c.kappa, "a number");
  binder.bind("lambda", c.lambda_opt, &c.lambda, "a number");
  binder.bind("seed", c.seed_opt, &c.seed, "an unsigned integer");
  binder.bind("units", units, &c.units, "a string");
  binder.bind("preset", preset, &c.preset, "a string");
  binder.bind("out", out, &c.out, "a string");
  binder.bind("format", format, &c.format, "a string");
}

int run(int argc, char** argv) {
  CLI::App app{"quantum-clock dynamics toolkit"};
  app.require_subcommand(1);

  ClockPathsOptions cp;
  TrajectoryOptions tj;
  OrbitsOptions ob;
  McVsExactOptions mc;
  BoundsOptions bd;
  ConfigBinder cp_binder, tj_binder, ob_binder, mc_binder, bd_binder;
  std::string cp_config, tj_config, ob_config, mc_config, bd_config;

  CLI::App* cp_cmd = app.add_subcommand(
      "clock-paths", "sample clock paths, one column per rate");
  add_common(cp_cmd, cp.common, cp_binder, &cp_config);
  auto* cp_kappas = cp_cmd->add_option(
      "--kappa-list", cp.kappas, "rates to sample (default 100 10 1 0.01)");
  auto* cp_tend = cp_cmd->add_option("--t-end", cp.t_end, "grid end time");
  auto* cp_dt = cp_cmd->add_option("--dt", cp.dt, "grid spacing");
  cp_binder.bind("kappa-list", cp_kappas, &cp.kappas, "an array of numbers");
  cp_binder.bind("t-end", cp_tend, &cp.t_end, "a number");
  cp_binder.bind("dt", cp_dt, &cp.dt, "a number");

  CLI::App* tj_cmd = app.add_subcommand(
      "trajectory", "one random-clock trajectory in Bloch coordinates");
  add_common(tj_cmd, tj.common, tj_binder, &tj_config);
  auto* tj_omega = tj_cmd->add_option("--omega", tj.omega, "level splitting");
  auto* tj_dim = tj_cmd->add_option("--dim", tj.dim, "Hilbert dimension");
  auto* tj_init =
      tj_cmd->add_option("--init", tj.init, "plus-x, mixed, or ground");
  auto* tj_tend = tj_cmd->add_option("--t-end", tj.t_end, "grid end time");
  auto* tj_dt = tj_cmd->add_option("--dt", tj.dt, "grid spacing");
  tj_binder.bind("omega", tj_omega, &tj.omega, "a number");
  tj_binder.bind("dim", tj_dim, &tj.dim, "an integer");
  tj_binder.bind("init", tj_init, &tj.init, "a string");
  tj_binder.bind("t-end", tj_tend, &tj.t_end, "a number");
  tj_binder.bind("dt", tj_dt, &tj.dt, "a number");

  CLI::App* ob_cmd = app.add_subcommand(
      "orbits", "truncated-order orbit family plus the exact orbit");
  add_common(ob_cmd, ob.common, ob_binder, &ob_config);
  auto* ob_omega = ob_cmd->add_option("--omega", ob.omega, "level splitting");
  auto* ob_orders =
      ob_cmd->add_option("--order", ob.orders, "truncation orders to include");
  auto* ob_tend = ob_cmd->add_option("--t-end", ob.t_end, "grid end time");
  auto* ob_dt = ob_cmd->add_option("--dt", ob.dt, "integration step");
  ob_binder.bind("omega", ob_omega, &ob.omega, "a number");
  ob_binder.bind("order", ob_orders, &ob.orders, "an array of integers");
  ob_binder.bind("t-end", ob_tend, &ob.t_end, "a number");
  ob_binder.bind("dt", ob_dt, &ob.dt, "a number");

  CLI::App* mc_cmd = app.add_subcommand(
      "mc-vs-exact", "Monte Carlo mean against the closed-form average");
  add_common(mc_cmd, mc.common, mc_binder, &mc_config);
  auto* mc_omega = mc_cmd->add_option("--omega", mc.omega, "level splitting");
  auto* mc_dim = mc_cmd->add_option("--dim", mc.dim, "Hilbert dimension");
  auto* mc_init =
      mc_cmd->add_option("--init", mc.init, "plus-x, mixed, or ground");
  auto* mc_tend = mc_cmd->add_option("--t-end", mc.t_end, "grid end time");
  auto* mc_dt = mc_cmd->add_option("--dt", mc.dt, "grid spacing");
  auto* mc_ntraj =
      mc_cmd->add_option("--n-traj", mc.n_traj, "trajectories to average");
  mc_binder.bind("omega", mc_omega, &mc.omega, "a number");
  mc_binder.bind("dim", mc_dim, &mc.dim, "an integer");
  mc_binder.bind("init", mc_init, &mc.init, "a string");
  mc_binder.bind("t-end", mc_tend, &mc.t_end, "a number");
  mc_binder.bind("dt", mc_dt, &mc.dt, "a number");
  mc_binder.bind("n-traj", mc_ntraj, &mc.n_traj, "an integer");

  CLI::App* bd_cmd =
      app.add_subcommand("bounds", "physical-scale bound report");
  add_common(bd_cmd, bd.common, bd_binder, &bd_config);
  auto* bd_kappa2 =
      bd_cmd->add_option("--tick-kappa", bd.kappa,
                         "rate used for the tick and estimation bounds");
  auto* bd_delta =
      bd_cmd->add_option("--delta", bd.delta, "tick size threshold, seconds");
  auto* bd_tau =
      bd_cmd->add_option("--tau", bd.tau, "observation window, seconds");
  auto* bd_ramsey = bd_cmd->add_option("--ramsey-time", bd.ramsey_time,
                                       "interrogation time, seconds");
  auto* bd_tyears =
      bd_cmd->add_option("--t-years", bd.t_years, "elapsed time, years");
  auto* bd_freq = bd_cmd->add_option("--frequency", bd.frequency,
                                     "transition frequency, Hz");
  bd_binder.bind("tick-kappa", bd_kappa2, &bd.kappa, "a number");
  bd_binder.bind("delta", bd_delta, &bd.delta, "a number");
  bd_binder.bind("tau", bd_tau, &bd.tau, "a number");
  bd_binder.bind("ramsey-time", bd_ramsey, &bd.ramsey_time, "a number");
  bd_binder.bind("t-years", bd_tyears, &bd.t_years, "a number");
  bd_binder.bind("frequency", bd_freq, &bd.frequency, "a number");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (cp_cmd->parsed()) {
      if (!cp_config.empty()) cp_binder.apply_file(cp_config);
      resolve_seed(cp.common, cp_binder);
      return cmd_clock_paths(cp, cp_binder);
    }
    if (tj_cmd->parsed()) {
      if (!tj_config.empty()) tj_binder.apply_file(tj_config);
      resolve_seed(tj.common, tj_binder);
      return cmd_trajectory(tj, tj_binder);
    }
    if (ob_cmd->parsed()) {
      if (!ob_config.empty()) ob_binder.apply_file(ob_config);
      resolve_seed(ob.common, ob_binder);
      return cmd_orbits(ob, ob_binder);
    }
    if (mc_cmd->parsed()) {
      if (!mc_config.empty()) mc_binder.apply_file(mc_config);
      resolve_seed(mc.common, mc_binder);
      return cmd_mc_vs_exact(mc, mc_binder);
    }
    if (bd_cmd->parsed()) {
      if (!bd_config.empty()) bd_binder.apply_file(bd_config);
      return cmd_bounds(bd, bd_binder);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const qclock::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
