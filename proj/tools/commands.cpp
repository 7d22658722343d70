#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <set>
#include <sstream>

#include "gammaecho/dynamics.hpp"
#include "gammaecho/echo.hpp"
#include "gammaecho/errors.hpp"
#include "gammaecho/overlap_op.hpp"
#include "gammaecho/phase_space.hpp"
#include "reference_values.hpp"
#include "writers.hpp"

namespace gammaecho::cli {
namespace {

using Header = std::vector<std::pair<std::string, std::string>>;

const std::set<std::string> kModelKeys = {"gamma", "epsilon", "omega", "lambda",
                                          "hbar", "scale"};
const std::set<std::string> kStateKeys = {"state", "alpha", "alpha_im", "r", "n",
                                          "cat_sign", "seed", "n_max"};
const std::set<std::string> kOutputKeys = {"out", "format"};

std::set<std::string> merge(std::initializer_list<std::set<std::string>> sets) {
  std::set<std::string> out;
  for (const auto& s : sets) out.insert(s.begin(), s.end());
  return out;
}

GammaParams make_params(const Config& cfg) {
  GammaParams params;
  params.gamma = cfg.get_double("gamma", 1.0);
  params.epsilon = cfg.get_double("epsilon", 1.0);
  params.omega = cfg.get_double("omega", 0.0);
  params.lam = cfg.get_double("lambda", 1.0);
  params.hbar = cfg.get_double("hbar", 1.0);
  params.delta_scale = cfg.get_double("scale", 1.0);
  params.validate();
  return params;
}

std::string state_label(const Config& cfg) {
  const std::string state = cfg.get_string("state", "coherent");
  std::ostringstream out;
  if (state == "coherent")
    out << "coherent(alpha=" << cfg.get_double("alpha", 2.0) << ")";
  else if (state == "phase")
    out << "phase(r=" << cfg.get_int("r", 6) << ")";
  else if (state == "fock")
    out << "fock(n=" << cfg.get_int("n", 0) << ")";
  else if (state == "cat")
    out << "cat(alpha=" << cfg.get_double("alpha", 2.0)
        << ",sign=" << cfg.get_int("cat_sign", 1) << ")";
  else if (state == "random")
    out << "random(seed=" << cfg.get_seed("seed", 12345) << ")";
  else
    out << state;
  return out.str();
}

PureState make_state(const Config& cfg) {
  const std::string state = cfg.get_string("state", "coherent");
  const Complex alpha(cfg.get_double("alpha", 2.0), cfg.get_double("alpha_im", 0.0));
  const int n_max_cfg = cfg.get_int("n_max", -1);
  if (state == "coherent")
    return coherent_state(alpha, n_max_cfg > 0 ? n_max_cfg : default_cutoff(alpha));
  if (state == "cat")
    return cat_state(alpha, cfg.get_int("cat_sign", 1),
                     n_max_cfg > 0 ? n_max_cfg : default_cutoff(alpha));
  if (state == "phase") {
    const int r = cfg.get_int("r", 6);
    return phase_state(r, n_max_cfg > 0 ? n_max_cfg : r + 2);
  }
  if (state == "fock") {
    const int n = cfg.get_int("n", 0);
    return fock_state(n, n_max_cfg > 0 ? n_max_cfg : n + 2);
  }
  if (state == "random")
    return random_pure_state(n_max_cfg > 0 ? n_max_cfg : 30, cfg.get_seed("seed", 12345));
  throw ConfigError("config key 'state' must be one of coherent/phase/fock/cat/random");
}

void append_model_header(Header& h, const GammaParams& p) {
  h.emplace_back("gamma", format_double(p.gamma));
  h.emplace_back("epsilon", format_double(p.epsilon));
  h.emplace_back("omega", format_double(p.omega));
  h.emplace_back("lambda", format_double(p.lam));
  h.emplace_back("hbar", format_double(p.hbar));
  h.emplace_back("scale", format_double(p.delta_scale));
}

std::string out_path(const Config& cfg, const std::string& command,
                     const std::string& format) {
  return cfg.get_string("out", command + "." + format);
}

std::string checked_format(const Config& cfg) {
  const std::string format = cfg.get_string("format", "csv");
  if (format != "csv" && format != "json")
    throw ConfigError("config key 'format' must be csv or json");
  return format;
}

}  // namespace

void cmd_echo(const Config& cfg) {
  cfg.require_known_keys(
      merge({kModelKeys, kStateKeys, kOutputKeys, {"t_max", "dt", "fold"}}));
  const GammaParams params = make_params(cfg);
  const PureState psi = make_state(cfg);
  const double t_max = cfg.get_double("t_max", 2000.0);
  const double dt = cfg.get_double("dt", 0.01);
  const double fold = cfg.get_double("fold", 0.0);

  const EchoSeries series = echo_series(psi, params.gamma, params.epsilon,
                                        params.delta_scale, t_max, dt, fold);
  const auto decay = fit_short_time_decay(series);

  OutputTable table;
  table.command = "echo";
  append_model_header(table.header, params);
  table.header.emplace_back("state", state_label(cfg));
  table.header.emplace_back("n_max", std::to_string(psi.n_max()));
  table.header.emplace_back("t_max", format_double(t_max));
  table.header.emplace_back("dt", format_double(dt));
  table.header.emplace_back("fold", format_double(fold));
  table.header.emplace_back("decay_rate_fit",
                            decay ? format_double(*decay) : "none");
  table.columns = {"t", "O", "cum_mean", "cum_var"};
  for (Eigen::Index i = 0; i < series.times.size(); ++i)
    table.rows.push_back({series.times(i), series.values(i), series.cum_mean(i),
                          series.cum_var(i)});

  const std::string format = checked_format(cfg);
  const std::string path = out_path(cfg, "echo", format);
  write_table(table, path, format);
  std::cout << "wrote " << path << "\n";
}

void cmd_tables(const Config& cfg) {
  cfg.require_known_keys(
      merge({kOutputKeys, {"epsilon", "scale", "t_max", "dt", "fold"}}));
  const double epsilon = cfg.get_double("epsilon", 1.0);
  const double scale = cfg.get_double("scale", 1.0);
  const double t_max = cfg.get_double("t_max", 2000.0);
  const double dt = cfg.get_double("dt", 0.01);
  // published statistics correspond to a 30 rad/time observation band
  // (30 samples per 2*pi revival); 0 disables the folding
  const double fold = cfg.get_double("fold", 30.0);

  const PureState coherent = coherent_state(2.0, default_cutoff(2.0));
  const PureState phase = phase_state(6, 8);

  OutputTable table;
  table.command = "tables";
  table.header.emplace_back("epsilon", format_double(epsilon));
  table.header.emplace_back("scale", format_double(scale));
  table.header.emplace_back("t_max", format_double(t_max));
  table.header.emplace_back("dt", format_double(dt));
  table.header.emplace_back("fold", format_double(fold));
  table.header.emplace_back("states", "coherent(alpha=2), phase(r=6)");
  table.columns = {"state", "gamma", "mean", "variance", "ref_mean",
                   "ref_variance", "delta_mean", "delta_variance"};

  for (const auto& ref : kReferenceTables) {
    const PureState& psi = std::string(ref.state) == "coherent" ? coherent : phase;
    const EchoSeries s =
        echo_series(psi, ref.gamma, epsilon, scale, t_max, dt, fold);
    const double mean = s.cum_mean(s.cum_mean.size() - 1);
    const double var = s.cum_var(s.cum_var.size() - 1);
    table.rows.push_back({std::string(ref.state), ref.gamma, mean, var, ref.mean,
                          ref.variance, mean - ref.mean, var - ref.variance});
    std::cout << ref.state << " gamma=" << ref.gamma << ": mean=" << mean
              << " (ref " << ref.mean << ", delta " << mean - ref.mean
              << "), var=" << var << " (ref " << ref.variance << ", delta "
              << var - ref.variance << ")\n";
  }

  const std::string format = checked_format(cfg);
  const std::string path = out_path(cfg, "tables", format);
  write_table(table, path, format);
  std::cout << "wrote " << path << "\n";
}

void cmd_saturation(const Config& cfg) {
  cfg.require_known_keys(merge({kOutputKeys,
                                {"epsilon", "scale", "t_max", "dt", "fold",
                                 "sweep_gamma", "sweep_phase_r", "sweep_coherent_alpha"}}));
  const double epsilon = cfg.get_double("epsilon", 1.0);
  const double scale = cfg.get_double("scale", 1.0);
  const double t_max = cfg.get_double("t_max", 2000.0);
  const double dt = cfg.get_double("dt", 0.01);
  const double fold = cfg.get_double("fold", 0.0);
  const std::vector<double> gammas = cfg.get_double_list("sweep_gamma", {2.4, 3.1});
  const std::vector<int> phase_rs =
      cfg.get_int_list("sweep_phase_r", {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15});
  const std::vector<double> alphas = cfg.get_double_list(
      "sweep_coherent_alpha", {1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0});

  struct Entry {
    std::string label;
    double gamma;
    PureState psi;
  };
  std::vector<Entry> entries;
  for (double g : gammas) {
    for (int r : phase_rs)
      entries.push_back({"phase_r" + std::to_string(r), g, phase_state(r, r + 2)});
    for (double a : alphas) {
      std::ostringstream label;
      label << "coherent_a" << a;
      entries.push_back({label.str(), g, coherent_state(a, default_cutoff(a))});
    }
  }

  std::vector<SaturationPoint> points;
  OutputTable table;
  table.columns = {"label", "gamma", "sigma_n", "mean_infty"};
  for (const auto& entry : entries) {
    const NumberStats stats = number_stats(to_density(entry.psi));
    const EchoSeries s =
        echo_series(entry.psi, entry.gamma, epsilon, scale, t_max, dt, fold);
    const double mean = s.cum_mean(s.cum_mean.size() - 1);
    const double sigma = std::sqrt(std::max(stats.variance, 0.0));
    points.push_back({sigma, mean, entry.label});
    table.rows.push_back({entry.label, entry.gamma, sigma, mean});
  }

  if (points.size() < 2)
    throw DegenerateSweep("saturation sweep needs at least two states");
  const double sigma0 = points.front().sigma_n;
  const bool all_equal =
      std::all_of(points.begin(), points.end(),
                  [&](const SaturationPoint& p) { return std::abs(p.sigma_n - sigma0) < 1e-12; });
  if (all_equal) throw DegenerateSweep("all sweep states have the same sigma_N");

  const double mu = fit_saturation(points);
  table.command = "saturation";
  table.header.emplace_back("epsilon", format_double(epsilon));
  table.header.emplace_back("scale", format_double(scale));
  table.header.emplace_back("t_max", format_double(t_max));
  table.header.emplace_back("dt", format_double(dt));
  table.header.emplace_back("fold", format_double(fold));
  table.header.emplace_back("fitted_mu", format_double(mu));
  table.header.emplace_back("reference_mu", format_double(kReferenceSaturationMu));

  const std::string format = checked_format(cfg);
  const std::string path = out_path(cfg, "saturation", format);
  write_table(table, path, format);
  std::cout << "fitted_mu = " << mu << " (reference " << kReferenceSaturationMu
            << ")\nwrote " << path << "\n";
}

void cmd_roughness(const Config& cfg) {
  cfg.require_known_keys(merge({kModelKeys, kStateKeys, kOutputKeys,
                                {"t_max", "dt", "grid_points", "half_width",
                                 "cumulative"}}));
  const GammaParams params = make_params(cfg);
  const PureState psi = make_state(cfg);
  const double t_max = cfg.get_double("t_max", 20.0);
  const double dt = cfg.get_double("dt", 0.1);
  if (!(dt > 0.0) || t_max < 0.0) throw InvalidGrid("need dt > 0 and t_max >= 0");
  const int points = cfg.get_int("grid_points", 201);
  const bool cumulative = cfg.get_bool("cumulative", false);

  const DensityMatrix rho0 = to_density(psi);
  const double half_width = cfg.get_double("half_width", -1.0);
  // evolution preserves the number distribution, so one grid serves all t
  const PhaseSpaceGrid grid = half_width > 0.0
                                  ? PhaseSpaceGrid::symmetric(half_width, points)
                                  : grid_auto(rho0, points);

  const auto samples = static_cast<Eigen::Index>(std::floor(t_max / dt + 1e-9)) + 1;
  std::vector<double> values(samples);
  for (Eigen::Index i = 0; i < samples; ++i)
    values[i] = roughness(evolve(rho0, params, double(i) * dt), grid);

  OutputTable table;
  table.command = "roughness";
  append_model_header(table.header, params);
  table.header.emplace_back("state", state_label(cfg));
  table.header.emplace_back("n_max", std::to_string(psi.n_max()));
  table.header.emplace_back("t_max", format_double(t_max));
  table.header.emplace_back("dt", format_double(dt));
  table.header.emplace_back("grid_points", std::to_string(points));
  table.header.emplace_back("grid_half_width", format_double(grid.q_max));
  table.columns = cumulative
                      ? std::vector<std::string>{"t", "R", "cum_mean", "cum_var"}
                      : std::vector<std::string>{"t", "R"};
  double mean = 0.0, m2 = 0.0;
  for (Eigen::Index i = 0; i < samples; ++i) {
    const double t = double(i) * dt;
    if (cumulative) {
      const double delta = values[i] - mean;
      mean += delta / double(i + 1);
      m2 += delta * (values[i] - mean);
      table.rows.push_back({t, values[i], mean, m2 / double(i + 1)});
    } else {
      table.rows.push_back({t, values[i]});
    }
  }

  const std::string format = checked_format(cfg);
  const std::string path = out_path(cfg, "roughness", format);
  write_table(table, path, format);
  std::cout << "wrote " << path << "\n";
}

void cmd_roughness_ensemble(const Config& cfg) {
  cfg.require_known_keys(merge({kOutputKeys,
                                {"gamma", "epsilon", "scale", "sizes",
                                 "seeds_per_size", "seed", "samples",
                                 "sample_t_min", "sample_t_max", "grid_points"}}));
  const double gamma = cfg.get_double("gamma", 1.7);
  const double epsilon = cfg.get_double("epsilon", 1.0);
  const double scale = cfg.get_double("scale", 1.0);
  const std::vector<int> sizes = cfg.get_int_list("sizes", {4, 8, 16, 32});
  const int seeds_per_size = cfg.get_int("seeds_per_size", 50);
  const std::uint64_t base_seed = cfg.get_seed("seed", 12345);
  const int samples = cfg.get_int("samples", 6);
  const double t_lo = cfg.get_double("sample_t_min", 50.0);
  const double t_hi = cfg.get_double("sample_t_max", 100.0);
  const int points = cfg.get_int("grid_points", 201);
  if (seeds_per_size < 1 || samples < 1)
    throw ConfigError("config keys 'seeds_per_size' and 'samples' must be >= 1");

  OutputTable table;
  table.command = "roughness-ensemble";
  table.columns = {"basis_size", "ensemble_mean", "ensemble_std", "min", "max"};
  std::vector<double> means;
  for (size_t si = 0; si < sizes.size(); ++si) {
    const int size = sizes[si];
    if (size < 1) throw ConfigError("config key 'sizes' must hold sizes >= 1");
    std::vector<double> per_seed(seeds_per_size);
    for (int k = 0; k < seeds_per_size; ++k) {
      const std::uint64_t seed = base_seed + 1000003ull * si + std::uint64_t(k);
      const PureState psi = random_pure_state(size - 1, seed);
      const DensityMatrix rho0 = to_density(psi);
      const PhaseSpaceGrid grid = grid_auto(rho0, points);
      double acc = 0.0;
      for (int j = 0; j < samples; ++j) {
        const double t =
            samples == 1 ? t_lo : t_lo + j * (t_hi - t_lo) / double(samples - 1);
        acc += roughness(evolve_delta(rho0, gamma, epsilon, scale, t), grid);
      }
      per_seed[k] = acc / samples;
    }
    double mean = 0.0;
    for (double v : per_seed) mean += v;
    mean /= per_seed.size();
    double var = 0.0;
    for (double v : per_seed) var += (v - mean) * (v - mean);
    var /= per_seed.size();
    means.push_back(mean);
    table.rows.push_back({double(size), mean, std::sqrt(var),
                          *std::min_element(per_seed.begin(), per_seed.end()),
                          *std::max_element(per_seed.begin(), per_seed.end())});
  }
  const bool monotone =
      std::is_sorted(means.begin(), means.end(), std::less_equal<double>());

  table.header.emplace_back("gamma", format_double(gamma));
  table.header.emplace_back("epsilon", format_double(epsilon));
  table.header.emplace_back("scale", format_double(scale));
  table.header.emplace_back("seeds_per_size", std::to_string(seeds_per_size));
  table.header.emplace_back("seed", std::to_string(base_seed));
  table.header.emplace_back("seed_rule", "seed + 1000003*size_index + k");
  table.header.emplace_back("samples", std::to_string(samples));
  table.header.emplace_back("sample_t_min", format_double(t_lo));
  table.header.emplace_back("sample_t_max", format_double(t_hi));
  table.header.emplace_back("grid_points", std::to_string(points));
  table.header.emplace_back("monotone_increasing", monotone ? "true" : "false");

  const std::string format = checked_format(cfg);
  const std::string path = out_path(cfg, "roughness-ensemble", format);
  write_table(table, path, format);
  std::cout << "monotone_increasing = " << (monotone ? "true" : "false")
            << "\nwrote " << path << "\n";
}

void cmd_wigner(const Config& cfg) {
  cfg.require_known_keys(merge({kModelKeys, kStateKeys, kOutputKeys,
                                {"t", "targets", "rop_evolution", "grid_points",
                                 "half_width"}}));
  const GammaParams params = make_params(cfg);
  const PureState psi = make_state(cfg);
  const double t = cfg.get_double("t", 0.0);
  const int points = cfg.get_int("grid_points", 201);
  const std::vector<std::string> targets =
      cfg.get_string_list("targets", {"rho", "rho_D", "rho_ND"});
  const std::string rop_evolution = cfg.get_string("rop_evolution", "delta");
  if (rop_evolution != "delta" && rop_evolution != "full")
    throw ConfigError("config key 'rop_evolution' must be delta or full");

  const std::set<std::string> known_targets = {"rho", "rho_D", "rho_ND",
                                               "Rop", "Rop_D", "Rop_ND"};
  bool wants_rho = false, wants_rop = false;
  for (const auto& target : targets) {
    if (known_targets.find(target) == known_targets.end())
      throw ConfigError("config key 'targets': unknown target '" + target + "'");
    (target.rfind("Rop", 0) == 0 ? wants_rop : wants_rho) = true;
  }

  const DensityMatrix rho0 = to_density(psi);
  const double half_width = cfg.get_double("half_width", -1.0);
  const PhaseSpaceGrid grid = half_width > 0.0
                                  ? PhaseSpaceGrid::symmetric(half_width, points)
                                  : grid_auto(rho0, points);

  std::vector<std::pair<std::string, ComplexMatrix>> ops;
  if (wants_rho) {
    const DensityMatrix rho_t = evolve(rho0, params, t);
    const auto [diag, nondiag] = split_diagonal(rho_t);
    for (const auto& target : targets) {
      if (target == "rho") ops.emplace_back(target, rho_t.entries());
      if (target == "rho_D") ops.emplace_back(target, diag);
      if (target == "rho_ND") ops.emplace_back(target, nondiag);
    }
  }
  if (wants_rop) {
    const DensityMatrix rho_t =
        rop_evolution == "delta"
            ? evolve_delta(rho0, params.gamma, params.epsilon, params.delta_scale, t)
            : evolve(rho0, params, t);
    const OverlapOperator op = overlap_operator(rho0, rho_t);
    const auto [diag, nondiag] = split_overlap_operator(op);
    for (const auto& target : targets) {
      if (target == "Rop") ops.emplace_back(target, op.entries);
      if (target == "Rop_D") ops.emplace_back(target, diag);
      if (target == "Rop_ND") ops.emplace_back(target, nondiag);
    }
  }

  const std::string format = checked_format(cfg);
  const std::string base = out_path(cfg, "wigner", format);
  const auto dot = base.rfind('.');
  const std::string stem = dot == std::string::npos ? base : base.substr(0, dot);
  const std::string ext = dot == std::string::npos ? "" : base.substr(dot);

  for (const auto& [target, op] : ops) {
    const PhaseSpaceField field = wigner(op, grid);
    OutputTable table;
    table.command = "wigner";
    append_model_header(table.header, params);
    table.header.emplace_back("state", state_label(cfg));
    table.header.emplace_back("n_max", std::to_string(psi.n_max()));
    table.header.emplace_back("t", format_double(t));
    table.header.emplace_back("target", target);
    table.header.emplace_back("rop_evolution", rop_evolution);
    table.header.emplace_back("grid_points", std::to_string(points));
    table.header.emplace_back("grid_half_width", format_double(grid.q_max));
    table.columns = {"q", "p", "value"};
    for (int i = 0; i < grid.n_q; ++i)
      for (int j = 0; j < grid.n_p; ++j)
        table.rows.push_back({grid.q(i), grid.p(j), std::real(field.values(i, j))});
    const std::string path = stem + "_" + target + ext;
    write_table(table, path, format);
    std::cout << "wrote " << path << "\n";
  }
}

}  // namespace gammaecho::cli
