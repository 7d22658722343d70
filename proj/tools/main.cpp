#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

namespace {

using gammaecho::cli::Config;

struct FlagOverrides {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> values;
};

// Registers --config plus the common override flags on a subcommand; each
// flag maps onto the equivalent config key.
void add_common_flags(CLI::App* cmd, FlagOverrides& flags) {
  cmd->add_option("--config", flags.config_path, "configuration file (key = value lines)");
  auto bind = [cmd, &flags](const std::string& flag, const std::string& key,
                            const std::string& help) {
    cmd->add_option_function<std::string>(
        flag, [&flags, key](const std::string& v) { flags.values.emplace_back(key, v); },
        help);
  };
  bind("--gamma", "gamma", "nonlinearity exponent");
  bind("--epsilon", "epsilon", "spectrum offset (> 0)");
  bind("--alpha", "alpha", "coherent/cat amplitude (real part)");
  bind("--r", "r", "phase-state cutoff");
  bind("--t-max", "t_max", "time horizon");
  bind("--dt", "dt", "sampling step");
  bind("--t", "t", "single evaluation time");
  bind("--grid-points", "grid_points", "points per phase-space axis (odd)");
  bind("--seed", "seed", "random seed");
  bind("--state", "state", "initial state: coherent/phase/fock/cat/random");
  bind("--fold", "fold", "frequency folding band (0 = off)");
  bind("--targets", "targets", "wigner targets (comma list)");
  bind("--out", "out", "output path");
  bind("--format", "format", "csv or json");
}

Config resolve(const FlagOverrides& flags) {
  Config cfg = flags.config_path.empty() ? Config() : Config::from_file(flags.config_path);
  for (const auto& [key, value] : flags.values) cfg.set(key, value);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gamma-oscillator Loschmidt echo and phase-space toolkit"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    std::function<void(const Config&)> run;
  };
  const Sub subs[] = {
      {"echo", "overlap time series with cumulative statistics", gammaecho::cli::cmd_echo},
      {"tables", "long-time echo statistics vs published reference values",
       gammaecho::cli::cmd_tables},
      {"saturation", "saturation-vs-sigma sweep and mu fit", gammaecho::cli::cmd_saturation},
      {"roughness", "roughness time series", gammaecho::cli::cmd_roughness},
      {"roughness-ensemble", "long-time roughness over random-state ensembles",
       gammaecho::cli::cmd_roughness_ensemble},
      {"wigner", "wigner fields of the state or the overlap operator",
       gammaecho::cli::cmd_wigner},
  };

  std::vector<std::unique_ptr<FlagOverrides>> flag_storage;
  for (const auto& sub : subs) {
    auto* cmd = app.add_subcommand(sub.name, sub.help);
    flag_storage.push_back(std::make_unique<FlagOverrides>());
    FlagOverrides* flags = flag_storage.back().get();
    add_common_flags(cmd, *flags);
    cmd->callback([flags, run = sub.run] { run(resolve(*flags)); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
