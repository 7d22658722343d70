#pragma once

#include "config.hpp"

namespace gammaecho::cli {

// Subcommand entry points. They throw (ConfigError or the library error
// types) on invalid input; main translates that into a nonzero exit.
void cmd_echo(const Config& cfg);
void cmd_tables(const Config& cfg);
void cmd_saturation(const Config& cfg);
void cmd_roughness(const Config& cfg);
void cmd_roughness_ensemble(const Config& cfg);
void cmd_wigner(const Config& cfg);

}  // namespace gammaecho::cli
