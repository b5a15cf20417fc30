#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "hubbard/dataset.hpp"

namespace hubbard {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Command { spectrum, scatter, dimer, dos, validate, figure };

const char* command_name(Command c);

/// Thrown on bad command lines; the CLI maps it to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::spectrum;

  double J = 1.0;
  double U = -5.0;
  double d = 1.0;
  double hbar = 1.0;

  int K_points = 201;
  int k_points = 201;
  int N = 200;   // relative-chain half width
  int M = 24;    // ring size

  OutputFormat format = OutputFormat::csv;
  std::filesystem::path out;  // default derived from the command
  bool raw_units = false;
  bool freeze_timestamp = false;
  std::string kernel = "auto";  // auto | scalar | avx2

  // validation tolerances (exposed so failures can be injected)
  double bound_energy_tol = 1e-8;
  double overlap_deficit_tol = 1e-8;
  double dos_bin_rel_tol = 0.05;
};

/// Parse argv (and an optional --config file; flags win). Throws UsageError
/// with a one-line diagnostic naming the offending flag.
RunConfig parse_config(int argc, const char* const* argv);

/// "" for --help style early exits: returns the help text instead of a
/// config when the command line asks for it.
struct ParseResult {
  bool help = false;
  std::string help_text;
  RunConfig config;
};
ParseResult parse_command_line(int argc, const char* const* argv);

}  // namespace hubbard
