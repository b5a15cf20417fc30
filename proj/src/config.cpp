#include "hubbard/config.hpp"

#include <CLI11.hpp>

namespace hubbard {

const char* command_name(Command c) {
  switch (c) {
    case Command::spectrum: return "spectrum";
    case Command::scatter: return "scatter";
    case Command::dimer: return "dimer";
    case Command::dos: return "dos";
    case Command::validate: return "validate";
    case Command::figure: return "figure";
  }
  return "?";
}

namespace {

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--J", cfg.J, "tunnel coupling (energy units)")
      ->check([](const std::string& v) -> std::string {
        double x = std::strtod(v.c_str(), nullptr);
        if (!(x > 0.0)) return "J must be positive";
        return {};
      });
  sub->add_option("--U", cfg.U, "on-site interaction (energy units)");
  sub->add_option("--d", cfg.d, "lattice constant")
      ->check([](const std::string& v) -> std::string {
        double x = std::strtod(v.c_str(), nullptr);
        if (!(x > 0.0)) return "d must be positive";
        return {};
      });
  sub->add_option("--hbar", cfg.hbar, "action unit (default 1)");
  sub->add_option("--K-points", cfg.K_points,
                  "center-of-mass momentum grid size")
      ->check(CLI::Range(2, 100000));
  sub->add_option("--k-points", cfg.k_points, "relative momentum grid size")
      ->check(CLI::Range(2, 100000));
  sub->add_option("--N", cfg.N, "relative-chain half width (oracle)")
      ->check(CLI::Range(1, 2000000));
  sub->add_option("--M", cfg.M, "ring size (oracle)")
      ->check(CLI::Range(4, 99));
  std::map<std::string, OutputFormat> fmt{{"csv", OutputFormat::csv},
                                          {"json", OutputFormat::json}};
  sub->add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(fmt, CLI::ignore_case));
  sub->add_option("--out", cfg.out, "output path (directory for figure)");
  sub->add_flag("--raw-units", cfg.raw_units,
                "emit raw units instead of J/d-scaled values");
  sub->add_flag("--freeze-timestamp", cfg.freeze_timestamp,
                "fixed timestamp for byte-reproducible output");
  sub->add_option("--kernel", cfg.kernel, "kernel backend")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  sub->add_option("--bound-energy-tol", cfg.bound_energy_tol,
                  "validation tolerance on bound energies (units of J)");
  sub->add_option("--overlap-tol", cfg.overlap_deficit_tol,
                  "validation tolerance on 1 - overlap");
  sub->add_option("--dos-bin-tol", cfg.dos_bin_rel_tol,
                  "validation tolerance on DOS histogram bins");
}

std::filesystem::path default_out(const RunConfig& cfg) {
  const char* ext = cfg.format == OutputFormat::csv ? ".csv" : ".json";
  switch (cfg.command) {
    case Command::spectrum: return std::string("spectrum") + ext;
    case Command::scatter: return std::string("scatter") + ext;
    case Command::dimer: return std::string("dimer") + ext;
    case Command::dos: return std::string("dos") + ext;
    case Command::validate: return "validation_report.json";
    case Command::figure: return "figure_data";
  }
  return "out";
}

}  // namespace

ParseResult parse_command_line(int argc, const char* const* argv) {
  ParseResult result;
  RunConfig& cfg = result.config;

  CLI::App app{"Two-boson Hubbard chain: scattering continuum, bound "
               "dimers, and exact-diagonalization cross-checks"};
  app.set_config("--config", "", "INI/TOML config file (flags win)");
  app.require_subcommand(1);
  app.fallthrough(false);

  std::map<std::string, Command> cmds{
      {"spectrum", Command::spectrum}, {"scatter", Command::scatter},
      {"dimer", Command::dimer},       {"dos", Command::dos},
      {"validate", Command::validate}, {"figure", Command::figure}};
  for (auto& [name, cmd] : cmds) {
    CLI::App* sub = app.add_subcommand(
        name, std::string("run the ") + name + " command");
    add_common_options(sub, cfg);
    sub->callback([&cfg, cmd = cmd] { cfg.command = cmd; });
  }

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::CallForHelp& e) {
    result.help = true;
    result.help_text = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (cfg.out.empty()) cfg.out = default_out(cfg);
  return result;
}

RunConfig parse_config(int argc, const char* const* argv) {
  ParseResult r = parse_command_line(argc, argv);
  if (r.help) throw UsageError("help requested");
  return r.config;
}

}  // namespace hubbard
