#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hubbard {

enum class OutputFormat { csv, json };

struct Metadata {
  double J = 1.0;
  double U = 0.0;
  double d = 1.0;
  double hbar = 1.0;
  std::optional<double> quantization_length;  // L, when DOS data is present
  std::string units = "dimensionless";        // or "raw"
  std::string command;
  std::string kernel_backend;
  std::string timestamp;
  std::string tool_version;
};

/// Column-oriented numeric table; missing cells serialize as empty CSV
/// fields / JSON nulls.
struct Table {
  Metadata meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
};

/// Shortest text that round-trips the double exactly (17 significant
/// digits, %.17g).
std::string format_double(double v);

/// RFC-4180-style CSV with a header row. Metadata goes to a sidecar
/// "<path>.meta.json". Writes are atomic (temp file + rename).
void write_csv(const Table& t, const std::filesystem::path& path);

/// Single JSON object {"metadata": {...}, "rows": [...]}; atomic write.
void write_json(const Table& t, const std::filesystem::path& path);

void write_table(const Table& t, OutputFormat f,
                 const std::filesystem::path& path);

Table read_csv(const std::filesystem::path& path);
Table read_json(const std::filesystem::path& path);

/// One spectrum-sweep row; dimer columns are absent at U = 0 and alpha is
/// additionally absent at the zone edge (localized state).
struct SpectrumRow {
  double K = 0.0;
  double E_band_min = 0.0;
  double E_band_max = 0.0;
  std::optional<double> E_dimer;
  std::optional<double> E_binding;
  std::optional<double> alpha;
};

struct SpectrumDataset {
  Metadata meta;
  std::vector<SpectrumRow> rows;

  /// Enforces the schema invariants: K strictly increasing and
  /// E_dimer^2 = U^2 + 4 J_K^2 to 1e-12 relative (raw units).
  void validate() const;
  Table to_table(bool raw_units) const;
};

}  // namespace hubbard
