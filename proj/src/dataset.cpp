#include "hubbard/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hubbard {

namespace {

using nlohmann::json;

json meta_to_json(const Metadata& m) {
  json j{{"J", m.J},
         {"U", m.U},
         {"d", m.d},
         {"hbar", m.hbar},
         {"units", m.units},
         {"command", m.command},
         {"kernel_backend", m.kernel_backend},
         {"timestamp", m.timestamp},
         {"tool_version", m.tool_version}};
  if (m.quantization_length)
    j["quantization_length"] = *m.quantization_length;
  return j;
}

Metadata meta_from_json(const json& j) {
  Metadata m;
  m.J = j.value("J", 1.0);
  m.U = j.value("U", 0.0);
  m.d = j.value("d", 1.0);
  m.hbar = j.value("hbar", 1.0);
  if (j.contains("quantization_length"))
    m.quantization_length = j["quantization_length"].get<double>();
  m.units = j.value("units", "dimensionless");
  m.command = j.value("command", "");
  m.kernel_backend = j.value("kernel_backend", "");
  m.timestamp = j.value("timestamp", "");
  m.tool_version = j.value("tool_version", "");
  return m;
}

bool needs_quoting(const std::string& s) {
  return s.find_first_of(",\"\r\n") != std::string::npos;
}

std::string csv_field(const std::string& s) {
  if (!needs_quoting(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

/// Write through a temp file in the same directory, then rename, so a
/// failure never leaves a partial output behind.
class AtomicWriter {
 public:
  explicit AtomicWriter(const std::filesystem::path& path) : final_(path) {
    std::random_device rd;
    tmp_ = path;
    tmp_ += ".tmp-" + std::to_string(rd());
    stream_.open(tmp_, std::ios::binary | std::ios::trunc);
    if (!stream_)
      throw std::runtime_error("cannot open for writing: " + path.string());
  }

  ~AtomicWriter() {
    if (!committed_) {
      stream_.close();
      std::error_code ec;
      std::filesystem::remove(tmp_, ec);
    }
  }

  std::ofstream& stream() { return stream_; }

  void commit() {
    stream_.flush();
    if (!stream_)
      throw std::runtime_error("write failed: " + final_.string());
    stream_.close();
    std::filesystem::rename(tmp_, final_);
    committed_ = true;
  }

 private:
  std::filesystem::path final_;
  std::filesystem::path tmp_;
  std::ofstream stream_;
  bool committed_ = false;
};

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const Table& t, const std::filesystem::path& path) {
  AtomicWriter w(path);
  auto& os = w.stream();
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) os << ',';
    os << csv_field(t.columns[c]);
  }
  os << "\r\n";
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size())
      throw std::invalid_argument("write_csv: ragged row");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      if (row[c]) os << format_double(*row[c]);
    }
    os << "\r\n";
  }
  w.commit();

  AtomicWriter mw(path.string() + ".meta.json");
  mw.stream() << meta_to_json(t.meta).dump(2) << '\n';
  mw.commit();
}

void write_json(const Table& t, const std::filesystem::path& path) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size())
      throw std::invalid_argument("write_json: ragged row");
    json r;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c])
        r[t.columns[c]] = *row[c];
      else
        r[t.columns[c]] = nullptr;
    }
    rows.push_back(std::move(r));
  }
  json doc{{"metadata", meta_to_json(t.meta)},
           {"columns", t.columns},
           {"rows", std::move(rows)}};
  AtomicWriter w(path);
  w.stream() << doc.dump(2) << '\n';
  w.commit();
}

void write_table(const Table& t, OutputFormat f,
                 const std::filesystem::path& path) {
  if (f == OutputFormat::csv)
    write_csv(t, path);
  else
    write_json(t, path);
}

Table read_csv(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open: " + path.string());

  Table t;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && is.peek() == EOF) break;

    // split; quoted fields are only ever produced for the header
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          cur += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        fields.push_back(std::move(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    fields.push_back(std::move(cur));

    if (header) {
      t.columns = std::move(fields);
      header = false;
      continue;
    }
    std::vector<std::optional<double>> row;
    row.reserve(fields.size());
    for (const std::string& f : fields) {
      if (f.empty()) {
        row.push_back(std::nullopt);
      } else {
        row.push_back(std::strtod(f.c_str(), nullptr));
      }
    }
    t.rows.push_back(std::move(row));
  }

  std::filesystem::path meta = path.string() + ".meta.json";
  if (std::filesystem::exists(meta)) {
    std::ifstream ms(meta);
    json j = json::parse(ms);
    t.meta = meta_from_json(j);
  }
  return t;
}

Table read_json(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path.string());
  json doc = json::parse(is);
  Table t;
  t.meta = meta_from_json(doc.at("metadata"));
  t.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const auto& r : doc.at("rows")) {
    std::vector<std::optional<double>> row;
    row.reserve(t.columns.size());
    for (const auto& col : t.columns) {
      const auto& v = r.at(col);
      if (v.is_null())
        row.push_back(std::nullopt);
      else
        row.push_back(v.get<double>());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

void SpectrumDataset::validate() const {
  const double J = meta.J, U = meta.U, d = meta.d;
  double prev = -std::numeric_limits<double>::infinity();
  for (const SpectrumRow& r : rows) {
    if (!(r.K > prev))
      throw std::runtime_error("SpectrumDataset: K not strictly increasing");
    prev = r.K;
    if (r.E_dimer) {
      double jk = 2.0 * J * std::cos(0.5 * r.K * d);
      if (std::abs(std::abs(r.K * d) - std::numbers::pi) <=
          1e-12 * std::numbers::pi)
        jk = 0.0;
      double rhs = U * U + 4.0 * jk * jk;
      double lhs = *r.E_dimer * *r.E_dimer;
      if (std::abs(lhs - rhs) > 1e-12 * std::max(lhs, rhs))
        throw std::runtime_error(
            "SpectrumDataset: E_dimer^2 != U^2 + 4 J_K^2");
    }
  }
}

Table SpectrumDataset::to_table(bool raw_units) const {
  Table t;
  t.meta = meta;
  t.meta.units = raw_units ? "raw" : "dimensionless";
  t.columns = {"K", "E_band_min", "E_band_max", "E_dimer", "E_binding",
               "alpha"};
  const double kq = raw_units ? 1.0 : meta.d;   // momentum * d
  const double eq = raw_units ? 1.0 : 1.0 / meta.J;  // energy / J
  t.rows.reserve(rows.size());
  for (const SpectrumRow& r : rows) {
    std::vector<std::optional<double>> row(6);
    row[0] = r.K * kq;
    row[1] = r.E_band_min * eq;
    row[2] = r.E_band_max * eq;
    if (r.E_dimer) row[3] = *r.E_dimer * eq;
    if (r.E_binding) row[4] = *r.E_binding * eq;
    if (r.alpha) row[5] = *r.alpha;
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace hubbard
