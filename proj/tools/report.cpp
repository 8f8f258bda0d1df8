#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace lptrans::cli {
namespace {

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_number(*d);
  if (const long* l = std::get_if<long>(&c)) return std::to_string(*l);
  return std::get<std::string>(c);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

nlohmann::ordered_json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

}  // namespace

bool RunReport::passed() const {
  for (const CheckResult& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void RunReport::check(const std::string& name, double value, double reference, double error,
                      double tolerance) {
  checks.push_back({name, value, reference, error, tolerance, error <= tolerance, {}});
}

void RunReport::check_flag(const std::string& name, bool ok, double value, double reference) {
  checks.push_back({name, value, reference, std::abs(value - reference), 0.0, ok, {}});
}

void RunReport::fail(const std::string& name, const std::string& why) {
  CheckResult r;
  r.name = name;
  r.error = std::nan("");
  r.note = why;
  checks.push_back(r);
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string format_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string format_dat(const PlotSeries& series) {
  std::string out = "# x y\n";
  for (std::size_t i = 0; i < series.x.size(); ++i) {
    out += format_number(series.x[i]) + ' ' + format_number(series.y[i]) + '\n';
  }
  return out;
}

nlohmann::ordered_json summary_json(const RunReport& report) {
  const ExperimentConfig& c = report.config;
  nlohmann::ordered_json j;
  j["experiment"] = c.kind;
  nlohmann::ordered_json cfg;
  cfg["family"] = c.family;
  cfg["alpha"] = c.alpha;
  cfg["beta"] = c.beta;
  cfg["lambda"] = c.lambda;
  cfg["direction"] = c.direction;
  cfg["corpus"] = c.corpus;
  cfg["sweep"] = c.sweep;
  cfg["trunc"] = c.truncation;
  cfg["order"] = c.order;
  cfg["tolerance"] = c.tolerance ? nlohmann::ordered_json(*c.tolerance) : nlohmann::ordered_json();
  cfg["n_max"] = c.n_max;
  cfg["k_max"] = c.k_max;
  cfg["m_max"] = c.m_max;
  cfg["exponents"] = c.exponents;
  cfg["times"] = c.times;
  cfg["grid"] = c.grid;
  cfg["bochner_lambdas"] = c.bochner_lambdas;
  cfg["bochner_times"] = c.bochner_times;
  j["config"] = cfg;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& r : report.checks) {
    nlohmann::ordered_json e;
    e["name"] = r.name;
    e["value"] = json_number(r.value);
    e["reference"] = json_number(r.reference);
    e["error"] = json_number(r.error);
    e["tolerance"] = r.tolerance;
    e["pass"] = r.pass;
    if (!r.note.empty()) e["note"] = r.note;
    checks.push_back(e);
  }
  j["checks"] = checks;
  nlohmann::ordered_json files = nlohmann::ordered_json::array();
  for (const Table& t : report.tables) files.push_back(t.name + ".csv");
  for (const PlotSeries& p : report.plots) files.push_back(p.name + ".dat");
  j["files"] = files;
  j["passed"] = report.passed();
  j["wall_seconds"] = report.seconds;
  return j;
}

void emit(const RunReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_file(dir / "summary.json", summary_json(report).dump(2) + "\n");
  for (const Table& t : report.tables) write_file(dir / (t.name + ".csv"), format_csv(t));
  for (const PlotSeries& p : report.plots) write_file(dir / (p.name + ".dat"), format_dat(p));
}

}  // namespace lptrans::cli
