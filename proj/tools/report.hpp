#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace lptrans::cli {

struct CheckResult {
  std::string name;
  double value = 0.0;
  double reference = 0.0;
  double error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

using Cell = std::variant<double, long, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Two-column (x, y) series written as a whitespace-separated .dat file.
struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct RunReport {
  ExperimentConfig config;
  std::vector<CheckResult> checks;
  std::vector<Table> tables;
  std::vector<PlotSeries> plots;
  double seconds = 0.0;

  bool passed() const;
  /// Records a check where `error` is compared against `tolerance`.
  void check(const std::string& name, double value, double reference, double error,
             double tolerance);
  /// Records a boolean check; value/reference carry the diagnostic numbers.
  void check_flag(const std::string& name, bool ok, double value, double reference);
  /// Records a check that could not be computed.
  void fail(const std::string& name, const std::string& why);
};

std::string format_number(double v);
std::string format_csv(const Table& table);
std::string format_dat(const PlotSeries& series);
nlohmann::ordered_json summary_json(const RunReport& report);

/// Writes summary.json, <table>.csv and <plot>.dat into `dir` (created if
/// missing).
void emit(const RunReport& report, const std::filesystem::path& dir);

}  // namespace lptrans::cli
