#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lptrans/family.hpp"
#include "lptrans/transference.hpp"

namespace lptrans::cli {

/// Parse failure with the offending 1-based line (0 when not tied to a line).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, const std::string& message);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

inline const std::vector<std::string> kExperimentKinds = {
    "orthocheck", "gnorm", "transfer", "linearize", "kernel", "ratios"};

struct ConfigEntry {
  std::string key;
  std::string value;
  int line;
};

struct ConfigSection {
  std::string name;
  int line;
  std::vector<ConfigEntry> entries;
};

/// Line-oriented `key = value` with `[section]` headers. Comments start with
/// '#' or ';'. Every section and key is validated against the schema here.
std::vector<ConfigSection> parse_config(std::istream& in, const std::string& source);
std::vector<ConfigSection> parse_config_file(const std::string& path);

struct ExperimentConfig {
  std::string kind;
  std::string family = "jacobi";
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 1.0;
  std::vector<std::string> corpus;
  std::vector<double> sweep = {1e2, 1e3, 1e4, 1e5};
  int truncation = 64;
  int order = 0;
  std::string out = "out";
  std::optional<double> tolerance;
  std::string direction = "gaussian";
  int n_max = 20;
  int k_max = 3;
  int m_max = 8;
  std::vector<double> exponents = {1.5, 2.0, 4.0};
  std::vector<double> times = {0.1, 0.5, 1.0};
  int grid = 32;
  std::vector<double> bochner_lambdas = {1.0, 4.0, 25.0};
  std::vector<double> bochner_times = {0.5, 1.0, 2.0};

  FamilySpec family_spec() const;
  Direction direction_kind() const;
};

/// Builds the config for `kind` from the parsed sections (the section named
/// `kind` if present, defaults otherwise) and validates parameter ranges.
ExperimentConfig resolve_config(const std::vector<ConfigSection>& sections,
                                const std::string& kind, const std::string& source);

std::vector<double> parse_number_list(const std::string& text);

}  // namespace lptrans::cli
