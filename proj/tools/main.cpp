#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "config.hpp"
#include "experiments.hpp"
#include "report.hpp"

namespace {

struct Overrides {
  std::string config;
  std::optional<std::string> out;
  std::optional<int> order;
  std::optional<int> trunc;
  std::optional<std::string> sweep;
  std::optional<double> tolerance;
};

int execute(const std::string& kind, const Overrides& o) {
  using namespace lptrans::cli;
  ExperimentConfig cfg;
  try {
    std::vector<ConfigSection> sections;
    const std::string source = o.config.empty() ? "<defaults>" : o.config;
    if (!o.config.empty()) sections = parse_config_file(o.config);
    cfg = resolve_config(sections, kind, source);
    if (o.out) cfg.out = *o.out;
    if (o.order) {
      if (*o.order < 1 || *o.order > lptrans::kMaxQuadratureOrder) {
        throw ConfigError("--order", 0, "order must be in [1, 512]");
      }
      cfg.order = *o.order;
    }
    if (o.trunc) {
      if (*o.trunc < 1 || *o.trunc > lptrans::kDefaultDegreeCap) {
        throw ConfigError("--trunc", 0, "trunc must be in [1, 256]");
      }
      cfg.truncation = *o.trunc;
    }
    if (o.sweep) {
      try {
        cfg.sweep = parse_number_list(*o.sweep);
      } catch (const std::exception& e) {
        throw ConfigError("--sweep", 0, e.what());
      }
      for (double v : cfg.sweep) {
        if (!(v > 0.0)) throw ConfigError("--sweep", 0, "sweep values must be > 0");
      }
    }
    if (o.tolerance) {
      if (!(*o.tolerance > 0.0)) throw ConfigError("--tolerance", 0, "tolerance must be > 0");
      cfg.tolerance = *o.tolerance;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  const RunReport report = run(cfg);
  try {
    emit(report, cfg.out);
  } catch (const std::exception& e) {
    std::cerr << "output error: " << e.what() << "\n";
    return 2;
  }
  for (const CheckResult& c : report.checks) {
    std::printf("%s  %-40s error=%.3e tol=%.1e%s%s\n", c.pass ? "pass" : "FAIL", c.name.c_str(),
                c.error, c.tolerance, c.note.empty() ? "" : "  ", c.note.c_str());
  }
  std::printf("%s: %zu checks, %s, results in %s\n", kind.c_str(), report.checks.size(),
              report.passed() ? "all passed" : "FAILED", cfg.out.c_str());
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal polynomial transference experiments"};
  app.require_subcommand(1);
  Overrides o;
  std::string chosen;
  for (const std::string& kind : lptrans::cli::kExperimentKinds) {
    CLI::App* sub = app.add_subcommand(kind, "run the " + kind + " experiment");
    sub->add_option("--config", o.config, "config file")->check(CLI::ExistingFile);
    sub->add_option("--out", o.out, "output directory");
    sub->add_option("--order", o.order, "quadrature order");
    sub->add_option("--trunc", o.trunc, "spectral truncation N");
    sub->add_option("--sweep", o.sweep, "comma-separated sweep values");
    sub->add_option("--tolerance", o.tolerance, "tolerance override");
    sub->callback([&chosen, kind] { chosen = kind; });
  }
  CLI11_PARSE(app, argc, argv);
  return execute(chosen, o);
}
