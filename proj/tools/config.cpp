#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lptrans/errors.hpp"

namespace lptrans::cli {
namespace {

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"orthocheck", {"family", "alpha", "beta", "lambda", "n_max", "order", "tolerance", "out"}},
      {"gnorm",
       {"family", "alpha", "beta", "lambda", "corpus", "trunc", "order", "exponents",
        "tolerance", "out"}},
      {"transfer",
       {"direction", "alpha", "corpus", "sweep", "k_max", "trunc", "order", "tolerance", "out"}},
      {"linearize", {"alpha", "beta", "m_max", "order", "tolerance", "out"}},
      {"kernel",
       {"alpha", "beta", "times", "grid", "bochner_lambdas", "bochner_times", "tolerance",
        "out"}},
      {"ratios",
       {"family", "alpha", "beta", "lambda", "corpus", "trunc", "order", "exponents",
        "tolerance", "out"}},
  };
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_key(const std::string& k) {
  if (k.empty() || !(std::islower(static_cast<unsigned char>(k[0])) || k[0] == '_')) return false;
  return std::all_of(k.begin(), k.end(), [](char c) {
    return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
           c == '_';
  });
}

double to_double(const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty() || !std::isfinite(v)) {
    throw std::invalid_argument("not a finite number: '" + t + "'");
  }
  return v;
}

int to_int(const std::string& text) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw std::invalid_argument("not an integer: '" + t + "'");
  }
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw std::invalid_argument("empty list item");
    out.push_back(item);
  }
  return out;
}

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(line > 0 ? source + ":" + std::to_string(line) + ": " + message
                                  : source + ": " + message),
      line_(line) {}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (const std::string& item : split_list(text)) out.push_back(to_double(item));
  return out;
}

std::vector<ConfigSection> parse_config(std::istream& in, const std::string& source) {
  std::vector<ConfigSection> sections;
  std::set<std::string> seen_sections;
  std::set<std::string> seen_keys;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = trim(raw);
    if (text.empty() || text[0] == '#' || text[0] == ';') continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw ConfigError(source, line, "malformed section header");
      const std::string name = trim(text.substr(1, text.size() - 2));
      if (!schema().count(name)) throw ConfigError(source, line, "unknown section [" + name + "]");
      if (!seen_sections.insert(name).second) {
        throw ConfigError(source, line, "duplicate section [" + name + "]");
      }
      sections.push_back({name, line, {}});
      seen_keys.clear();
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(source, line, "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    const auto hash = value.find(" #");
    if (hash != std::string::npos) value = trim(value.substr(0, hash));
    if (!valid_key(key)) throw ConfigError(source, line, "invalid key '" + key + "'");
    if (sections.empty()) throw ConfigError(source, line, "key '" + key + "' outside any section");
    const auto& allowed = schema().at(sections.back().name);
    if (!allowed.count(key)) {
      throw ConfigError(source, line,
                        "unknown key '" + key + "' in [" + sections.back().name + "]");
    }
    if (!seen_keys.insert(key).second) throw ConfigError(source, line, "duplicate key '" + key + "'");
    if (value.empty()) throw ConfigError(source, line, "empty value for '" + key + "'");
    sections.back().entries.push_back({key, value, line});
  }
  return sections;
}

std::vector<ConfigSection> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "cannot open config file");
  return parse_config(in, path);
}

FamilySpec ExperimentConfig::family_spec() const {
  if (family == "jacobi") return FamilySpec::jacobi(alpha, beta);
  if (family == "gegenbauer") return FamilySpec::gegenbauer(lambda);
  if (family == "hermite") return FamilySpec::hermite();
  if (family == "laguerre") return FamilySpec::laguerre(alpha);
  throw ParameterError("unknown family '" + family + "'");
}

Direction ExperimentConfig::direction_kind() const {
  return direction == "laguerre" ? Direction::ToLaguerre : Direction::ToGaussian;
}

ExperimentConfig resolve_config(const std::vector<ConfigSection>& sections,
                                const std::string& kind, const std::string& source) {
  if (!schema().count(kind)) throw ConfigError(source, 0, "unknown experiment '" + kind + "'");
  ExperimentConfig c;
  c.kind = kind;
  if (kind == "transfer") c.corpus = {"xc", "x2c", "phi3"};
  int family_line = 0;
  std::map<std::string, int> param_line;
  for (const ConfigSection& s : sections) {
    if (s.name != kind) continue;
    for (const ConfigEntry& e : s.entries) {
      try {
        if (e.key == "family") {
          if (e.value != "jacobi" && e.value != "gegenbauer" && e.value != "hermite" &&
              e.value != "laguerre") {
            throw std::invalid_argument("unknown family '" + e.value + "'");
          }
          c.family = e.value;
          family_line = e.line;
        } else if (e.key == "alpha") {
          c.alpha = to_double(e.value);
          param_line["alpha"] = e.line;
        } else if (e.key == "beta") {
          c.beta = to_double(e.value);
          param_line["beta"] = e.line;
        } else if (e.key == "lambda") {
          c.lambda = to_double(e.value);
          param_line["lambda"] = e.line;
        } else if (e.key == "corpus") {
          c.corpus = split_list(e.value);
        } else if (e.key == "sweep") {
          c.sweep = parse_number_list(e.value);
          for (double v : c.sweep) {
            if (!(v > 0.0)) throw std::invalid_argument("sweep values must be > 0");
          }
        } else if (e.key == "trunc") {
          c.truncation = to_int(e.value);
          if (c.truncation < 1 || c.truncation > kDefaultDegreeCap) {
            throw std::invalid_argument("trunc must be in [1, 256]");
          }
        } else if (e.key == "order") {
          c.order = to_int(e.value);
          if (c.order < 1 || c.order > kMaxQuadratureOrder) {
            throw std::invalid_argument("order must be in [1, 512]");
          }
        } else if (e.key == "tolerance") {
          c.tolerance = to_double(e.value);
          if (!(*c.tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");
        } else if (e.key == "out") {
          c.out = e.value;
        } else if (e.key == "direction") {
          if (e.value != "gaussian" && e.value != "laguerre") {
            throw std::invalid_argument("direction must be gaussian or laguerre");
          }
          c.direction = e.value;
        } else if (e.key == "n_max") {
          c.n_max = to_int(e.value);
          if (c.n_max < 0 || c.n_max > 100) throw std::invalid_argument("n_max must be in [0, 100]");
        } else if (e.key == "k_max") {
          c.k_max = to_int(e.value);
          if (c.k_max < 0 || c.k_max > 12) throw std::invalid_argument("k_max must be in [0, 12]");
        } else if (e.key == "m_max") {
          c.m_max = to_int(e.value);
          if (c.m_max < 0 || c.m_max > 64) throw std::invalid_argument("m_max must be in [0, 64]");
        } else if (e.key == "exponents") {
          c.exponents = parse_number_list(e.value);
          for (double p : c.exponents) {
            if (!(p > 1.0)) throw std::invalid_argument("exponents must be > 1");
          }
        } else if (e.key == "times") {
          c.times = parse_number_list(e.value);
          for (double t : c.times) {
            if (!(t > 0.0)) throw std::invalid_argument("times must be > 0");
          }
        } else if (e.key == "grid") {
          c.grid = to_int(e.value);
          if (c.grid < 1 || c.grid > 1024) throw std::invalid_argument("grid must be in [1, 1024]");
        } else if (e.key == "bochner_lambdas") {
          c.bochner_lambdas = parse_number_list(e.value);
        } else if (e.key == "bochner_times") {
          c.bochner_times = parse_number_list(e.value);
        }
      } catch (const std::invalid_argument& ex) {
        throw ConfigError(source, e.line, e.key + ": " + ex.what());
      }
    }
  }
  try {
    (void)c.family_spec();
    if (kind == "transfer" && c.direction == "laguerre") (void)FamilySpec::laguerre(c.alpha);
    if (kind == "linearize" || kind == "kernel") (void)FamilySpec::jacobi(c.alpha, c.beta);
  } catch (const ParameterError& ex) {
    int line = family_line;
    if (!(c.alpha > -1.0) && param_line.count("alpha")) line = param_line["alpha"];
    else if (!(c.beta > -1.0) && param_line.count("beta")) line = param_line["beta"];
    else if (!(c.lambda > 0.0) && param_line.count("lambda")) line = param_line["lambda"];
    throw ConfigError(source, line, ex.what());
  }
  return c;
}

}  // namespace lptrans::cli
