#include "lptrans/corpus.hpp"

#include <cmath>

#include "lptrans/errors.hpp"
#include "lptrans/measure.hpp"

namespace lptrans {
namespace {

double moment(const FamilySpec& family, int j) {
  const QuadratureRule rule = gauss_rule(MeasureSpec::for_family(family), 4);
  return integrate([j](double x) { return std::pow(x, j); }, rule);
}

}  // namespace

NamedFunction corpus_member(const FamilySpec& family, const std::string& name) {
  if (name == "one") return {name, [](double) { return 1.0; }};
  if (name == "x") return {name, [](double x) { return x; }};
  if (name == "xc") {
    const double m = moment(family, 1);
    return {name, [m](double x) { return x - m; }};
  }
  if (name == "x2c") {
    const double m = moment(family, 2);
    return {name, [m](double x) { return x * x - m; }};
  }
  if (name == "phi3") {
    return {name, [family](double x) { return eval_orthonormal(family, 3, x); }};
  }
  if (name == "smooth") {
    const double s = family.kind() == FamilyKind::Laguerre ? -0.5 : 0.5;
    return {name, [s](double x) { return std::exp(s * x); }};
  }
  throw ParameterError("unknown corpus member: " + name);
}

std::vector<NamedFunction> standard_corpus(const FamilySpec& family) {
  std::vector<NamedFunction> out;
  for (const char* n : {"one", "x", "xc", "x2c", "phi3", "smooth"}) {
    out.push_back(corpus_member(family, n));
  }
  return out;
}

std::vector<NamedFunction> mean_zero_corpus(const FamilySpec& family) {
  std::vector<NamedFunction> out;
  for (const char* n : {"xc", "x2c", "phi3"}) out.push_back(corpus_member(family, n));
  return out;
}

}  // namespace lptrans
