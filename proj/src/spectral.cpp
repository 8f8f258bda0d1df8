#include "lptrans/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lptrans/errors.hpp"
#include "lptrans/simd/kernels.hpp"

namespace lptrans {
namespace {

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw ParameterError("semigroup time must be finite and >= 0");
  }
}

int cap_for(int n) { return std::max(n, kDefaultDegreeCap); }

// max(|p̂_n(1)|, |p̂_n(−1)|) for a Jacobi-type family.
double endpoint_bound(const FamilySpec& family, int n) {
  const double a = std::abs(eval_orthonormal(family, n, 1.0, cap_for(n)));
  const double b = std::abs(eval_orthonormal(family, n, -1.0, cap_for(n)));
  return std::max(a, b);
}

}  // namespace

double semigroup_multiplier(SemigroupKind kind, double eigenvalue, double t) {
  check_time(t);
  if (t == 0.0) return 1.0;
  const double rate = kind == SemigroupKind::Heat ? eigenvalue : std::sqrt(eigenvalue);
  return std::exp(-t * rate);
}

BasisTable basis_table(const FamilySpec& family, int n_max,
                       std::span<const double> points) {
  if (n_max < 0) throw ParameterError("basis_table: negative degree");
  BasisTable t;
  t.n_max = n_max;
  t.points.assign(points.begin(), points.end());
  t.values.resize((static_cast<std::size_t>(n_max) + 1) * points.size());
  const Recurrence r = orthonormal_recurrence(family, n_max);
  simd::orthonormal_table(r.diag, r.offdiag, n_max, t.points, t.values);
  return t;
}

SpectralCoefficients expand_values(std::span<const double> samples,
                                   const FamilySpec& family, int truncation,
                                   const QuadratureRule& rule) {
  if (truncation < 0) throw ParameterError("expand: negative truncation");
  if (!(rule.measure == MeasureSpec::for_family(family))) {
    throw ParameterError("expand: quadrature measure does not match " + family.name());
  }
  if (rule.order() < truncation + 16) {
    throw ParameterError("expand: rule order " + std::to_string(rule.order()) +
                         " below truncation + 16");
  }
  if (samples.size() != rule.nodes.size()) {
    throw ParameterError("expand: sample count does not match rule order");
  }
  std::vector<double> weighted(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double v = samples[i];
    if (!std::isfinite(v)) {
      throw NumericalError("expand: non-finite sample at node " +
                           std::to_string(rule.nodes[i]));
    }
    if (rule.weights[i] != 0.0 || v == 0.0) {
      weighted[i] = rule.weights[i] * v;
    } else {
      weighted[i] = std::copysign(std::exp(rule.log_weights[i] + std::log(std::abs(v))), v);
    }
  }
  const BasisTable table = basis_table(family, truncation, rule.nodes);
  SpectralCoefficients c{family, std::vector<double>(static_cast<std::size_t>(truncation) + 1)};
  double norm2 = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) norm2 += weighted[i] * samples[i];
  // Coefficients below the quadrature rounding floor are pure noise; far
  // nodes would amplify them without bound.
  const double floor = 16.0 * (truncation + 1) * std::numeric_limits<double>::epsilon() *
                       std::sqrt(std::max(norm2, 0.0));
  for (int k = 0; k <= truncation; ++k) {
    const double v = simd::dot(table.row(k), weighted);
    c.coeffs[static_cast<std::size_t>(k)] = std::abs(v) <= floor ? 0.0 : v;
  }
  return c;
}

SpectralCoefficients expand(const RealFunction& f, const FamilySpec& family,
                            int truncation, const QuadratureRule& rule) {
  return expand_values(sample(f, rule), family, truncation, rule);
}

double reconstruct(const SpectralCoefficients& c, double x) {
  const int n = c.truncation();
  if (n < 0) return 0.0;
  const std::vector<double> p = eval_orthonormal_all(c.family, n, x, cap_for(n));
  double s = 0.0;
  for (int k = n; k >= 0; --k) {
    s += c.coeffs[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(k)];
  }
  return s;
}

std::vector<double> reconstruct(const SpectralCoefficients& c,
                                std::span<const double> points) {
  std::vector<double> out(points.size(), 0.0);
  const int n = c.truncation();
  if (n < 0) return out;
  const BasisTable table = basis_table(c.family, n, points);
  for (int k = 0; k <= n; ++k) {
    const double ck = c.coeffs[static_cast<std::size_t>(k)];
    if (ck == 0.0) continue;
    const auto row = table.row(k);
    for (std::size_t i = 0; i < points.size(); ++i) out[i] += ck * row[i];
  }
  return out;
}

double energy(const SpectralCoefficients& c) {
  double s = 0.0;
  for (double v : c.coeffs) s += v * v;
  return s;
}

std::vector<double> to_szego(const SpectralCoefficients& c) {
  std::vector<double> out(c.coeffs.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = c.coeffs[k] * std::exp(-0.5 * log_squared_norm(c.family, static_cast<int>(k)));
  }
  return out;
}

SpectralCoefficients from_szego(const FamilySpec& family, std::span<const double> szego) {
  SpectralCoefficients c{family, std::vector<double>(szego.size())};
  for (std::size_t k = 0; k < szego.size(); ++k) {
    c.coeffs[k] = szego[k] * std::exp(0.5 * log_squared_norm(family, static_cast<int>(k)));
  }
  return c;
}

SpectralCoefficients semigroup_apply(const SpectralCoefficients& c,
                                     SemigroupKind kind, double t) {
  check_time(t);
  SpectralCoefficients out = c;
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
    out.coeffs[k] *=
        semigroup_multiplier(kind, eigenvalue(c.family, static_cast<int>(k)), t);
  }
  return out;
}

SpectralCoefficients poisson_time_derivative(const SpectralCoefficients& c, double t) {
  check_time(t);
  SpectralCoefficients out = c;
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
    const double s = std::sqrt(eigenvalue(c.family, static_cast<int>(k)));
    out.coeffs[k] *= -s * std::exp(-t * s);
  }
  return out;
}

SpectralCoefficients poisson_space_derivative(const SpectralCoefficients& c, double t) {
  check_time(t);
  const int n = c.truncation();
  SpectralCoefficients out{derivative_shift(c.family, 1).target, {}};
  if (n < 1) {
    out.coeffs.assign(1, 0.0);
    return out;
  }
  out.coeffs.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    out.coeffs[static_cast<std::size_t>(k) - 1] =
        c.coeffs[static_cast<std::size_t>(k)] *
        semigroup_multiplier(SemigroupKind::Poisson, eigenvalue(c.family, k), t) *
        orthonormal_derivative_factor(c.family, k);
  }
  return out;
}

double kernel(const FamilySpec& family, double t, double x, double y, int truncation) {
  if (!family.is_jacobi_type()) {
    throw ParameterError("kernel: Jacobi-type family required");
  }
  if (!(t > 0.0)) throw ParameterError("kernel: t must be > 0");
  if (truncation < 1) throw ParameterError("kernel: truncation must be >= 1");
  const int cap = cap_for(truncation);
  const std::vector<double> px = eval_orthonormal_all(family, truncation, x, cap);
  const std::vector<double> py = eval_orthonormal_all(family, truncation, y, cap);
  double sum = 0.0;
  for (int k = 0; k < truncation; ++k) {
    const std::size_t ku = static_cast<std::size_t>(k);
    sum += std::exp(-eigenvalue(family, k) * t) * px[ku] * py[ku];
  }
  const std::size_t nu = static_cast<std::size_t>(truncation);
  const double last = std::exp(-eigenvalue(family, truncation) * t) * px[nu] * py[nu];
  sum += last;
  const double bound = std::max(std::abs(last), std::exp(-eigenvalue(family, truncation) * t) *
                                                    std::pow(endpoint_bound(family, truncation), 2));
  if (!(bound < 1e-14 * std::abs(sum))) {
    throw NumericalError("kernel: truncation " + std::to_string(truncation) +
                         " misses the 1e-14 budget at t = " + std::to_string(t));
  }
  return sum;
}

int kernel_truncation(const FamilySpec& family, double t) {
  if (!family.is_jacobi_type()) {
    throw ParameterError("kernel_truncation: Jacobi-type family required");
  }
  if (!(t > 0.0)) throw ParameterError("kernel_truncation: t must be > 0");
  for (int n = 1; n <= kDefaultDegreeCap; ++n) {
    const double b = endpoint_bound(family, n);
    if (std::exp(-eigenvalue(family, n) * t) * b * b < 1e-30) return n;
  }
  throw NumericalError("kernel_truncation: no N within the degree cap for t = " +
                       std::to_string(t));
}

double bochner_integral(double lambda, double t, int order) {
  if (!(lambda >= 0.0) || !(t >= 0.0)) {
    throw ParameterError("bochner_integral: lambda and t must be >= 0");
  }
  const double c = lambda * t * t / 4.0;
  const double a = std::max(std::sqrt(c), 1.0);
  // Head: u = s², ∫_0^a e^{−u} u^{−½} e^{−c/u} du = ∫_0^{√a} 2 e^{−s²−c/s²} ds,
  // on panels halving towards the layer at s ≈ √c.
  const QuadratureRule legendre = gauss_rule(MeasureSpec::jacobi_beta(0.0, 0.0), order);
  std::vector<double> breaks = {std::sqrt(a)};
  const double floor = std::sqrt(c) / 8.0;
  while (c > 0.0 && breaks.back() / 2.0 > floor) breaks.push_back(breaks.back() / 2.0);
  breaks.push_back(0.0);
  double head = 0.0;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double lo = breaks[p + 1], len = breaks[p] - breaks[p + 1];
    double panel = 0.0;
    for (int i = 0; i < legendre.order(); ++i) {
      const std::size_t iu = static_cast<std::size_t>(i);
      const double s = lo + 0.5 * len * (legendre.nodes[iu] + 1.0);
      panel += legendre.weights[iu] * 2.0 * std::exp(-s * s - c / (s * s));
    }
    head += panel * len;
  }
  // Tail: u = a + v against e^{−v} dv.
  const QuadratureRule laguerre = gauss_rule(MeasureSpec::gamma(0.0), order);
  double tail = 0.0;
  for (int i = 0; i < laguerre.order(); ++i) {
    const std::size_t iu = static_cast<std::size_t>(i);
    const double u = a + laguerre.nodes[iu];
    tail += laguerre.weights[iu] * std::exp(-c / u) / std::sqrt(u);
  }
  tail *= std::exp(-a);
  return (head + tail) / std::sqrt(std::numbers::pi);
}

double bochner_check(double lambda, double t) {
  return std::abs(bochner_integral(lambda, t) - std::exp(-std::sqrt(lambda) * t));
}

}  // namespace lptrans
