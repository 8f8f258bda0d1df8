#include "lptrans/transference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lptrans/errors.hpp"
#include "lptrans/gfunction.hpp"
#include "lptrans/parallel.hpp"
#include "lptrans/special.hpp"
#include "lptrans/spectral.hpp"

namespace lptrans {
namespace {

constexpr int kWindowOrder = 128;

ScalingMap map_for(const TransferOptions& o, double parameter) {
  return o.direction == Direction::ToGaussian ? ScalingMap::to_gaussian(parameter)
                                              : ScalingMap::to_laguerre(o.alpha, parameter);
}

int order_for(const TransferOptions& o) {
  return o.order > 0 ? o.order : default_order(o.truncation);
}

template <typename PointFn>
ConvergenceReport run_sweep(const std::string& quantity, std::span<const double> sweep,
                            PointFn&& point) {
  ConvergenceReport report;
  report.quantity = quantity;
  report.points.resize(sweep.size());
  parallel_for(sweep.size(), [&](std::size_t i) { report.points[i] = point(sweep[i]); });
  std::vector<double> params, errors;
  for (const SweepPoint& p : report.points) {
    params.push_back(p.parameter);
    errors.push_back(p.error);
  }
  report.fit = fit_decay(params, errors);
  return report;
}

// log of the F-weight (1−y²/λ)^{λ/2−¼} e^{y²/2}, or (1−y/β)^{β/2} e^{y/2}.
double log_big_weight(const ScalingMap& map, double y) {
  if (map.direction == Direction::ToGaussian) {
    const double l = map.lambda;
    return (l / 2.0 - 0.25) * std::log1p(-y * y / l) + y * y / 2.0;
  }
  const double b = map.beta;
  return (b / 2.0) * std::log1p(-y / b) + y / 2.0;
}

double log_small_weight(const ScalingMap& map, double y, double p) {
  if (map.direction == Direction::ToGaussian) {
    const double l = map.lambda;
    return (l / p - 1.0 / (2.0 * p)) * std::log1p(-y * y / l) + y * y / p;
  }
  const double b = map.beta;
  return (b / p) * std::log1p(-y / b) + y / p;
}

double log_omega(const ScalingMap& map, double y, double p) {
  const double c = 0.5 - 1.0 / p;
  if (map.direction == Direction::ToGaussian) {
    const double l = map.lambda;
    return c * (y * y + (l - 0.5) * std::log1p(-y * y / l));
  }
  const double b = map.beta;
  return c * (y + b * std::log1p(-y / b));
}

bool in_window(const ScalingMap& map, double window, double y) {
  if (map.direction == Direction::ToGaussian) return std::abs(y) <= window;
  return y > 0.0 && y <= window;
}

void check_window(const ScalingMap& map, double window) {
  if (!(window > 0.0)) throw ParameterError("window radius must be > 0");
  const bool ok = map.direction == Direction::ToGaussian ? std::sqrt(map.lambda) > window
                                                         : map.beta > window;
  if (!ok) {
    throw ParameterError("window condition violated: parameter too small for K = " +
                         std::to_string(window));
  }
}

std::vector<double> window_grid(const ScalingMap& map, double window, int points) {
  if (points < 2) throw ParameterError("window grid needs at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        map.direction == Direction::ToGaussian
            ? -window + 2.0 * window * i / (points - 1)
            : window * (i + 1) / points;
  }
  return grid;
}

SpectralCoefficients expand_scaled(const RealFunction& phi, const ScalingMap& map,
                                   int truncation) {
  const FamilySpec fam = map.jacobi_family();
  const QuadratureRule rule =
      gauss_rule(MeasureSpec::for_family(fam), default_order(truncation));
  return expand(scale_function(phi, map), fam, truncation, rule);
}

std::vector<double> to_x(const ScalingMap& map, std::span<const double> ys) {
  std::vector<double> xs(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) xs[i] = map.backward(ys[i]);
  return xs;
}

// Nodes and weights integrating against the limit measure restricted to the
// window.
struct WindowRule {
  std::vector<double> y;
  std::vector<double> w;
};

WindowRule window_rule(const ScalingMap& map, double window) {
  WindowRule r;
  if (map.direction == Direction::ToGaussian) {
    const QuadratureRule leg = gauss_rule(MeasureSpec::jacobi_beta(0.0, 0.0), kWindowOrder);
    for (int i = 0; i < leg.order(); ++i) {
      const std::size_t iu = static_cast<std::size_t>(i);
      const double y = window * leg.nodes[iu];
      r.y.push_back(y);
      r.w.push_back(2.0 * window * leg.weights[iu] * std::exp(-y * y) /
                    std::sqrt(std::numbers::pi));
    }
  } else {
    const double a = map.alpha;
    const QuadratureRule jac = gauss_rule(MeasureSpec::jacobi_beta(0.0, a), kWindowOrder);
    const double scale = std::exp((a + 1.0) * std::log(window) - std::log(a + 1.0) -
                                  log_gamma(a + 1.0));
    for (int i = 0; i < jac.order(); ++i) {
      const std::size_t iu = static_cast<std::size_t>(i);
      const double y = 0.5 * window * (1.0 + jac.nodes[iu]);
      r.y.push_back(y);
      r.w.push_back(scale * jac.weights[iu] * std::exp(-y));
    }
  }
  return r;
}

}  // namespace

ScalingMap ScalingMap::to_gaussian(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("ToGaussian scaling requires lambda > 0");
  }
  return {Direction::ToGaussian, lambda, 0.0, 0.0};
}

ScalingMap ScalingMap::to_laguerre(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(beta)) {
    throw ParameterError("ToLaguerre scaling requires alpha, beta > -1");
  }
  return {Direction::ToLaguerre, 0.0, alpha, beta};
}

double ScalingMap::parameter() const noexcept {
  return direction == Direction::ToGaussian ? lambda : beta;
}

double ScalingMap::forward(double x) const noexcept {
  return direction == Direction::ToGaussian ? std::sqrt(lambda) * x : beta * (1.0 - x) / 2.0;
}

double ScalingMap::backward(double y) const noexcept {
  return direction == Direction::ToGaussian ? y / std::sqrt(lambda) : 1.0 - 2.0 * y / beta;
}

FamilySpec ScalingMap::jacobi_family() const {
  return direction == Direction::ToGaussian ? FamilySpec::jacobi(lambda - 0.5, lambda - 0.5)
                                            : FamilySpec::jacobi(alpha, beta);
}

FamilySpec ScalingMap::limit_family() const {
  return direction == Direction::ToGaussian ? FamilySpec::hermite()
                                            : FamilySpec::laguerre(alpha);
}

RealFunction scale_function(const RealFunction& f, const ScalingMap& map) {
  return [f, map](double x) { return std::abs(x) <= 1.0 ? f(map.forward(x)) : 0.0; };
}

DecayFit fit_decay(std::span<const double> parameters, std::span<const double> errors) {
  if (parameters.size() != errors.size()) {
    throw ParameterError("fit_decay: size mismatch");
  }
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (errors[i] > 0.0 && parameters[i] > 0.0) {
      lx.push_back(std::log(parameters[i]));
      ly.push_back(std::log(errors[i]));
    }
  }
  DecayFit fit;
  if (lx.size() < 2) return fit;
  const double n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) return fit;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (fit.intercept + fit.exponent * lx[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  fit.valid = true;
  return fit;
}

bool ConvergenceReport::strictly_decreasing() const {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].error < points[i - 1].error)) return false;
  }
  return true;
}

ConvergenceReport norm_limit_experiment(const RealFunction& f, std::span<const double> sweep,
                                        const TransferOptions& options) {
  const int order = order_for(options);
  const FamilySpec limit_family = map_for(options, 1.0).limit_family();
  const QuadratureRule limit_rule = gauss_rule(MeasureSpec::for_family(limit_family), order);
  const double limit = integrate([&](double y) { return f(y) * f(y); }, limit_rule);
  return run_sweep("squared_norm", sweep, [&](double param) {
    const ScalingMap map = map_for(options, param);
    const QuadratureRule rule =
        gauss_rule(MeasureSpec::for_family(map.jacobi_family()), order);
    const RealFunction fs = scale_function(f, map);
    const double target = integrate([&](double x) { return fs(x) * fs(x); }, rule);
    return SweepPoint{param, target, limit, std::abs(target - limit)};
  });
}

ConvergenceReport inner_product_limit_experiment(const RealFunction& f, int k,
                                                 std::span<const double> sweep,
                                                 const TransferOptions& options) {
  if (k < 0) throw ParameterError("inner product degree must be >= 0");
  const int order = std::max(order_for(options), k + 16);
  const FamilySpec limit_family = map_for(options, 1.0).limit_family();
  const QuadratureRule limit_rule = gauss_rule(MeasureSpec::for_family(limit_family), order);
  const double inv_fact = std::exp(-log_factorial(k));
  const bool gaussian = options.direction == Direction::ToGaussian;
  const double limit = integrate(
      [&](double y) {
        const double v = eval_poly(limit_family, k, y);
        return f(y) * (gaussian ? v * inv_fact : v);
      },
      limit_rule);
  return run_sweep("inner_product", sweep, [&](double param) {
    const ScalingMap map = map_for(options, param);
    const QuadratureRule rule =
        gauss_rule(MeasureSpec::for_family(map.jacobi_family()), order);
    const RealFunction fs = scale_function(f, map);
    double target;
    if (gaussian) {
      const FamilySpec geg = FamilySpec::gegenbauer(param);
      const double scale = std::exp(-0.5 * k * std::log(param));
      target = integrate([&](double x) { return fs(x) * scale * eval_poly(geg, k, x); }, rule);
    } else {
      const FamilySpec jac = map.jacobi_family();
      target = integrate([&](double x) { return fs(x) * eval_poly(jac, k, x); }, rule);
    }
    return SweepPoint{param, target, limit, std::abs(target - limit)};
  });
}

ConvergenceReport g_norm_transfer_experiment(const RealFunction& f,
                                             std::span<const double> sweep,
                                             const TransferOptions& options) {
  const int order = order_for(options);
  const FamilySpec limit_family = map_for(options, 1.0).limit_family();
  const QuadratureRule limit_rule = gauss_rule(MeasureSpec::for_family(limit_family), order);
  const SpectralCoefficients lc = expand(f, limit_family, options.truncation, limit_rule);
  const double limit = std::pow(g_l2_norm(lc), 2);
  return run_sweep("g_squared_norm", sweep, [&](double param) {
    const ScalingMap map = map_for(options, param);
    const FamilySpec fam = map.jacobi_family();
    const QuadratureRule rule = gauss_rule(MeasureSpec::for_family(fam), order);
    const SpectralCoefficients c =
        expand(scale_function(f, map), fam, options.truncation, rule);
    const double target = std::pow(g_l2_norm(c), 2);
    return SweepPoint{param, target, limit, std::abs(target - limit)};
  });
}

double asymptotic_check_hermite(int n, double x, double lambda) {
  if (!(lambda > 0.0)) throw ParameterError("asymptotic_check_hermite: lambda must be > 0");
  if (n == 0) return 0.0;
  const FamilySpec jac = FamilySpec::jacobi(lambda - 0.5, lambda - 0.5);
  const double p = eval_poly(jac, n, x / std::sqrt(lambda));
  // C_n^λ = c⁻¹ P_n^{(λ−½,λ−½)}
  const double lhs = p * std::exp(-log_gegenbauer_conversion_factor(lambda, n) -
                                  0.5 * n * std::log(lambda));
  const double rhs = eval_poly(FamilySpec::hermite(), n, x) * std::exp(-log_factorial(n));
  return std::abs(lhs - rhs);
}

double asymptotic_check_laguerre(int n, double alpha, double y, double beta) {
  if (!(beta > 0.0)) throw ParameterError("asymptotic_check_laguerre: beta must be > 0");
  if (!(y >= 0.0)) throw ParameterError("asymptotic_check_laguerre: y must be >= 0");
  if (n == 0) return 0.0;
  const double lhs = eval_poly(FamilySpec::jacobi(alpha, beta), n, 1.0 - 2.0 * y / beta);
  const double rhs = eval_poly(FamilySpec::laguerre(alpha), n, y);
  return std::abs(lhs - rhs);
}

double log_z_gaussian(double lambda) {
  if (!(lambda > 0.0)) throw ParameterError("Z requires lambda > 0");
  return 0.5 * std::log(lambda) + 2.0 * log_gamma(lambda) + 2.0 * lambda * std::numbers::ln2 -
         std::log(2.0 * std::numbers::pi) - log_gamma(2.0 * lambda);
}

double log_z_gaussian_duplication(double lambda) {
  if (!(lambda > 0.0)) throw ParameterError("Z requires lambda > 0");
  return 0.5 * std::log(lambda) + log_gamma(lambda) - 0.5 * std::log(std::numbers::pi) -
         log_gamma(lambda + 0.5);
}

double log_z_laguerre(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > 0.0)) {
    throw ParameterError("Z_{alpha,beta} requires alpha > -1, beta > 0");
  }
  return log_gamma(alpha + beta + 2.0) - log_gamma(alpha + 1.0) -
         (alpha + 2.0) * std::log(beta) - log_gamma(beta);
}

double WindowedGObjects::omega_at(double y) const {
  return std::exp(log_omega(map, y, exponent));
}

double WindowedGObjects::big_f_at(double y) const {
  if (!in_window(map, window, y)) return 0.0;
  const SpectralCoefficients c{map.jacobi_family(), coeffs};
  return g_pointwise(c, map.backward(y)) * std::exp(log_big_weight(map, y));
}

double WindowedGObjects::small_f_at(double y) const {
  if (!in_window(map, window, y)) return 0.0;
  const SpectralCoefficients c{map.jacobi_family(), coeffs};
  return g_pointwise(c, map.backward(y)) * std::exp(log_small_weight(map, y, exponent));
}

WindowedGObjects windowed_objects(const RealFunction& phi, const ScalingMap& map,
                                  double window, double p, int truncation,
                                  int grid_points) {
  check_window(map, window);
  if (!(p >= 1.0) || !std::isfinite(p)) throw ParameterError("exponent p must be >= 1");
  WindowedGObjects w{.map = map};
  w.window = window;
  w.exponent = p;
  w.log_z = map.direction == Direction::ToGaussian ? log_z_gaussian(map.lambda)
                                                   : log_z_laguerre(map.alpha, map.beta);
  const SpectralCoefficients c = expand_scaled(phi, map, truncation);
  w.coeffs = c.coeffs;
  w.grid = window_grid(map, window, grid_points);
  w.g = g_decompose(c, to_x(map, w.grid)).g();
  for (std::size_t i = 0; i < w.grid.size(); ++i) {
    const double y = w.grid[i];
    w.big_f.push_back(w.g[i] * std::exp(log_big_weight(map, y)));
    w.small_f.push_back(w.g[i] * std::exp(log_small_weight(map, y, p)));
    w.omega.push_back(std::exp(log_omega(map, y, p)));
  }
  return w;
}

TruncatedSplit truncated_g_split(const RealFunction& phi, const ScalingMap& map,
                                 double window, int truncation, int internal_cap,
                                 int grid_points) {
  check_window(map, window);
  if (truncation < 0) throw ParameterError("truncation must be >= 0");
  TruncatedSplit s;
  s.truncation = truncation;
  s.internal_cap = internal_cap > 0 ? internal_cap : std::max(4 * truncation, 8);
  if (s.internal_cap < truncation) {
    throw ParameterError("internal cap below truncation");
  }
  const SpectralCoefficients c = expand_scaled(phi, map, s.internal_cap);
  // The top quarter of the internal expansion must be negligible next to the
  // modes the remainder is built from.
  double top = 0.0, dropped = 0.0;
  const std::size_t from = c.coeffs.size() - c.coeffs.size() / 4;
  for (std::size_t k = from; k < c.coeffs.size(); ++k) top += c.coeffs[k] * c.coeffs[k];
  for (std::size_t k = static_cast<std::size_t>(truncation / 2) + 1; k < c.coeffs.size(); ++k) {
    dropped += c.coeffs[k] * c.coeffs[k];
  }
  if (top > 1e-6 * dropped + 1e-28 * energy(c)) {
    throw NumericalError("truncated_g_split: internal cap " + std::to_string(s.internal_cap) +
                         " does not resolve the coefficient tail");
  }

  s.grid = window_grid(map, window, grid_points);
  const GFunctionDecomposition head = g_decompose_truncated(c, to_x(map, s.grid), truncation);
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    s.truncated.push_back((head.time_part[i] + head.space_part[i]) *
                          std::exp(2.0 * log_big_weight(map, s.grid[i])));
  }

  const WindowRule wr = window_rule(map, window);
  const std::vector<double> xs = to_x(map, wr.y);
  const GFunctionDecomposition full = g_decompose(c, xs);
  const GFunctionDecomposition part = g_decompose_truncated(c, xs, truncation);
  double t1 = 0.0, t2 = 0.0;
  for (std::size_t i = 0; i < wr.y.size(); ++i) {
    const double weight = std::exp(log_big_weight(map, wr.y[i]));
    const double h1 = (full.time_part[i] - part.time_part[i]) * weight;
    const double h2 = (full.space_part[i] - part.space_part[i]) * weight;
    t1 += wr.w[i] * h1 * h1;
    t2 += wr.w[i] * h2 * h2;
  }
  s.time_tail_norm = std::sqrt(t1);
  s.space_tail_norm = std::sqrt(t2);
  return s;
}

double LinearizationRow::at(int i) const noexcept {
  if (i < i_min || i > i_max()) return 0.0;
  return nu[static_cast<std::size_t>(i - i_min)];
}

double LinearizationRow::sum() const noexcept {
  double s = 0.0;
  for (double v : nu) s += v;
  return s;
}

LinearizationRow linearization_coeffs(double alpha, double beta, int m, int n, int order) {
  if (m < 0 || n < 0) throw ParameterError("linearization degrees must be >= 0");
  const FamilySpec fam = FamilySpec::jacobi(alpha, beta);
  const int top = m + n;
  if (order == 0) order = top + 16;
  if (order < top + 1) {
    throw ParameterError("linearization quadrature order " + std::to_string(order) +
                         " below m + n + 1");
  }
  const QuadratureRule rule = gauss_rule(MeasureSpec::for_family(fam), order);
  const BasisTable table = basis_table(fam, top, rule.nodes);
  // log ‖p_j‖ with p_j = P_j / P_j(1).
  auto log_norm_p = [&](int j) {
    return 0.5 * log_squared_norm(fam, j) - log_binomial(alpha, j);
  };
  LinearizationRow row{alpha, beta, m, n, std::abs(m - n), {}};
  std::vector<double> prod(rule.nodes.size());
  const auto rm = table.row(m);
  const auto rn = table.row(n);
  for (std::size_t q = 0; q < prod.size(); ++q) prod[q] = rm[q] * rn[q];
  for (int i = row.i_min; i <= top; ++i) {
    const auto ri = table.row(i);
    std::vector<double> v(prod.size());
    for (std::size_t q = 0; q < v.size(); ++q) v[q] = prod[q] * ri[q];
    const double triple = integrate_values(v, rule);
    row.nu.push_back(triple * std::exp(log_norm_p(m) + log_norm_p(n) - log_norm_p(i)));
  }
  if (std::abs(row.sum() - 1.0) > 1e-9) {
    throw NumericalError("linearization coefficients do not sum to one (order " +
                         std::to_string(order) + ")");
  }
  return row;
}

double stirling_ratio_check(double lambda, int n, int k) {
  if (!(lambda > 0.0)) throw ParameterError("stirling_ratio_check: lambda must be > 0");
  if (n < 1 || k < n) throw ParameterError("stirling_ratio_check: need 1 <= n <= k");
  const double l2 = 2.0 * lambda;
  const double exact = 2.0 * log_rising(l2, k - n) - log_rising(l2, n) +
                       2.0 * log_gamma_shift(k - n + lambda + 0.5, 2 * n - k) +
                       std::log(n + lambda) - log_factorial(n) - std::log(lambda);
  const double approx = (2.0 * k - 3.0 * n) * std::numbers::ln2 + (n - 1.0) * std::log(lambda) +
                        std::log(n + lambda) - log_factorial(n);
  return std::abs(std::expm1(exact - approx));
}

}  // namespace lptrans
