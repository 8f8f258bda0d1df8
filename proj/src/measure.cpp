#include "lptrans/measure.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lptrans/errors.hpp"
#include "lptrans/special.hpp"

namespace lptrans {
namespace {

constexpr double kRescale = 1e150;

// Orthonormal p_n(x) and p_n'(x) for Newton.
void orthonormal_value_and_derivative(const Recurrence& r, int n, double x,
                                      double& p, double& dp) {
  double p0 = 1.0, p1 = 0.0, d0 = 0.0, d1 = 0.0;
  // p1/d1 hold the previous step, p0/d0 the current one.
  for (int k = 0; k < n; ++k) {
    const std::size_t ku = static_cast<std::size_t>(k);
    const double back = k > 0 ? std::abs(r.offdiag[ku - 1]) : 0.0;
    const double b = std::abs(r.offdiag[ku]);
    const double pn = ((x - r.diag[ku]) * p0 - back * p1) / b;
    const double dn = ((x - r.diag[ku]) * d0 + p0 - back * d1) / b;
    p1 = p0;
    d1 = d0;
    p0 = pn;
    d0 = dn;
    if (std::abs(p0) > kRescale || std::abs(d0) > kRescale) {
      p0 /= kRescale;
      p1 /= kRescale;
      d0 /= kRescale;
      d1 /= kRescale;
    }
  }
  p = p0;
  dp = d0;
}

// log Σ_{k<n} p_k(x)², accumulated with rescaling.
double log_christoffel_sum(const Recurrence& r, int n, double x) {
  double cur = 1.0, prev = 0.0, sum = 1.0, log_scale = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    const std::size_t ku = static_cast<std::size_t>(k);
    const double back = k > 0 ? std::abs(r.offdiag[ku - 1]) : 0.0;
    const double next = ((x - r.diag[ku]) * cur - back * prev) / std::abs(r.offdiag[ku]);
    prev = cur;
    cur = next;
    sum += cur * cur;
    if (std::abs(cur) > kRescale) {
      cur /= kRescale;
      prev /= kRescale;
      sum /= kRescale * kRescale;
      log_scale += std::log(kRescale);
    }
  }
  return std::log(sum) + 2.0 * log_scale;
}

}  // namespace

MeasureSpec::MeasureSpec(MeasureKind kind, double alpha, double beta)
    : kind_(kind), alpha_(alpha), beta_(beta), log_norm_(0.0) {
  switch (kind) {
    case MeasureKind::JacobiBeta:
      log_norm_ = log_gamma(alpha + beta + 2.0) - log_gamma(alpha + 1.0) -
                  log_gamma(beta + 1.0) - (alpha + beta + 1.0) * std::numbers::ln2;
      break;
    case MeasureKind::Gaussian:
      log_norm_ = -0.5 * std::log(std::numbers::pi);
      break;
    case MeasureKind::Gamma:
      log_norm_ = -log_gamma(alpha + 1.0);
      break;
  }
}

MeasureSpec MeasureSpec::jacobi_beta(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    throw ParameterError("JacobiBeta measure requires alpha, beta > -1");
  }
  return {MeasureKind::JacobiBeta, alpha, beta};
}

MeasureSpec MeasureSpec::gaussian() { return {MeasureKind::Gaussian, 0.0, 0.0}; }

MeasureSpec MeasureSpec::gamma(double alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw ParameterError("Gamma measure requires alpha > -1");
  }
  return {MeasureKind::Gamma, alpha, 0.0};
}

MeasureSpec MeasureSpec::for_family(const FamilySpec& family) {
  switch (family.kind()) {
    case FamilyKind::Jacobi:
    case FamilyKind::Gegenbauer:
      return jacobi_beta(family.alpha(), family.beta());
    case FamilyKind::Hermite:
      return gaussian();
    case FamilyKind::Laguerre:
      return gamma(family.alpha());
  }
  return gaussian();
}

bool MeasureSpec::contains(double x) const noexcept {
  switch (kind_) {
    case MeasureKind::JacobiBeta:
      return x > -1.0 && x < 1.0;
    case MeasureKind::Gaussian:
      return std::isfinite(x);
    case MeasureKind::Gamma:
      return x > 0.0 && std::isfinite(x);
  }
  return false;
}

double MeasureSpec::log_density(double x) const {
  if (!contains(x)) return -std::numeric_limits<double>::infinity();
  switch (kind_) {
    case MeasureKind::JacobiBeta:
      return log_norm_ + alpha_ * std::log1p(-x) + beta_ * std::log1p(x);
    case MeasureKind::Gaussian:
      return log_norm_ - x * x;
    case MeasureKind::Gamma:
      return log_norm_ + alpha_ * std::log(x) - x;
  }
  return 0.0;
}

FamilySpec MeasureSpec::orthogonal_family() const {
  switch (kind_) {
    case MeasureKind::JacobiBeta:
      return FamilySpec::jacobi(alpha_, beta_);
    case MeasureKind::Gaussian:
      return FamilySpec::hermite();
    case MeasureKind::Gamma:
      return FamilySpec::laguerre(alpha_);
  }
  return FamilySpec::hermite();
}

QuadratureRule gauss_rule(const MeasureSpec& measure, int order) {
  if (order < 1 || order > kMaxQuadratureOrder) {
    throw ParameterError("gauss_rule: order " + std::to_string(order) +
                         " outside [1, " + std::to_string(kMaxQuadratureOrder) + "]");
  }
  const Recurrence r = orthonormal_recurrence(measure.orthogonal_family(), order);
  const Eigen::Index n = order;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index i = 0; i < n; ++i) diag[i] = r.diag[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    sub[i] = std::abs(r.offdiag[static_cast<std::size_t>(i)]);
  }
  std::vector<double> nodes(static_cast<std::size_t>(order));
  if (order == 1) {
    nodes[0] = diag[0];
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw NumericalError("gauss_rule: tridiagonal eigensolver did not converge for order " +
                           std::to_string(order));
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
    }
    std::sort(nodes.begin(), nodes.end());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double lo = i > 0 ? nodes[i - 1] : -std::numeric_limits<double>::infinity();
      const double hi =
          i + 1 < nodes.size() ? nodes[i + 1] : std::numeric_limits<double>::infinity();
      double x = nodes[i];
      for (int it = 0; it < 3; ++it) {
        double p = 0.0, dp = 0.0;
        orthonormal_value_and_derivative(r, order, x, p, dp);
        if (dp == 0.0 || !std::isfinite(p / dp)) break;
        const double step = p / dp;
        const double cand = x - step;
        // Accept only steps that stay between the neighbouring nodes.
        if (!(cand > 0.5 * (x + lo) || i == 0) || !(cand < 0.5 * (x + hi) || i + 1 == nodes.size()))
          break;
        if (std::abs(step) > 1e-6 * (1.0 + std::abs(x))) break;
        x = cand;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
      }
      nodes[i] = x;
    }
  }
  QuadratureRule rule{measure, nodes, {}, {}};
  rule.weights.resize(nodes.size());
  rule.log_weights.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!measure.contains(nodes[i])) {
      throw NumericalError("gauss_rule: node " + std::to_string(nodes[i]) +
                           " escaped the domain at order " + std::to_string(order));
    }
    rule.log_weights[i] = -log_christoffel_sum(r, order, nodes[i]);
    rule.weights[i] = std::exp(rule.log_weights[i]);
  }
  return rule;
}

int default_order(int spectral_degree) noexcept {
  return std::min(kMaxQuadratureOrder, std::max(64, spectral_degree + 16));
}

double integrate_values(std::span<const double> values, const QuadratureRule& rule) {
  if (values.size() != rule.nodes.size()) {
    throw ParameterError("integrate: sample count does not match rule order");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v)) {
      throw NumericalError("integrate: non-finite sample at node " +
                           std::to_string(rule.nodes[i]));
    }
    if (v == 0.0) continue;
    if (rule.weights[i] != 0.0) {
      s += rule.weights[i] * v;
    } else {
      s += std::copysign(std::exp(rule.log_weights[i] + std::log(std::abs(v))), v);
    }
  }
  return s;
}

std::vector<double> sample(const RealFunction& f, const QuadratureRule& rule) {
  std::vector<double> v(rule.nodes.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = f(rule.nodes[i]);
    if (!std::isfinite(v[i])) {
      throw NumericalError("non-finite function value at node " +
                           std::to_string(rule.nodes[i]));
    }
  }
  return v;
}

double integrate(const RealFunction& f, const QuadratureRule& rule) {
  return integrate_values(sample(f, rule), rule);
}

double lp_norm_values(std::span<const double> values, double p,
                      const QuadratureRule& rule) {
  if (!(p >= 1.0)) throw ParameterError("lp_norm requires p >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  std::vector<double> powered(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    powered[i] = std::pow(std::abs(values[i]), p);
  }
  return std::pow(integrate_values(powered, rule), 1.0 / p);
}

double lp_norm(const RealFunction& f, double p, const QuadratureRule& rule) {
  return lp_norm_values(sample(f, rule), p, rule);
}

}  // namespace lptrans
