#include "lptrans/family.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "lptrans/errors.hpp"
#include "lptrans/special.hpp"

namespace lptrans {
namespace {

void check_degree(int n, int cap, const char* where) {
  if (n < 0) {
    throw ParameterError(std::string(where) + ": negative degree");
  }
  if (n > cap) {
    throw ParameterError(std::string(where) + ": degree " + std::to_string(n) +
                         " exceeds cap " + std::to_string(cap));
  }
}

double log_jacobi_norm(double a, double b, int n) {
  if (n == 0) return 0.0;
  // (α+1)_n (β+1)_n / ((2n+α+β+1) n! (α+β+2)_{n−1}); this form has no pole
  // at α+β+1 = 0.
  return log_rising(a + 1.0, n) + log_rising(b + 1.0, n) -
         std::log(2.0 * n + a + b + 1.0) - log_factorial(n) -
         log_rising(a + b + 2.0, n - 1);
}

}  // namespace

FamilySpec FamilySpec::jacobi(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    throw ParameterError("Jacobi family requires alpha, beta > -1");
  }
  return {FamilyKind::Jacobi, alpha, beta, 0.0};
}

FamilySpec FamilySpec::gegenbauer(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("Gegenbauer family requires lambda > 0");
  }
  return {FamilyKind::Gegenbauer, lambda - 0.5, lambda - 0.5, lambda};
}

FamilySpec FamilySpec::hermite() { return {FamilyKind::Hermite, 0.0, 0.0, 0.0}; }

FamilySpec FamilySpec::laguerre(double alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw ParameterError("Laguerre family requires alpha > -1");
  }
  return {FamilyKind::Laguerre, alpha, 0.0, 0.0};
}

FamilySpec FamilySpec::orthonormal_equivalent() const {
  if (kind_ == FamilyKind::Gegenbauer) return jacobi(alpha_, beta_);
  return *this;
}

double FamilySpec::domain_lower() const noexcept {
  switch (kind_) {
    case FamilyKind::Jacobi:
    case FamilyKind::Gegenbauer:
      return -1.0;
    case FamilyKind::Hermite:
      return -std::numeric_limits<double>::infinity();
    case FamilyKind::Laguerre:
      return 0.0;
  }
  return 0.0;
}

double FamilySpec::domain_upper() const noexcept {
  if (is_jacobi_type()) return 1.0;
  return std::numeric_limits<double>::infinity();
}

bool FamilySpec::in_domain(double x) const noexcept {
  return x > domain_lower() && x < domain_upper();
}

std::string FamilySpec::name() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case FamilyKind::Jacobi:
      os << "jacobi(" << alpha_ << "," << beta_ << ")";
      break;
    case FamilyKind::Gegenbauer:
      os << "gegenbauer(" << lambda_ << ")";
      break;
    case FamilyKind::Hermite:
      os << "hermite";
      break;
    case FamilyKind::Laguerre:
      os << "laguerre(" << alpha_ << ")";
      break;
  }
  return os.str();
}

Recurrence orthonormal_recurrence(const FamilySpec& family, int count) {
  if (count < 0) throw ParameterError("orthonormal_recurrence: negative count");
  Recurrence r;
  r.diag.resize(static_cast<std::size_t>(count));
  r.offdiag.resize(static_cast<std::size_t>(count));
  const double a = family.alpha();
  const double b = family.beta();
  for (int k = 0; k < count; ++k) {
    const std::size_t i = static_cast<std::size_t>(k);
    const int j = k + 1;  // index of b_j stored in offdiag[k]
    switch (family.kind()) {
      case FamilyKind::Jacobi:
      case FamilyKind::Gegenbauer: {
        const double s = a + b;
        if (k == 0) {
          r.diag[i] = (b - a) / (s + 2.0);
        } else {
          r.diag[i] = (b - a) * (b + a) / ((2.0 * k + s) * (2.0 * k + s + 2.0));
        }
        double bb;
        if (j == 1) {
          bb = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
        } else {
          const double t = 2.0 * j + s;
          bb = 4.0 * j * ((j + a) / t) * ((j + b) / t) * (j + s) /
               ((t + 1.0) * (t - 1.0));
        }
        r.offdiag[i] = std::sqrt(bb);
        break;
      }
      case FamilyKind::Hermite:
        r.diag[i] = 0.0;
        r.offdiag[i] = std::sqrt(0.5 * j);
        break;
      case FamilyKind::Laguerre:
        r.diag[i] = 2.0 * k + a + 1.0;
        // Negative sign reproduces the (−1)^n leading coefficient of L_n^α.
        r.offdiag[i] = -std::sqrt(j * (j + a));
        break;
    }
  }
  return r;
}

std::vector<double> eval_poly_all(const FamilySpec& family, int n, double x,
                                  int degree_cap) {
  check_degree(n, degree_cap, "eval_poly");
  std::vector<double> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1.0;
  if (n == 0) return p;
  const double a = family.alpha();
  const double b = family.beta();
  const double lam = family.lambda();
  switch (family.kind()) {
    case FamilyKind::Jacobi: {
      p[1] = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
      const double s = a + b;
      for (int k = 2; k <= n; ++k) {
        const double t = 2.0 * k + s;
        const double c1 = 2.0 * k * (k + s) * (t - 2.0);
        const double c2 = (t - 1.0) * (t * (t - 2.0) * x + a * a - b * b);
        const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * t;
        p[k] = (c2 * p[k - 1] - c3 * p[k - 2]) / c1;
      }
      break;
    }
    case FamilyKind::Gegenbauer:
      p[1] = 2.0 * lam * x;
      for (int k = 2; k <= n; ++k) {
        p[k] = (2.0 * x * (k + lam - 1.0) * p[k - 1] - (k + 2.0 * lam - 2.0) * p[k - 2]) /
               k;
      }
      break;
    case FamilyKind::Hermite:
      p[1] = 2.0 * x;
      for (int k = 2; k <= n; ++k) {
        p[k] = 2.0 * x * p[k - 1] - 2.0 * (k - 1) * p[k - 2];
      }
      break;
    case FamilyKind::Laguerre:
      p[1] = 1.0 + a - x;
      for (int k = 2; k <= n; ++k) {
        p[k] = ((2.0 * k - 1.0 + a - x) * p[k - 1] - (k - 1.0 + a) * p[k - 2]) / k;
      }
      break;
  }
  return p;
}

double eval_poly(const FamilySpec& family, int n, double x, int degree_cap) {
  return eval_poly_all(family, n, x, degree_cap).back();
}

Evaluation eval_poly_flagged(const FamilySpec& family, int n, double x,
                             int degree_cap) {
  const bool outside = x < family.domain_lower() || x > family.domain_upper();
  return {eval_poly(family, n, x, degree_cap), outside};
}

std::vector<double> eval_orthonormal_all(const FamilySpec& family, int n, double x,
                                         int degree_cap) {
  check_degree(n, degree_cap, "eval_orthonormal");
  const Recurrence r = orthonormal_recurrence(family, n);
  std::vector<double> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1.0;
  double prev = 0.0;
  for (int k = 0; k < n; ++k) {
    const double back = k > 0 ? r.offdiag[static_cast<std::size_t>(k) - 1] : 0.0;
    const double next =
        ((x - r.diag[static_cast<std::size_t>(k)]) * p[static_cast<std::size_t>(k)] -
         back * prev) /
        r.offdiag[static_cast<std::size_t>(k)];
    prev = p[static_cast<std::size_t>(k)];
    p[static_cast<std::size_t>(k) + 1] = next;
  }
  return p;
}

double eval_orthonormal(const FamilySpec& family, int n, double x, int degree_cap) {
  return eval_orthonormal_all(family, n, x, degree_cap).back();
}

double log_squared_norm(const FamilySpec& family, int n) {
  if (n < 0) throw ParameterError("squared_norm: negative degree");
  switch (family.kind()) {
    case FamilyKind::Jacobi:
      return log_jacobi_norm(family.alpha(), family.beta(), n);
    case FamilyKind::Gegenbauer:
      return log_jacobi_norm(family.alpha(), family.beta(), n) -
             2.0 * log_gegenbauer_conversion_factor(family.lambda(), n);
    case FamilyKind::Hermite:
      return n * std::log(2.0) + log_factorial(n);
    case FamilyKind::Laguerre:
      return log_binomial(family.alpha(), n);
  }
  return 0.0;
}

double squared_norm(const FamilySpec& family, int n) {
  const double lg = log_squared_norm(family, n);
  const double v = std::exp(lg);
  if (!std::isfinite(v) || v == 0.0) {
    throw OverflowError("squared_norm of " + family.name() + " degree " +
                            std::to_string(n) + " is not representable",
                        lg);
  }
  return v;
}

NormTable norm_table(const FamilySpec& family, int n_max) {
  check_degree(n_max, kDefaultDegreeCap, "norm_table");
  NormTable t{family, {}};
  t.squared_norms.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) t.squared_norms.push_back(squared_norm(family, n));
  return t;
}

double value_at_one(const FamilySpec& family, int n) {
  if (family.kind() != FamilyKind::Jacobi) {
    throw ParameterError("value_at_one requires a Jacobi family");
  }
  if (n < 0) throw ParameterError("value_at_one: negative degree");
  const double lg = log_binomial(family.alpha(), n);
  const double v = std::exp(lg);
  if (!std::isfinite(v)) throw OverflowError("value_at_one overflows", lg);
  return v;
}

double eigenvalue(const FamilySpec& family, int k) {
  if (k < 0) throw ParameterError("eigenvalue: negative degree");
  switch (family.kind()) {
    case FamilyKind::Jacobi:
      return k * (k + family.alpha() + family.beta() + 1.0);
    case FamilyKind::Gegenbauer:
      return k * (k + 2.0 * family.lambda());
    case FamilyKind::Hermite:
    case FamilyKind::Laguerre:
      return static_cast<double>(k);
  }
  return 0.0;
}

DerivativeShift derivative_shift(const FamilySpec& family, int n) {
  if (n < 0) throw ParameterError("derivative_shift: negative degree");
  FamilySpec target = family;
  double factor = 0.0;
  switch (family.kind()) {
    case FamilyKind::Jacobi:
      target = FamilySpec::jacobi(family.alpha() + 1.0, family.beta() + 1.0);
      factor = 0.5 * (n + family.alpha() + family.beta() + 1.0);
      break;
    case FamilyKind::Gegenbauer:
      target = FamilySpec::gegenbauer(family.lambda() + 1.0);
      factor = 2.0 * family.lambda();
      break;
    case FamilyKind::Hermite:
      factor = 2.0 * n;
      break;
    case FamilyKind::Laguerre:
      target = FamilySpec::laguerre(family.alpha() + 1.0);
      factor = -1.0;
      break;
  }
  if (n == 0) return {0.0, target, 0};
  return {factor, target, n - 1};
}

double orthonormal_derivative_factor(const FamilySpec& family, int n) {
  if (n == 0) return 0.0;
  const DerivativeShift s = derivative_shift(family, n);
  const double lg = std::log(std::abs(s.factor)) +
                    0.5 * log_squared_norm(s.target, s.target_degree) -
                    0.5 * log_squared_norm(family, n);
  return std::copysign(std::exp(lg), s.factor);
}

double log_gegenbauer_conversion_factor(double lambda, int n) {
  if (!(lambda > 0.0)) throw ParameterError("conversion factor requires lambda > 0");
  if (n < 0) throw ParameterError("conversion factor: negative degree");
  // Γ(2λ)Γ(n+λ+½) / (Γ(λ+½)Γ(n+2λ)) = (λ+½)_n / (2λ)_n
  return log_rising(lambda + 0.5, n) - log_rising(2.0 * lambda, n);
}

double gegenbauer_conversion_factor(double lambda, int n) {
  const double lg = log_gegenbauer_conversion_factor(lambda, n);
  const double v = std::exp(lg);
  if (!std::isfinite(v) || v == 0.0) {
    throw OverflowError("gegenbauer conversion factor not representable", lg);
  }
  return v;
}

double apply_operator(const FamilySpec& family, int n, double x) {
  if (!family.in_domain(x)) {
    throw DomainError("apply_operator: x outside the open domain of " + family.name());
  }
  double d1 = 0.0;
  double d2 = 0.0;
  if (n >= 1) {
    const DerivativeShift s1 = derivative_shift(family, n);
    d1 = s1.factor * eval_poly(s1.target, s1.target_degree, x);
    if (n >= 2) {
      const DerivativeShift s2 = derivative_shift(s1.target, s1.target_degree);
      d2 = s1.factor * s2.factor * eval_poly(s2.target, s2.target_degree, x);
    }
  }
  const double a = family.alpha();
  const double b = family.beta();
  switch (family.kind()) {
    case FamilyKind::Jacobi:
    case FamilyKind::Gegenbauer:
      return -(1.0 - x * x) * d2 - (b - a - (a + b + 2.0) * x) * d1;
    case FamilyKind::Hermite:
      return -0.5 * d2 + x * d1;
    case FamilyKind::Laguerre:
      return -x * d2 - (a + 1.0 - x) * d1;
  }
  return 0.0;
}

}  // namespace lptrans
