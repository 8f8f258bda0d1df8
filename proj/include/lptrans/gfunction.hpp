#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "lptrans/measure.hpp"
#include "lptrans/spectral.hpp"

namespace lptrans {

/// w(n, m) = √λ_n √λ_m / (√λ_n + √λ_m)², the time-part kernel weight
/// (= √λ_n √λ_m ∫₀^∞ t e^{−t(√λ_n+√λ_m)} dt).
double time_weight(double lambda_n, double lambda_m);
/// u(n, m) = 1 / (√λ_n + √λ_m)², the space-part kernel weight.
double space_weight(double lambda_n, double lambda_m);

/// ρ(x) with |δφ|² = ρ(x) |φ'|²: 1−x², ½ and x for the three families.
double natural_derivative_weight(const FamilySpec& family, double x);

/// g² = g₁ + g₂ split at a set of points.
struct GFunctionDecomposition {
  std::vector<double> points;
  std::vector<double> time_part;
  std::vector<double> space_part;

  /// √(g₁ + g₂) with the negative-radicand clamp applied.
  std::vector<double> g() const;
};

/// Evaluates both double series at every point (O(N²) each).
GFunctionDecomposition g_decompose(const SpectralCoefficients& c,
                                   std::span<const double> points);

/// Restricts g₁ and g₂ to modes with n + m ≤ total_degree (the Cauchy-product
/// truncation). total_degree < 0 keeps every mode.
GFunctionDecomposition g_decompose_truncated(const SpectralCoefficients& c,
                                             std::span<const double> points,
                                             int total_degree);

double g_pointwise(const SpectralCoefficients& c, double x);

/// Closed forms: each part carries ¼ Σ_{k≥1} ĉ_k².
double g_time_energy(const SpectralCoefficients& c);
double g_space_energy(const SpectralCoefficients& c);
/// ‖g f‖₂ = √(½ Σ_{k≥1} ĉ_k²).
double g_l2_norm(const SpectralCoefficients& c);

double g_lp_norm(const SpectralCoefficients& c, double p,
                 const QuadratureRule& rule);

struct GFunctionResult {
  std::vector<double> nodes;
  std::vector<double> values;
  double l2_closed_form = 0.0;
  std::map<double, double> lp_norms;
};

GFunctionResult g_evaluate(const SpectralCoefficients& c,
                           const QuadratureRule& rule,
                           std::span<const double> exponents);

struct NamedFunction {
  std::string name;
  RealFunction f;
};

struct RatioRow {
  std::string function;
  double p;
  double g_norm;
  double f_norm;
  double ratio;
};

struct RatioReport {
  std::vector<RatioRow> rows;
  /// Largest ratio per exponent: an empirical lower bound on c_p.
  std::map<double, double> max_ratio;
};

/// ‖g f‖_p / ‖f‖_p for every corpus member and exponent. A member with
/// ‖f‖_p = 0 reports ratio 0.
RatioReport g_ratio_report(const std::vector<NamedFunction>& corpus,
                           const FamilySpec& family,
                           std::span<const double> exponents, int truncation,
                           int order);

}  // namespace lptrans
