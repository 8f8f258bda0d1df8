#pragma once

#include <span>
#include <vector>

#include "lptrans/family.hpp"
#include "lptrans/measure.hpp"

namespace lptrans {

/// Orthonormal coefficients ĉ_k = ⟨f, φ_k⟩ / ‖φ_k‖, k = 0..N.
struct SpectralCoefficients {
  FamilySpec family;
  std::vector<double> coeffs;

  int truncation() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

enum class SemigroupKind { Heat, Poisson };

/// e^{−tλ} (Heat) or e^{−t√λ} (Poisson).
double semigroup_multiplier(SemigroupKind kind, double eigenvalue, double t);

/// Row-major table of φ_k(x_i)/‖φ_k‖, k = 0..n_max, over a set of points.
struct BasisTable {
  int n_max = 0;
  std::vector<double> points;
  std::vector<double> values;  // values[k * points.size() + i]

  std::span<const double> row(int k) const {
    return {values.data() + static_cast<std::size_t>(k) * points.size(),
            points.size()};
  }
};

BasisTable basis_table(const FamilySpec& family, int n_max,
                       std::span<const double> points);

/// Quadrature projection onto the first N+1 orthonormal functions. The rule
/// must be for the family's measure and of order ≥ N + 16.
SpectralCoefficients expand(const RealFunction& f, const FamilySpec& family,
                            int truncation, const QuadratureRule& rule);
SpectralCoefficients expand_values(std::span<const double> samples,
                                   const FamilySpec& family, int truncation,
                                   const QuadratureRule& rule);

double reconstruct(const SpectralCoefficients& c, double x);
std::vector<double> reconstruct(const SpectralCoefficients& c,
                                std::span<const double> points);

/// Σ ĉ_k² (the squared L² norm of the truncated expansion).
double energy(const SpectralCoefficients& c);

/// Conversions to and from coefficients against the unnormalized φ_k,
/// i.e. ⟨f, φ_k⟩ / ‖φ_k‖².
std::vector<double> to_szego(const SpectralCoefficients& c);
SpectralCoefficients from_szego(const FamilySpec& family,
                                std::span<const double> szego);

SpectralCoefficients semigroup_apply(const SpectralCoefficients& c,
                                     SemigroupKind kind, double t);

/// Coefficients of ∂_t P_t f: ĉ_k ↦ −√λ_k e^{−t√λ_k} ĉ_k.
SpectralCoefficients poisson_time_derivative(const SpectralCoefficients& c,
                                             double t);

/// Coefficients of ∂_x P_t f in the derivative-shifted family (degree drops
/// by one). A constant input yields the single coefficient 0.
SpectralCoefficients poisson_space_derivative(const SpectralCoefficients& c,
                                              double t);

/// Truncated heat kernel Σ_{k≤N} e^{−λ_k t} φ_k(x)φ_k(y)/‖φ_k‖². Jacobi-type
/// families only. Throws NumericalError when the k = N term is not below
/// 1e−14 of the running sum.
double kernel(const FamilySpec& family, double t, double x, double y,
              int truncation);

/// Smallest N for which the kernel truncation budget holds uniformly on
/// [−1, 1]² (endpoint bound on |φ_N|).
int kernel_truncation(const FamilySpec& family, double t);

/// (1/√π) ∫_0^∞ e^{−u} u^{−½} e^{−λt²/(4u)} du via a head/tail split at
/// a = max(√(λt²/4), 1): panelled Gauss–Legendre in s = √u on [0, √a] and a shifted
/// Gamma rule on [a, ∞).
double bochner_integral(double lambda, double t, int order = 64);
/// |bochner_integral − e^{−√λ t}|.
double bochner_check(double lambda, double t);

}  // namespace lptrans
