#pragma once

#include <span>
#include <string>
#include <vector>

#include "lptrans/family.hpp"
#include "lptrans/measure.hpp"

namespace lptrans {

enum class Direction { ToGaussian, ToLaguerre };

/// f ↦ f(√λ x) χ_{[−1,1]}(x) (ToGaussian) or f ↦ f(β(1−x)/2) χ_{[−1,1]}(x)
/// (ToLaguerre).
struct ScalingMap {
  Direction direction;
  double lambda = 0.0;  // ToGaussian
  double alpha = 0.0;   // ToLaguerre
  double beta = 0.0;    // ToLaguerre

  static ScalingMap to_gaussian(double lambda);
  static ScalingMap to_laguerre(double alpha, double beta);

  /// Sweep parameter: λ or β.
  double parameter() const noexcept;
  /// x ∈ [−1, 1] ↦ the limit-domain point the function is read at.
  double forward(double x) const noexcept;
  /// Limit-domain point ↦ x.
  double backward(double y) const noexcept;

  /// Jacobi(λ−½, λ−½) or Jacobi(α, β).
  FamilySpec jacobi_family() const;
  /// Hermite or Laguerre(α).
  FamilySpec limit_family() const;
};

RealFunction scale_function(const RealFunction& f, const ScalingMap& map);

struct SweepPoint {
  double parameter;
  double target;
  double limit;
  double error;
};

struct DecayFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS of the log-log fit
  bool valid = false;     // false when fewer than two positive errors
};

/// Least squares of log error on log parameter.
DecayFit fit_decay(std::span<const double> parameters,
                   std::span<const double> errors);

struct ConvergenceReport {
  std::string quantity;
  std::vector<SweepPoint> points;
  DecayFit fit;

  bool strictly_decreasing() const;
};

struct TransferOptions {
  Direction direction = Direction::ToGaussian;
  double alpha = 0.0;    // Laguerre parameter of the limit measure
  int truncation = 64;   // spectral truncation for g-norms
  int order = 0;         // quadrature order, 0 = default_order(truncation)
};

/// ‖f_scaled‖² under the Jacobi measure against ‖f‖² under the limit measure.
ConvergenceReport norm_limit_experiment(const RealFunction& f,
                                        std::span<const double> sweep,
                                        const TransferOptions& options = {});

/// ⟨f_λ, λ^{−k/2} C_k^λ⟩ → ⟨f, H_k/k!⟩ or ⟨f_β, P_k^{(α,β)}⟩ → ⟨f, L_k^α⟩.
ConvergenceReport inner_product_limit_experiment(
    const RealFunction& f, int k, std::span<const double> sweep,
    const TransferOptions& options = {});

/// ‖g^{Jacobi} f_scaled‖² (closed form on the expansion) against
/// ‖g^{limit} f‖².
ConvergenceReport g_norm_transfer_experiment(
    const RealFunction& f, std::span<const double> sweep,
    const TransferOptions& options = {});

/// |λ^{−n/2} C_n^λ(x/√λ) − H_n(x)/n!|.
double asymptotic_check_hermite(int n, double x, double lambda);
/// |P_n^{(α,β)}(1 − 2y/β) − L_n^α(y)|.
double asymptotic_check_laguerre(int n, double alpha, double y, double beta);

/// log Z(λ) = log[λ^{½} Γ(λ)² 2^{2λ} / (2π Γ(2λ))] evaluated term by term.
double log_z_gaussian(double lambda);
/// The same quantity after the duplication formula: √λ Γ(λ) / (√π Γ(λ+½)).
double log_z_gaussian_duplication(double lambda);
/// log Z_{α,β} = log[Γ(α+β+2) / (Γ(α+1) β^{α+2} Γ(β))].
double log_z_laguerre(double alpha, double beta);

/// Reweighted, windowed Jacobi g-function on a uniform grid of the window
/// ([−K, K] for ToGaussian, (0, K] for ToLaguerre).
struct WindowedGObjects {
  ScalingMap map;
  double window = 0.0;    // K
  double exponent = 2.0;  // p
  double log_z = 0.0;     // log Z(λ) or log Z_{α,β}
  std::vector<double> grid{};
  std::vector<double> big_f{};    // F_{·,K}
  std::vector<double> small_f{};  // f_{·,K}
  std::vector<double> omega{};    // Ω on the grid
  std::vector<double> g{};        // unweighted Jacobi g at backward(grid)
  std::vector<double> coeffs{};   // expansion of the scaled function

  /// Ω at any y (no window restriction).
  double omega_at(double y) const;
  /// F and f at any y; zero outside the window.
  double big_f_at(double y) const;
  double small_f_at(double y) const;
};

WindowedGObjects windowed_objects(const RealFunction& phi, const ScalingMap& map,
                                  double window, double p, int truncation,
                                  int grid_points = 201);

/// Finite double sum F^N (modes with n + m ≤ N) and the Gaussian- (or
/// Gamma-) weighted L² norms over the window of the two remainders
/// (F_{·,K})² − F^N, split into the time and space blocks.
struct TruncatedSplit {
  int truncation = 0;    // N
  int internal_cap = 0;  // M
  std::vector<double> grid;
  std::vector<double> truncated;  // F^N on the grid
  double time_tail_norm = 0.0;
  double space_tail_norm = 0.0;
};

TruncatedSplit truncated_g_split(const RealFunction& phi, const ScalingMap& map,
                                 double window, int truncation,
                                 int internal_cap = 0, int grid_points = 201);

/// ν(i, m, n) for |m−n| ≤ i ≤ m+n with p_m p_n = Σ_i ν(i, m, n) p_i,
/// p_i = P_i^{(α,β)} / P_i^{(α,β)}(1).
struct LinearizationRow {
  double alpha = 0.0;
  double beta = 0.0;
  int m = 0;
  int n = 0;
  int i_min = 0;
  std::vector<double> nu;  // nu[i − i_min]

  int i_max() const noexcept { return i_min + static_cast<int>(nu.size()) - 1; }
  double at(int i) const noexcept;
  double sum() const noexcept;
};

/// Triple-product quadrature. order = 0 selects m + n + 16; an order below
/// m + n + 1 is rejected.
LinearizationRow linearization_coeffs(double alpha, double beta, int m, int n,
                                      int order = 0);

/// Relative deviation of the exact gamma ratio
///   Γ(k−n+2λ)² Γ(n+λ+½)² (n+λ) / (Γ(2λ) Γ(k−n+λ+½)² n! λ Γ(n+2λ))
/// from its large-λ form 2^{2k−3n} λ^{n−1} (n+λ) / n!.
double stirling_ratio_check(double lambda, int n, int k);

}  // namespace lptrans
