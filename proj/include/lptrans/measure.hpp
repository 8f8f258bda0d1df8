#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lptrans/family.hpp"

namespace lptrans {

using RealFunction = std::function<double(double)>;

enum class MeasureKind { JacobiBeta, Gaussian, Gamma };

/// One of the three probability measures:
///   JacobiBeta(α, β): η_{α,β} (1−x)^α (1+x)^β dx on (−1, 1)
///   Gaussian:         e^{−x²}/√π dx on ℝ
///   Gamma(α):         x^α e^{−x}/Γ(α+1) dx on (0, ∞)
class MeasureSpec {
 public:
  static MeasureSpec jacobi_beta(double alpha, double beta);
  static MeasureSpec gaussian();
  static MeasureSpec gamma(double alpha);
  /// The measure a family is orthogonal against.
  static MeasureSpec for_family(const FamilySpec& family);

  MeasureKind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// log of the constant in front of the unnormalized weight.
  double log_normalization() const noexcept { return log_norm_; }
  /// log of the normalized density; −∞ outside the domain.
  double log_density(double x) const;
  bool contains(double x) const noexcept;

  /// The Szegő family orthogonal with respect to this measure.
  FamilySpec orthogonal_family() const;

  friend bool operator==(const MeasureSpec& a, const MeasureSpec& b) {
    return a.kind_ == b.kind_ && a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

 private:
  MeasureSpec(MeasureKind kind, double alpha, double beta);

  MeasureKind kind_;
  double alpha_;
  double beta_;
  double log_norm_;
};

inline constexpr int kMaxQuadratureOrder = 512;

/// Gauss rule for a probability measure. Weights sum to one.
struct QuadratureRule {
  MeasureSpec measure;
  std::vector<double> nodes;        // ascending
  std::vector<double> weights;      // exp(log_weights)
  std::vector<double> log_weights;  // finite even where weights underflow
  int order() const noexcept { return static_cast<int>(nodes.size()); }
};

/// Golub–Welsch from the orthonormal recurrence, Newton-polished nodes and
/// Christoffel weights 1 / Σ_k p_k(x_i)².
QuadratureRule gauss_rule(const MeasureSpec& measure, int order);

/// Order used for objects of spectral degree ≤ n: max(64, n + 16).
int default_order(int spectral_degree) noexcept;

/// Σ w_i f(x_i). Throws NumericalError on a non-finite sample.
double integrate(const RealFunction& f, const QuadratureRule& rule);
/// Σ w_i v_i for precomputed samples.
double integrate_values(std::span<const double> values,
                        const QuadratureRule& rule);

/// (∫ |f|^p dμ)^{1/p}, p ≥ 1.
double lp_norm(const RealFunction& f, double p, const QuadratureRule& rule);
double lp_norm_values(std::span<const double> values, double p,
                      const QuadratureRule& rule);

/// Samples f at the rule's nodes, rejecting non-finite values.
std::vector<double> sample(const RealFunction& f, const QuadratureRule& rule);

}  // namespace lptrans
