#pragma once

#include <string>
#include <vector>

namespace lptrans {

/// Largest degree accepted by default. Callers that need more pass an
/// explicit cap; silent truncation never happens.
inline constexpr int kDefaultDegreeCap = 256;

enum class FamilyKind { Jacobi, Gegenbauer, Hermite, Laguerre };

/// One classical orthogonal polynomial system in Szegő normalization.
///
/// Jacobi(α, β) lives on (−1, 1) with α, β > −1; Gegenbauer(λ) with λ > 0 is
/// the symmetric Jacobi system Jacobi(λ−½, λ−½) in a different per-degree
/// normalization; Hermite lives on ℝ; Laguerre(α) lives on (0, ∞) with α > −1.
class FamilySpec {
 public:
  static FamilySpec jacobi(double alpha, double beta);
  static FamilySpec gegenbauer(double lambda);
  static FamilySpec hermite();
  static FamilySpec laguerre(double alpha);

  FamilyKind kind() const noexcept { return kind_; }
  /// α for Jacobi/Laguerre, λ−½ for Gegenbauer, 0 for Hermite.
  double alpha() const noexcept { return alpha_; }
  /// β for Jacobi, λ−½ for Gegenbauer, 0 otherwise.
  double beta() const noexcept { return beta_; }
  /// λ for Gegenbauer, 0 otherwise.
  double lambda() const noexcept { return lambda_; }

  bool is_jacobi_type() const noexcept {
    return kind_ == FamilyKind::Jacobi || kind_ == FamilyKind::Gegenbauer;
  }

  /// The family whose normalized members coincide with ours: Jacobi(λ−½, λ−½)
  /// for Gegenbauer, the family itself otherwise.
  FamilySpec orthonormal_equivalent() const;

  /// Open domain of orthogonality.
  double domain_lower() const noexcept;
  double domain_upper() const noexcept;
  bool in_domain(double x) const noexcept;

  std::string name() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

 private:
  FamilySpec(FamilyKind kind, double alpha, double beta, double lambda)
      : kind_(kind), alpha_(alpha), beta_(beta), lambda_(lambda) {}

  FamilyKind kind_;
  double alpha_;
  double beta_;
  double lambda_;
};

/// Squared norms ‖φ_n‖² under the family's probability measure, n = 0..size-1.
struct NormTable {
  FamilySpec family;
  std::vector<double> squared_norms;
};

/// d/dx φ_n = factor · ψ_{n−1}, ψ a member of `target`.
struct DerivativeShift {
  double factor;
  FamilySpec target;
  int target_degree;
};

/// Coefficients of the orthonormal three-term recurrence
///   x p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k−1},
/// where p_k = φ_k / ‖φ_k‖ keeps the Szegő sign. `diag[k]` = a_k for
/// k = 0..count−1 and `offdiag[k]` = b_{k+1} for k = 0..count−1.
struct Recurrence {
  std::vector<double> diag;
  std::vector<double> offdiag;
};

Recurrence orthonormal_recurrence(const FamilySpec& family, int count);

/// φ_n(x) in Szegő normalization by forward recurrence.
double eval_poly(const FamilySpec& family, int n, double x,
                 int degree_cap = kDefaultDegreeCap);

struct Evaluation {
  double value;
  bool outside_domain;
};
/// As eval_poly, flagging points outside the closure of the natural domain.
Evaluation eval_poly_flagged(const FamilySpec& family, int n, double x,
                             int degree_cap = kDefaultDegreeCap);

/// φ_0(x) .. φ_n(x).
std::vector<double> eval_poly_all(const FamilySpec& family, int n, double x,
                                  int degree_cap = kDefaultDegreeCap);

/// φ_n(x) / ‖φ_n‖ via the orthonormal recurrence (never overflows through
/// the normalization).
double eval_orthonormal(const FamilySpec& family, int n, double x,
                        int degree_cap = kDefaultDegreeCap);
std::vector<double> eval_orthonormal_all(const FamilySpec& family, int n,
                                         double x,
                                         int degree_cap = kDefaultDegreeCap);

double log_squared_norm(const FamilySpec& family, int n);
/// Throws OverflowError (carrying the log) if the value is not representable.
double squared_norm(const FamilySpec& family, int n);
NormTable norm_table(const FamilySpec& family, int n_max);

/// P_n^{(α,β)}(1) = C(n+α, n). Jacobi family only.
double value_at_one(const FamilySpec& family, int n);

/// λ_k of the family's second-order operator.
double eigenvalue(const FamilySpec& family, int k);

DerivativeShift derivative_shift(const FamilySpec& family, int n);

/// d_n with (φ_n/‖φ_n‖)' = d_n · ψ_{n−1}/‖ψ_{n−1}‖, ψ the derivative target.
double orthonormal_derivative_factor(const FamilySpec& family, int n);

/// c = Γ(2λ)Γ(n+λ+½) / (Γ(λ+½)Γ(n+2λ)), so that C_n^λ = c⁻¹ P_n^{(λ−½,λ−½)}.
double log_gegenbauer_conversion_factor(double lambda, int n);
double gegenbauer_conversion_factor(double lambda, int n);

/// (L φ_n)(x) using derivative shifts, no numerical differentiation.
/// Rejects x outside the open domain.
double apply_operator(const FamilySpec& family, int n, double x);

}  // namespace lptrans
