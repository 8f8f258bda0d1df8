#pragma once

// Log-domain gamma machinery. Every norm, conversion factor and normalizing
// constant in the library goes through these.

namespace lptrans {

/// log Γ(z) for z > 0 (Lanczos approximation, 13 terms, g ≈ 6.0247).
double log_gamma(double z);

/// log of the rising factorial (a)_n = Γ(a+n)/Γ(a) for a > 0, n ≥ 0.
/// Summed term by term, so it stays accurate when a is huge.
double log_rising(double a, int n);

/// log Γ(a + shift) − log Γ(a) for integer shift of either sign.
double log_gamma_shift(double a, int shift);

/// log n!
double log_factorial(int n);

/// log of the generalized binomial coefficient C(n + a, n) = (a+1)_n / n!.
double log_binomial(double a, int n);

}  // namespace lptrans
