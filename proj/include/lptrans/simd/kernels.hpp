#pragma once

// Data-parallel inner loops. Every kernel has a portable scalar reference and
// an AVX2/FMA variant; the variant is picked once at runtime from CPUID and
// can be pinned with LPTRANS_SIMD=scalar|avx2.

#include <cstddef>
#include <span>

namespace lptrans::simd {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;
Isa active_isa() noexcept;
/// Switches the dispatch target. Throws std::invalid_argument if the CPU
/// lacks the instruction set.
void set_active_isa(Isa isa);

/// out[k * xs.size() + i] = p_k(xs[i]) for k = 0..n_max, with p_0 = 1 and
///   p_{k+1} = ((x − diag[k]) p_k − offdiag[k−1] p_{k−1}) / offdiag[k].
void orthonormal_table(std::span<const double> diag,
                       std::span<const double> offdiag, int n_max,
                       std::span<const double> xs, std::span<double> out);

/// out[i] = Σ_{n,m<dim} w[n*dim + m] v[n*count + i] v[m*count + i] for a
/// symmetric w.
void quadratic_forms(std::span<const double> w, int dim,
                     std::span<const double> v, std::size_t count,
                     std::span<double> out);

double dot(std::span<const double> a, std::span<const double> b);

namespace scalar {
void orthonormal_table(std::span<const double> diag,
                       std::span<const double> offdiag, int n_max,
                       std::span<const double> xs, std::span<double> out);
void quadratic_forms(std::span<const double> w, int dim,
                     std::span<const double> v, std::size_t count,
                     std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
}  // namespace scalar

#if defined(LPTRANS_HAVE_AVX2)
namespace avx2 {
void orthonormal_table(std::span<const double> diag,
                       std::span<const double> offdiag, int n_max,
                       std::span<const double> xs, std::span<double> out);
void quadratic_forms(std::span<const double> w, int dim,
                     std::span<const double> v, std::size_t count,
                     std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
}  // namespace avx2
#endif

}  // namespace lptrans::simd
