#include <cstddef>
#include <stdexcept>

#include "lptrans/simd/kernels.hpp"

namespace lptrans::simd::scalar {

void orthonormal_table(std::span<const double> diag,
                       std::span<const double> offdiag, int n_max,
                       std::span<const double> xs, std::span<double> out) {
  const std::size_t nx = xs.size();
  const std::size_t rows = static_cast<std::size_t>(n_max) + 1;
  if (out.size() < rows * nx || diag.size() < static_cast<std::size_t>(n_max) ||
      offdiag.size() < static_cast<std::size_t>(n_max)) {
    throw std::invalid_argument("orthonormal_table: buffer too small");
  }
  for (std::size_t i = 0; i < nx; ++i) out[i] = 1.0;
  if (n_max == 0) return;
  const double inv0 = 1.0 / offdiag[0];
  for (std::size_t i = 0; i < nx; ++i) out[nx + i] = (xs[i] - diag[0]) * inv0;
  for (int k = 1; k < n_max; ++k) {
    const std::size_t ku = static_cast<std::size_t>(k);
    const double a = diag[ku];
    const double back = offdiag[ku - 1];
    const double inv = 1.0 / offdiag[ku];
    const double* pk = out.data() + ku * nx;
    const double* pm = pk - nx;
    double* pn = out.data() + (ku + 1) * nx;
    for (std::size_t i = 0; i < nx; ++i) {
      pn[i] = ((xs[i] - a) * pk[i] - back * pm[i]) * inv;
    }
  }
}

void quadratic_forms(std::span<const double> w, int dim,
                     std::span<const double> v, std::size_t count,
                     std::span<double> out) {
  const std::size_t d = static_cast<std::size_t>(dim);
  if (w.size() < d * d || v.size() < d * count || out.size() < count) {
    throw std::invalid_argument("quadratic_forms: buffer too small");
  }
  for (std::size_t i = 0; i < count; ++i) out[i] = 0.0;
  for (std::size_t n = 0; n < d; ++n) {
    const double* vn = v.data() + n * count;
    for (std::size_t m = n; m < d; ++m) {
      const double c = (m == n ? 1.0 : 2.0) * w[n * d + m];
      if (c == 0.0) continue;
      const double* vm = v.data() + m * count;
      for (std::size_t i = 0; i < count; ++i) out[i] += c * vn[i] * vm[i];
    }
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace lptrans::simd::scalar
