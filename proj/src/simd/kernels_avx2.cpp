#include <immintrin.h>

#include <cstddef>
#include <stdexcept>

#include "lptrans/simd/kernels.hpp"

namespace lptrans::simd::avx2 {

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
  const std::size_t vec_end = nx - nx % 4;
  {
    const __m256d a = _mm256_set1_pd(diag[0]);
    const __m256d inv = _mm256_set1_pd(1.0 / offdiag[0]);
    std::size_t i = 0;
    for (; i < vec_end; i += 4) {
      const __m256d x = _mm256_loadu_pd(xs.data() + i);
      _mm256_storeu_pd(out.data() + nx + i, _mm256_mul_pd(_mm256_sub_pd(x, a), inv));
    }
    for (; i < nx; ++i) out[nx + i] = (xs[i] - diag[0]) * (1.0 / offdiag[0]);
  }
  for (int k = 1; k < n_max; ++k) {
    const std::size_t ku = static_cast<std::size_t>(k);
    const double inv_s = 1.0 / offdiag[ku];
    const __m256d a = _mm256_set1_pd(diag[ku]);
    const __m256d back = _mm256_set1_pd(offdiag[ku - 1]);
    const __m256d inv = _mm256_set1_pd(inv_s);
    const double* pk = out.data() + ku * nx;
    const double* pm = pk - nx;
    double* pn = out.data() + (ku + 1) * nx;
    std::size_t i = 0;
    for (; i < vec_end; i += 4) {
      const __m256d x = _mm256_loadu_pd(xs.data() + i);
      const __m256d cur = _mm256_loadu_pd(pk + i);
      const __m256d prev = _mm256_loadu_pd(pm + i);
      const __m256d t = _mm256_fmsub_pd(_mm256_sub_pd(x, a), cur, _mm256_mul_pd(back, prev));
      _mm256_storeu_pd(pn + i, _mm256_mul_pd(t, inv));
    }
    for (; i < nx; ++i) {
      pn[i] = ((xs[i] - diag[ku]) * pk[i] - offdiag[ku - 1] * pm[i]) * inv_s;
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
  const std::size_t vec_end = count - count % 4;
  for (std::size_t n = 0; n < d; ++n) {
    const double* vn = v.data() + n * count;
    for (std::size_t m = n; m < d; ++m) {
      const double c = (m == n ? 1.0 : 2.0) * w[n * d + m];
      if (c == 0.0) continue;
      const double* vm = v.data() + m * count;
      const __m256d cv = _mm256_set1_pd(c);
      std::size_t i = 0;
      for (; i < vec_end; i += 4) {
        const __m256d prod = _mm256_mul_pd(_mm256_mul_pd(cv, _mm256_loadu_pd(vn + i)),
                                           _mm256_loadu_pd(vm + i));
        _mm256_storeu_pd(out.data() + i, _mm256_add_pd(_mm256_loadu_pd(out.data() + i), prod));
      }
      for (; i < count; ++i) out[i] += c * vn[i] * vm[i];
    }
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  const std::size_t n = a.size();
  const std::size_t vec_end = n - n % 16;
  __m256d s0 = _mm256_setzero_pd();
  __m256d s1 = _mm256_setzero_pd();
  __m256d s2 = _mm256_setzero_pd();
  __m256d s3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i < vec_end; i += 16) {
    s0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i), s0);
    s1 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i + 4),
                         _mm256_loadu_pd(b.data() + i + 4), s1);
    s2 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i + 8),
                         _mm256_loadu_pd(b.data() + i + 8), s2);
    s3 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i + 12),
                         _mm256_loadu_pd(b.data() + i + 12), s3);
  }
  const __m256d s = _mm256_add_pd(_mm256_add_pd(s0, s1), _mm256_add_pd(s2, s3));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, s);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

}  // namespace lptrans::simd::avx2
