#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "lptrans/simd/kernels.hpp"

namespace lptrans::simd {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(LPTRANS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa initial_isa() noexcept {
  const char* env = std::getenv("LPTRANS_SIMD");
  if (env != nullptr && std::string(env) == "scalar") return Isa::Scalar;
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) noexcept {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool isa_supported(Isa isa) noexcept {
  return isa == Isa::Scalar || cpu_has_avx2();
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument(std::string("instruction set not supported: ") +
                                isa_name(isa));
  }
  current().store(isa, std::memory_order_relaxed);
}

void orthonormal_table(std::span<const double> diag,
                       std::span<const double> offdiag, int n_max,
                       std::span<const double> xs, std::span<double> out) {
#if defined(LPTRANS_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    avx2::orthonormal_table(diag, offdiag, n_max, xs, out);
    return;
  }
#endif
  scalar::orthonormal_table(diag, offdiag, n_max, xs, out);
}

void quadratic_forms(std::span<const double> w, int dim,
                     std::span<const double> v, std::size_t count,
                     std::span<double> out) {
#if defined(LPTRANS_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    avx2::quadratic_forms(w, dim, v, count, out);
    return;
  }
#endif
  scalar::quadratic_forms(w, dim, v, count, out);
}

double dot(std::span<const double> a, std::span<const double> b) {
#if defined(LPTRANS_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::dot(a, b);
#endif
  return scalar::dot(a, b);
}

}  // namespace lptrans::simd
