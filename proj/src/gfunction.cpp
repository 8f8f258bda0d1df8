#include "lptrans/gfunction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lptrans/errors.hpp"
#include "lptrans/parallel.hpp"
#include "lptrans/simd/kernels.hpp"

namespace lptrans {
namespace {

constexpr double kClamp = -1e-12;
constexpr std::size_t kChunk = 256;

double sum_tail_squares(const SpectralCoefficients& c) {
  double s = 0.0;
  for (std::size_t k = 1; k < c.coeffs.size(); ++k) s += c.coeffs[k] * c.coeffs[k];
  return s;
}

}  // namespace

double time_weight(double lambda_n, double lambda_m) {
  const double a = std::sqrt(lambda_n);
  const double b = std::sqrt(lambda_m);
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b / ((a + b) * (a + b));
}

double space_weight(double lambda_n, double lambda_m) {
  const double s = std::sqrt(lambda_n) + std::sqrt(lambda_m);
  return 1.0 / (s * s);
}

double natural_derivative_weight(const FamilySpec& family, double x) {
  switch (family.kind()) {
    case FamilyKind::Jacobi:
    case FamilyKind::Gegenbauer:
      return 1.0 - x * x;
    case FamilyKind::Hermite:
      return 0.5;
    case FamilyKind::Laguerre:
      return x;
  }
  return 0.0;
}

std::vector<double> GFunctionDecomposition::g() const {
  std::vector<double> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double r = time_part[i] + space_part[i];
    if (r < 0.0) {
      if (r < kClamp) {
        throw NumericalError("g-function radicand " + std::to_string(r) + " at x = " +
                             std::to_string(points[i]));
      }
      out[i] = 0.0;
    } else {
      out[i] = std::sqrt(r);
    }
  }
  return out;
}

GFunctionDecomposition g_decompose_truncated(const SpectralCoefficients& c,
                                             std::span<const double> points,
                                             int total_degree) {
  const FamilySpec& fam = c.family;
  for (double x : points) {
    if (!(x >= fam.domain_lower() && x <= fam.domain_upper())) {
      throw DomainError("g-function evaluated outside the domain of " + fam.name());
    }
  }
  GFunctionDecomposition d;
  d.points.assign(points.begin(), points.end());
  d.time_part.assign(points.size(), 0.0);
  d.space_part.assign(points.size(), 0.0);
  const int n = c.truncation();
  if (n < 1 || points.empty()) return d;

  const std::size_t dim = static_cast<std::size_t>(n);
  std::vector<double> lam(dim + 1), dfac(dim + 1);
  for (int k = 1; k <= n; ++k) {
    lam[static_cast<std::size_t>(k)] = eigenvalue(fam, k);
    dfac[static_cast<std::size_t>(k)] = orthonormal_derivative_factor(fam, k);
  }
  std::vector<double> w1(dim * dim, 0.0), w2(dim * dim, 0.0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (total_degree >= 0 && i + j > total_degree) continue;
      const std::size_t iu = static_cast<std::size_t>(i);
      const std::size_t ju = static_cast<std::size_t>(j);
      const double cc = c.coeffs[iu] * c.coeffs[ju];
      const std::size_t at = (iu - 1) * dim + (ju - 1);
      w1[at] = cc * time_weight(lam[iu], lam[ju]);
      w2[at] = cc * space_weight(lam[iu], lam[ju]) * dfac[iu] * dfac[ju];
    }
  }

  const FamilySpec target = derivative_shift(fam, 1).target;
  const std::size_t chunks = (points.size() + kChunk - 1) / kChunk;
  parallel_for(chunks, [&](std::size_t chunk) {
    const std::size_t lo = chunk * kChunk;
    const std::size_t hi = std::min(points.size(), lo + kChunk);
    const std::span<const double> xs = points.subspan(lo, hi - lo);
    const std::size_t count = xs.size();
    const BasisTable phi = basis_table(fam, n, xs);
    const BasisTable psi = basis_table(target, n - 1, xs);
    std::span<const double> phi_rows(phi.values.data() + count, dim * count);
    std::span<double> g1(d.time_part.data() + lo, count);
    std::span<double> g2(d.space_part.data() + lo, count);
    simd::quadratic_forms(w1, n, phi_rows, count, g1);
    simd::quadratic_forms(w2, n, psi.values, count, g2);
    for (std::size_t i = 0; i < count; ++i) g2[i] *= natural_derivative_weight(fam, xs[i]);
  });
  return d;
}

GFunctionDecomposition g_decompose(const SpectralCoefficients& c,
                                   std::span<const double> points) {
  return g_decompose_truncated(c, points, -1);
}

double g_pointwise(const SpectralCoefficients& c, double x) {
  const double pts[1] = {x};
  return g_decompose(c, pts).g()[0];
}

double g_time_energy(const SpectralCoefficients& c) { return 0.25 * sum_tail_squares(c); }

double g_space_energy(const SpectralCoefficients& c) { return 0.25 * sum_tail_squares(c); }

double g_l2_norm(const SpectralCoefficients& c) {
  return std::sqrt(0.5 * sum_tail_squares(c));
}

double g_lp_norm(const SpectralCoefficients& c, double p, const QuadratureRule& rule) {
  if (!(p > 1.0)) throw ParameterError("g_lp_norm requires p > 1");
  if (!(rule.measure == MeasureSpec::for_family(c.family))) {
    throw ParameterError("g_lp_norm: quadrature measure does not match " + c.family.name());
  }
  return lp_norm_values(g_decompose(c, rule.nodes).g(), p, rule);
}

GFunctionResult g_evaluate(const SpectralCoefficients& c, const QuadratureRule& rule,
                           std::span<const double> exponents) {
  if (!(rule.measure == MeasureSpec::for_family(c.family))) {
    throw ParameterError("g_evaluate: quadrature measure does not match " + c.family.name());
  }
  GFunctionResult r;
  r.nodes = rule.nodes;
  r.values = g_decompose(c, rule.nodes).g();
  r.l2_closed_form = g_l2_norm(c);
  for (double p : exponents) {
    if (!(p > 1.0)) throw ParameterError("g_evaluate: exponents must be > 1");
    r.lp_norms[p] = lp_norm_values(r.values, p, rule);
  }
  return r;
}

RatioReport g_ratio_report(const std::vector<NamedFunction>& corpus,
                           const FamilySpec& family, std::span<const double> exponents,
                           int truncation, int order) {
  if (corpus.empty()) throw ParameterError("g_ratio_report: empty corpus");
  const QuadratureRule rule = gauss_rule(MeasureSpec::for_family(family), order);
  RatioReport report;
  for (const NamedFunction& member : corpus) {
    const std::vector<double> samples = sample(member.f, rule);
    const SpectralCoefficients c = expand_values(samples, family, truncation, rule);
    const std::vector<double> g = g_decompose(c, rule.nodes).g();
    for (double p : exponents) {
      if (!(p > 1.0)) throw ParameterError("g_ratio_report: exponents must be > 1");
      RatioRow row{member.name, p, lp_norm_values(g, p, rule),
                   lp_norm_values(samples, p, rule), 0.0};
      row.ratio = row.f_norm > 0.0 ? row.g_norm / row.f_norm : 0.0;
      report.rows.push_back(row);
      auto [it, inserted] = report.max_ratio.emplace(p, row.ratio);
      if (!inserted) it->second = std::max(it->second, row.ratio);
    }
  }
  return report;
}

}  // namespace lptrans
