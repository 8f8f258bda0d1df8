#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <functional>
#include <vector>

#include "lptrans/errors.hpp"
#include "lptrans/gfunction.hpp"
#include "oracles.hpp"

using namespace lptrans;

namespace {

// g(x)² = ∫₀^∞ t (|∂_t P_t f|² + ρ(x)|∂_x P_t f|²) dt with the orthonormal
// basis from explicit series and ∂_x by central differences.
double g_squared_oracle(const FamilySpec& fam, const std::function<double(int, double)>& p,
                        const std::vector<double>& c, double x, double rho) {
  const int n = static_cast<int>(c.size());
  std::vector<double> val(n), der(n), root(n);
  const double h = 1e-6;
  for (int k = 0; k < n; ++k) {
    val[k] = p(k, x);
    der[k] = (p(k, x + h) - p(k, x - h)) / (2 * h);
    root[k] = std::sqrt(eigenvalue(fam, k));
  }
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate([&](double t) {
    double dt = 0.0, dx = 0.0;
    for (int k = 0; k < n; ++k) {
      const double e = std::exp(-t * root[k]) * c[k];
      dt -= root[k] * e * val[k];
      dx += e * der[k];
    }
    return t * (dt * dt + rho * dx * dx);
  });
}

}  // namespace

TEST_CASE("kernel weights are the t-integrals") {
  boost::math::quadrature::exp_sinh<double> integrator;
  for (double a : {0.5, 2.0, 30.0}) {
    for (double b : {1.0, 6.0}) {
      const double s = std::sqrt(a) + std::sqrt(b);
      const double ti = integrator.integrate([s](double t) { return t * std::exp(-t * s); });
      CHECK(time_weight(a, b) == doctest::Approx(std::sqrt(a * b) * ti).epsilon(1e-12));
      CHECK(space_weight(a, b) == doctest::Approx(ti).epsilon(1e-12));
    }
  }
  CHECK(time_weight(0.0, 0.0) == 0.0);
  CHECK(natural_derivative_weight(FamilySpec::jacobi(1, 1), 0.5) == doctest::Approx(0.75));
  CHECK(natural_derivative_weight(FamilySpec::hermite(), 3.0) == doctest::Approx(0.5));
  CHECK(natural_derivative_weight(FamilySpec::laguerre(0), 3.0) == doctest::Approx(3.0));
}

TEST_CASE("pointwise g matches the defining t-integral") {
  struct Case {
    FamilySpec fam;
    std::function<double(int, double)> p;
    std::vector<double> xs;
    std::function<double(double)> rho;
  };
  const std::vector<Case> cases = {
      {FamilySpec::jacobi(0.5, 1.0),
       [](int k, double x) { return oracle::jacobi(k, 0.5, 1.0, x) / std::sqrt(oracle::jacobi_norm2(k, 0.5, 1.0)); },
       {-0.8, 0.0, 0.45}, [](double x) { return 1 - x * x; }},
      {FamilySpec::hermite(),
       [](int k, double x) { return oracle::hermite(k, x) / std::sqrt(oracle::hermite_norm2(k)); },
       {-1.5, 0.2, 2.0}, [](double) { return 0.5; }},
      {FamilySpec::laguerre(1.0),
       [](int k, double x) { return oracle::laguerre(k, 1.0, x) / std::sqrt(oracle::laguerre_norm2(k, 1.0)); },
       {0.3, 1.0, 5.0}, [](double x) { return x; }},
  };
  const std::vector<double> coeffs = {0.7, -0.4, 0.25, 0.0, 0.1, -0.05};
  for (const Case& cs : cases) {
    CAPTURE(cs.fam.name());
    SpectralCoefficients c{cs.fam, coeffs};
    const GFunctionDecomposition d = g_decompose(c, cs.xs);
    const std::vector<double> g = d.g();
    for (std::size_t i = 0; i < cs.xs.size(); ++i) {
      const double ref = g_squared_oracle(cs.fam, cs.p, coeffs, cs.xs[i], cs.rho(cs.xs[i]));
      CHECK(d.time_part[i] + d.space_part[i] == doctest::Approx(ref).epsilon(1e-7));
      CHECK(g[i] == doctest::Approx(std::sqrt(ref)).epsilon(1e-7));
      CHECK(g_pointwise(c, cs.xs[i]) == doctest::Approx(g[i]).epsilon(1e-12));
    }
  }
  SpectralCoefficients lag{FamilySpec::laguerre(0), {1.0, 1.0}};
  CHECK_THROWS_AS(g_pointwise(lag, -1.0), DomainError);
}

TEST_CASE("closed-form energies") {
  const FamilySpec f = FamilySpec::gegenbauer(2.0);
  const SpectralCoefficients c{f, {5.0, 0.3, -0.2, 0.1}};
  const double tail = 0.09 + 0.04 + 0.01;
  CHECK(g_time_energy(c) == doctest::Approx(tail / 4));
  CHECK(g_space_energy(c) == doctest::Approx(tail / 4));
  CHECK(g_l2_norm(c) == doctest::Approx(std::sqrt(tail / 2)));

  const QuadratureRule r = gauss_rule(MeasureSpec::for_family(f), 64);
  const GFunctionDecomposition d = g_decompose(c, r.nodes);
  CHECK(integrate_values(d.time_part, r) == doctest::Approx(tail / 4).epsilon(1e-12));
  CHECK(integrate_values(d.space_part, r) == doctest::Approx(tail / 4).epsilon(1e-12));

  // constants have g ≡ 0
  const GFunctionDecomposition z = g_decompose(SpectralCoefficients{f, {3.0}}, r.nodes);
  for (double v : z.g()) CHECK(v == 0.0);
}

TEST_CASE("total-degree truncation") {
  const FamilySpec f = FamilySpec::hermite();
  const SpectralCoefficients c{f, {0.0, 1.0, 0.5, 0.25, 0.125}};
  const std::vector<double> xs = {-1.0, 0.5};
  const GFunctionDecomposition full = g_decompose(c, xs);
  const GFunctionDecomposition all = g_decompose_truncated(c, xs, -1);
  const GFunctionDecomposition big = g_decompose_truncated(c, xs, 8);
  const GFunctionDecomposition low = g_decompose_truncated(c, xs, 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(all.time_part[i] == doctest::Approx(full.time_part[i]));
    CHECK(big.space_part[i] == doctest::Approx(full.space_part[i]));
  }
  // n + m ≤ 2 leaves only the (1,1) mode
  const SpectralCoefficients one{f, {0.0, 1.0}};
  const GFunctionDecomposition ref = g_decompose(one, xs);
  CHECK(low.time_part[0] == doctest::Approx(ref.time_part[0]));
  CHECK(low.space_part[1] == doctest::Approx(ref.space_part[1]));
}

TEST_CASE("Lp norms and ratio reports") {
  const FamilySpec f = FamilySpec::laguerre(0.5);
  const QuadratureRule r = gauss_rule(MeasureSpec::for_family(f), 80);
  const SpectralCoefficients c = expand([](double x) { return x - 1.5; }, f, 8, r);
  const std::vector<double> g = g_decompose(c, r.nodes).g();
  const double p3 = lp_norm_values(g, 3.0, r);
  CHECK(g_lp_norm(c, 3.0, r) == doctest::Approx(p3));
  CHECK(g_lp_norm(c, 2.0, r) == doctest::Approx(g_l2_norm(c)).epsilon(1e-12));
  const std::vector<double> ps = {1.5, 3.0};
  const GFunctionResult res = g_evaluate(c, r, ps);
  CHECK(res.lp_norms.at(3.0) == doctest::Approx(p3));
  CHECK(res.l2_closed_form == doctest::Approx(g_l2_norm(c)));
  CHECK_THROWS_AS(g_lp_norm(c, 1.0, r), ParameterError);
  CHECK_THROWS_AS(g_lp_norm(c, 2.0, gauss_rule(MeasureSpec::gaussian(), 80)), ParameterError);

  const std::vector<NamedFunction> corpus = {{"zero", [](double) { return 0.0; }},
                                             {"lin", [](double x) { return x - 1.5; }}};
  const RatioReport rep = g_ratio_report(corpus, f, ps, 8, 80);
  REQUIRE(rep.rows.size() == 4);
  CHECK(rep.rows[0].ratio == 0.0);
  const double fn = lp_norm([](double x) { return x - 1.5; }, 3.0, r);
  CHECK(rep.rows[3].ratio == doctest::Approx(p3 / fn).epsilon(1e-10));
  CHECK(rep.max_ratio.at(3.0) == doctest::Approx(p3 / fn).epsilon(1e-10));
  CHECK_THROWS_AS(g_ratio_report({}, f, ps, 8, 80), ParameterError);
}
