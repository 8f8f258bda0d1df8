#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <vector>

#include "lptrans/errors.hpp"
#include "lptrans/spectral.hpp"
#include "oracles.hpp"

using namespace lptrans;

TEST_CASE("expansion recovers polynomial coefficients") {
  const FamilySpec h = FamilySpec::hermite();
  const QuadratureRule r = gauss_rule(MeasureSpec::for_family(h), 40);
  const SpectralCoefficients c = expand([](double x) { return x * x * x; }, h, 6, r);
  const std::vector<double> s = to_szego(c);
  const std::vector<double> ref = {0, 0.75, 0, 0.125, 0, 0, 0};
  for (int k = 0; k <= 6; ++k) CHECK(s[k] == doctest::Approx(ref[k]).scale(1.0).epsilon(1e-14));

  const FamilySpec leg = FamilySpec::jacobi(0, 0);
  const QuadratureRule rl = gauss_rule(MeasureSpec::for_family(leg), 30);
  const SpectralCoefficients cl = expand([](double x) { return x * x; }, leg, 4, rl);
  const std::vector<double> sl = to_szego(cl);
  CHECK(sl[0] == doctest::Approx(1.0 / 3.0));
  CHECK(sl[1] == 0.0);
  CHECK(sl[2] == doctest::Approx(2.0 / 3.0));
  CHECK(sl[3] == 0.0);
  CHECK(energy(cl) == doctest::Approx(0.2));  // E[x⁴] on the uniform measure

  const SpectralCoefficients back = from_szego(leg, sl);
  for (int k = 0; k <= 4; ++k) CHECK(back.coeffs[k] == doctest::Approx(cl.coeffs[k]).scale(1.0));
  for (double x : {-0.7, 0.2, 0.9}) CHECK(reconstruct(cl, x) == doctest::Approx(x * x));
  const std::vector<double> pts = {0.1, 0.5};
  const std::vector<double> vals = reconstruct(cl, pts);
  CHECK(vals[1] == doctest::Approx(0.25));
}

TEST_CASE("expansion preconditions") {
  const FamilySpec l = FamilySpec::laguerre(0.0);
  const QuadratureRule r = gauss_rule(MeasureSpec::for_family(l), 30);
  auto f = [](double x) { return x; };
  CHECK_THROWS_AS(expand(f, l, 15, r), ParameterError);
  CHECK_NOTHROW(expand(f, l, 14, r));
  CHECK_THROWS_AS(expand(f, FamilySpec::laguerre(1.0), 4, r), ParameterError);
  CHECK_THROWS_AS(expand([](double) { return NAN; }, l, 4, r), NumericalError);
  // Gegenbauer expands against its equivalent Jacobi measure
  const QuadratureRule rg = gauss_rule(MeasureSpec::jacobi_beta(0.5, 0.5), 30);
  CHECK_NOTHROW(expand(f, FamilySpec::gegenbauer(1.0), 4, rg));
}

TEST_CASE("basis table rows are orthonormal") {
  const FamilySpec j = FamilySpec::jacobi(2.0, -0.5);
  const QuadratureRule r = gauss_rule(MeasureSpec::for_family(j), 40);
  const BasisTable t = basis_table(j, 20, r.nodes);
  for (int n = 0; n <= 20; ++n) {
    for (int m = 0; m <= n; ++m) {
      double s = 0.0;
      for (int i = 0; i < r.order(); ++i) s += r.weights[i] * t.row(n)[i] * t.row(m)[i];
      CHECK(s == doctest::Approx(n == m ? 1.0 : 0.0).scale(1.0).epsilon(1e-13));
    }
    CHECK(t.row(n)[3] ==
          doctest::Approx(oracle::jacobi(n, 2.0, -0.5, r.nodes[3]) /
                          std::sqrt(oracle::jacobi_norm2(n, 2.0, -0.5)))
              .epsilon(1e-11)
              .scale(1.0));
  }
}

TEST_CASE("semigroups") {
  CHECK(semigroup_multiplier(SemigroupKind::Heat, 4.0, 0.5) == doctest::Approx(std::exp(-2.0)));
  CHECK(semigroup_multiplier(SemigroupKind::Poisson, 4.0, 0.5) == doctest::Approx(std::exp(-1.0)));
  CHECK_THROWS_AS(semigroup_multiplier(SemigroupKind::Heat, 1.0, -1.0), ParameterError);

  const FamilySpec f = FamilySpec::jacobi(0.5, 1.0);
  const SpectralCoefficients c = from_szego(f, std::vector<double>{0.3, -1.0, 0.25, 2.0});
  const double t = 0.7;
  const SpectralCoefficients heat = semigroup_apply(c, SemigroupKind::Heat, t);
  const SpectralCoefficients pois = semigroup_apply(c, SemigroupKind::Poisson, t);
  for (int k = 0; k <= 3; ++k) {
    CHECK(heat.coeffs[k] == doctest::Approx(std::exp(-t * eigenvalue(f, k)) * c.coeffs[k]));
    CHECK(pois.coeffs[k] == doctest::Approx(std::exp(-t * std::sqrt(eigenvalue(f, k))) * c.coeffs[k]));
  }
  // semigroup property
  const SpectralCoefficients twice =
      semigroup_apply(semigroup_apply(c, SemigroupKind::Poisson, 0.3), SemigroupKind::Poisson, 0.4);
  for (int k = 0; k <= 3; ++k) {
    CHECK(twice.coeffs[k] == doctest::Approx(pois.coeffs[k]));
  }

  // derivatives against finite differences of P_t f
  const double h = 1e-5;
  const SpectralCoefficients dt = poisson_time_derivative(c, t);
  const SpectralCoefficients dx = poisson_space_derivative(c, t);
  for (double x : {-0.5, 0.1, 0.8}) {
    const double fd_t = (reconstruct(semigroup_apply(c, SemigroupKind::Poisson, t + h), x) -
                         reconstruct(semigroup_apply(c, SemigroupKind::Poisson, t - h), x)) /
                        (2 * h);
    CHECK(reconstruct(dt, x) == doctest::Approx(fd_t).epsilon(1e-7));
    const double fd_x = (reconstruct(pois, x + h) - reconstruct(pois, x - h)) / (2 * h);
    CHECK(reconstruct(dx, x) == doctest::Approx(fd_x).epsilon(1e-7));
  }
  const SpectralCoefficients constant = from_szego(f, std::vector<double>{2.0});
  const SpectralCoefficients dconst = poisson_space_derivative(constant, t);
  REQUIRE(dconst.coeffs.size() == 1);
  CHECK(dconst.coeffs[0] == 0.0);
}

TEST_CASE("heat kernel matches the explicit sum") {
  const FamilySpec f = FamilySpec::jacobi(0, 0);
  for (double t : {0.1, 0.5, 1.0}) {
    const int n = kernel_truncation(f, t);
    CHECK(n >= 1);
    for (double x : {-0.9, 0.0, 0.6}) {
      for (double y : {-0.3, 0.95}) {
        double ref = 0.0;
        for (int k = 0; k <= n; ++k) {
          ref += std::exp(-t * k * (k + 1.0)) * oracle::jacobi(k, 0, 0, x) * oracle::jacobi(k, 0, 0, y) /
                 oracle::jacobi_norm2(k, 0, 0);
        }
        CHECK(kernel(f, t, x, y, n) == doctest::Approx(ref).epsilon(1e-12));
        CHECK(kernel(f, t, x, y, n) == doctest::Approx(kernel(f, t, y, x, n)));
      }
    }
  }
  CHECK(kernel_truncation(f, 0.1) > kernel_truncation(f, 1.0));
  CHECK_THROWS_AS(kernel(f, 0.01, 0.0, 0.0, 2), NumericalError);
  CHECK_THROWS_AS(kernel(FamilySpec::hermite(), 1.0, 0.0, 0.0, 5), ParameterError);
  CHECK_THROWS_AS(kernel_truncation(f, 0.0), ParameterError);
}

TEST_CASE("subordination integral") {
  boost::math::quadrature::exp_sinh<double> integrator;
  for (double lam : {0.0, 1.0, 4.0, 25.0, 400.0}) {
    for (double t : {0.1, 0.5, 1.0, 2.0}) {
      const double a = lam * t * t / 4.0;
      const double ref =
          integrator.integrate([a](double u) { return std::exp(-u - a / u) / std::sqrt(u); }) /
          std::sqrt(M_PI);
      const double v = bochner_integral(lam, t);
      CHECK(v == doctest::Approx(ref).epsilon(1e-10).scale(1e-300));
      CHECK(v == doctest::Approx(std::exp(-std::sqrt(lam) * t)).epsilon(1e-10));
      CHECK(bochner_check(lam, t) <= 1e-10 * std::max(v, 1e-300) + 1e-15);
    }
  }
  CHECK(bochner_integral(9.0, 0.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(bochner_integral(-1.0, 1.0), ParameterError);
}
