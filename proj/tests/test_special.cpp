#include <doctest.h>

#include <cmath>

#include "lptrans/errors.hpp"
#include "lptrans/special.hpp"

using namespace lptrans;

TEST_CASE("log_gamma matches the C library") {
  for (double z : {1e-8, 0.1, 0.5, 1.0, 1.5, 2.0, 3.7, 10.0, 57.25, 170.5, 1e4, 1e8}) {
    const double ref = std::lgamma(z);
    CHECK(std::abs(log_gamma(z) - ref) <= 1e-14 * std::max(1.0, std::abs(ref)));
  }
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(log_gamma(0.0), ParameterError);
  CHECK_THROWS_AS(log_gamma(-1.5), ParameterError);
}

TEST_CASE("rising factorials and shifts") {
  CHECK(std::exp(log_rising(3.0, 4)) == doctest::Approx(3.0 * 4 * 5 * 6));
  CHECK(log_rising(2.5, 0) == 0.0);
  const double a = 1e12;
  // (a)_3 relative to a^3 stays accurate for huge a
  CHECK(log_rising(a, 3) - 3 * std::log(a) == doctest::Approx(3.0 / a).epsilon(1e-6));
  CHECK(log_gamma_shift(4.5, 2) == doctest::Approx(std::log(4.5 * 5.5)));
  CHECK(log_gamma_shift(4.5, -2) == doctest::Approx(-std::log(3.5 * 2.5)));
  CHECK(std::exp(log_factorial(10)) == doctest::Approx(3628800.0));
  CHECK(std::exp(log_binomial(0.0, 5)) == doctest::Approx(1.0));
  CHECK(std::exp(log_binomial(2.0, 3)) == doctest::Approx(10.0));
  CHECK(std::exp(log_binomial(0.5, 2)) ==
        doctest::Approx(std::tgamma(3.5) / (std::tgamma(1.5) * 2.0)));
  CHECK_THROWS_AS(log_rising(1.0, -1), ParameterError);
  CHECK_THROWS_AS(log_factorial(-1), ParameterError);
}
