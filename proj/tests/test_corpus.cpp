#include <doctest.h>

#include <cmath>

#include "lptrans/corpus.hpp"
#include "lptrans/errors.hpp"
#include "oracles.hpp"

using namespace lptrans;

TEST_CASE("corpus members are centred and normalized") {
  for (const FamilySpec& f : {FamilySpec::jacobi(1.0, 0.5), FamilySpec::gegenbauer(10.0),
                              FamilySpec::hermite(), FamilySpec::laguerre(1.5)}) {
    CAPTURE(f.name());
    const QuadratureRule r = gauss_rule(MeasureSpec::for_family(f), 64);
    CHECK(standard_corpus(f).size() == 6);
    for (const NamedFunction& m : mean_zero_corpus(f)) {
      CAPTURE(m.name);
      CHECK(std::abs(integrate(m.f, r)) < 1e-13);
    }
    const NamedFunction phi3 = corpus_member(f, "phi3");
    CHECK(integrate([&](double x) { return phi3.f(x) * phi3.f(x); }, r) == doctest::Approx(1.0));
  }
  const NamedFunction x2c = corpus_member(FamilySpec::laguerre(1.5), "x2c");
  CHECK(x2c.f(0.0) == doctest::Approx(-oracle::gamma_moment(2, 1.5)));
  const NamedFunction sm = corpus_member(FamilySpec::hermite(), "smooth");
  CHECK(sm.f(2.0) == doctest::Approx(std::exp(1.0)));
  CHECK(corpus_member(FamilySpec::laguerre(0), "smooth").f(2.0) == doctest::Approx(std::exp(-1.0)));
  CHECK_THROWS_AS(corpus_member(FamilySpec::hermite(), "cubic"), ParameterError);
}
