#include <cmath>

#include "doctest.h"
#include "laurent.hpp"
#include "moments.hpp"

using namespace g2rmt;

TEST_CASE("closed form matches hand values") {
  CHECK(macdonald_g2(1, 1) == 1);
  CHECK(macdonald_g2(2, 1) == 6);
  CHECK(macdonald_g2(3, 1) == 55);
  CHECK(macdonald_g2(2, 2) == 33);
}

TEST_CASE("exact moments are the advertised constant terms") {
  CHECK(moment_rep7_exact(0) == 1);
  CHECK(moment_rep7_exact(1) == 6);
  CHECK(moment_rep7_exact(2) == 55);
  CHECK(moment_rep14_exact(0) == 1);
  CHECK(moment_rep14_exact(1) == 33);
  for (unsigned s = 0; s <= 3; ++s) {
    CHECK(moment_rep7_exact(s) == macdonald_g2(s + 1, 1));
    CHECK(moment_rep14_exact(s) == macdonald_g2(s + 1, s + 1));
  }
}

TEST_CASE("gamma form interpolates the exact moments") {
  for (unsigned s = 0; s <= 4; ++s) {
    const double exact = to_double(moment_rep7_exact(s));
    const cplx g = moment_rep7_gamma(cplx(double(s), 0));
    CHECK(std::abs(g.real() - exact) <= 1e-12 * exact);
    CHECK(std::abs(g.imag()) <= 1e-12 * exact);
  }
  for (unsigned s = 0; s <= 3; ++s) {
    const double exact = to_double(moment_rep14_exact(s));
    const cplx g = moment_rep14_gamma(cplx(double(s), 0));
    CHECK(std::abs(g.real() - exact) <= 1e-12 * exact);
  }
}

TEST_CASE("gamma formulas agree with their data form") {
  const GammaRatioFormula f7 = rep7_formula();
  const GammaRatioFormula f14 = rep14_formula();
  for (double s : {0.25, 0.5, 1.0, 1.75}) {
    CHECK(std::abs(f7.eval(cplx(s, 0)) - moment_rep7_gamma(cplx(s, 0))) < 1e-10);
    CHECK(std::abs(f14.eval(cplx(s, 0)) - moment_rep14_gamma(cplx(s, 0))) < 1e-10);
  }
  // log form exponentiates to the plain form
  const cplx s(0.7, 0.3);
  CHECK(std::abs(std::exp(f7.log_eval(s)) - f7.eval(s)) < 1e-10);
}

TEST_CASE("gamma form is continuous at the integers") {
  const double eps = 1e-7;
  const cplx lo = moment_rep7_gamma(cplx(1.0 - eps, 0));
  const cplx hi = moment_rep7_gamma(cplx(1.0 + eps, 0));
  CHECK(std::abs(lo - hi) < 1e-4);
}

TEST_CASE("unitary symplectic reference moments") {
  CHECK(std::abs(moment_usp(1, cplx(0, 0)).real() - 1.0) < 1e-12);
  CHECK(std::abs(moment_usp(2, cplx(0, 0)).real() - 1.0) < 1e-12);
  CHECK(std::abs(moment_usp(3, cplx(0, 0)).real() - 1.0) < 1e-12);
  CHECK(std::abs(moment_usp(1, cplx(1, 0)).real() - 2.0) < 1e-10);
  CHECK(std::abs(moment_usp(1, cplx(2, 0)).real() - 5.0) < 1e-10);
  CHECK(std::abs(moment_usp(2, cplx(1, 0)).real() - 3.0) < 1e-10);
}
