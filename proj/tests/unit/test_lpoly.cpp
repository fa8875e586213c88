#include <cmath>
#include <complex>

#include "doctest.h"
#include "lpoly.hpp"

using namespace g2rmt;

TEST_CASE("newton identities round-trip") {
  // roots 1, 1, 1: e = (3, 3, 1), p = (3, 3, 3)
  const std::vector<double> e{3, 3, 1};
  const auto p = power_sums_from_elementary(e, 3);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(p[1] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(p[2] == doctest::Approx(3.0).epsilon(1e-14));
  const auto e2 = elementary_from_power_sums(p);
  REQUIRE(e2.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(e2[i] == doctest::Approx(e[i]).epsilon(1e-13));
}

TEST_CASE("newton identities over the rationals") {
  const std::vector<Rational> p{Rational(1), Rational(5), Rational(6)};
  const auto e = elementary_from_power_sums(p);
  REQUIRE(e.size() == 3);
  // e1 = p1; e2 = (e1 p1 - p2)/2; e3 = (e2 p1 - e1 p2 + p3)/3
  CHECK(e[0] == Rational(1));
  CHECK(e[1] == Rational(-2));
  CHECK(e[2] == Rational(-1, 3));
  const auto p2 = power_sums_from_elementary(e, 3);
  CHECK(p2[0] == p[0]);
  CHECK(p2[1] == p[1]);
  CHECK(p2[2] == p[2]);
  // truncated elementaries extend power sums consistently (e_k = 0 beyond)
  const auto p4 = power_sums_from_elementary(e, 4);
  CHECK(p4[2] == p[2]);
}

TEST_CASE("polynomial roots and unitarity") {
  // (1 - T)(1 - 2T) = 1 - 3T + 2T^2
  const auto roots = poly_roots({cplx(1), cplx(-3), cplx(2)});
  REQUIRE(roots.size() == 2);
  double r0 = std::min(std::abs(roots[0]), std::abs(roots[1]));
  double r1 = std::max(std::abs(roots[0]), std::abs(roots[1]));
  CHECK(r0 == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(r1 == doctest::Approx(1.0).epsilon(1e-10));

  // 1 - 2cos(t) T + T^2 has unit inverse roots
  const double t = 0.77;
  LPolynomial L;
  L.coeffs = {cplx(1), cplx(-2 * std::cos(t)), cplx(1)};
  L.q = 1;
  L.weight = 0;
  CHECK(unitarity_deviation(L) < 1e-12);
  const auto nr = normalized_inverse_roots(L);
  REQUIRE(nr.size() == 2);
  CHECK(std::abs(nr[0]) == doctest::Approx(1.0).epsilon(1e-10));

  // weight-1 scaling: 1 + aT + qT^2 with |inverse roots| = sqrt(q)
  LPolynomial K;
  K.coeffs = {cplx(1), cplx(3), cplx(25)};
  K.q = 25;
  K.weight = 1;
  CHECK(unitarity_deviation(K) < 1e-12);
}

TEST_CASE("reconstruction from power sums") {
  const double t = 1.1;
  // inverse roots e^{it}, e^{-it}: p_m = 2cos(mt)
  const std::vector<cplx> p{cplx(2 * std::cos(t)), cplx(2 * std::cos(2 * t))};
  const LPolynomial L = lpoly_from_power_sums(p, 1.0, 0);
  REQUIRE(L.coeffs.size() == 3);
  CHECK(L.coeffs[0].real() == doctest::Approx(1.0));
  CHECK(L.coeffs[1].real() == doctest::Approx(-2 * std::cos(t)).epsilon(1e-12));
  CHECK(L.coeffs[2].real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(L.eval(cplx(0)).real() == doctest::Approx(1.0));
}

TEST_CASE("palindromy deviations") {
  LPolynomial L;
  L.coeffs = {cplx(1), cplx(4), cplx(1)};
  L.q = 1;
  L.weight = 0;
  CHECK(palindromy_deviation(L, 1) < 1e-15);
  CHECK(palindromy_deviation(L, -1) == doctest::Approx(8.0));

  LPolynomial A;
  A.coeffs = {cplx(1), cplx(0), cplx(-1)};
  A.q = 1;
  A.weight = 0;
  CHECK(palindromy_deviation(A, -1) < 1e-15);
}
