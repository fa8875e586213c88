#include <cmath>

#include "densities.hpp"
#include "doctest.h"
#include "moments.hpp"

using namespace g2rmt;

TEST_CASE("rep-7 value density integrates and averages correctly") {
  CurveOptions opt;
  opt.u_lo = -10.0;
  opt.du = 2e-3;
  const DensityCurve dc = density_curve(rep7_formula(), opt);
  REQUIRE(dc.u.size() == dc.p1.size());
  REQUIRE(dc.u.size() == dc.p2.size());
  CHECK(std::abs(dc.integral_p1() - 1.0) < 1e-5);
  CHECK(std::abs(dc.moment_p2(1) - 6.0) < 1e-3);
  CHECK(dc.max_imag_residual < 1e-8);
  CHECK(dc.sigma == 0.0);  // fast decay, no window needed

  // value support is inside |zhat| <= 2^6
  CHECK(dc.support_log_sup > 1.0);
  CHECK(dc.support_log_sup <= std::log(64.0) + 1e-9);

  // densities are nonnegative up to quadrature noise
  double min_p1 = 0;
  for (double v : dc.p1) min_p1 = std::min(min_p1, v);
  CHECK(min_p1 > -1e-7);
}

TEST_CASE("point evaluations match the curve") {
  CurveOptions opt;
  opt.u_lo = -6.0;
  opt.du = 5e-3;
  const GammaRatioFormula f = rep7_formula();
  const DensityCurve dc = density_curve(f, opt);
  for (std::size_t i : {dc.u.size() / 4, dc.u.size() / 2, 3 * dc.u.size() / 4}) {
    const double u = dc.u[i];
    CHECK(std::abs(p1_density(f, u, opt.contour) - dc.p1[i]) < 1e-9);
    // the two density routes are related by the exponential substitution;
    // the P2 inversion runs on its own contour (the offset must be positive)
    const double x = std::exp(u);
    CHECK(std::abs(p2_density(f, x, 1.0, opt.contour) * x - dc.p1[i]) < 1e-8);
  }
}

TEST_CASE("rep-14 needs the spectral window") {
  ContourOptions opt;
  const ContourKernel k(rep14_formula(), opt);
  CHECK(k.sigma() > 0.0);  // slow decay engaged the window
  CHECK(k.truncation_y() > 0.0);
  CHECK(k.node_count() > 100);

  ContourOptions hard = opt;
  hard.allow_window = false;
  CHECK_THROWS_AS(ContourKernel(rep14_formula(), hard), Error);
}

TEST_CASE("rep-14 density normalizes under the window") {
  CurveOptions opt;
  opt.u_lo = -10.0;
  opt.du = 2e-3;
  const DensityCurve dc = density_curve(rep14_formula(), opt);
  CHECK(std::abs(dc.integral_p1() - 1.0) < 1e-5);
  CHECK(std::abs(dc.moment_p2(1) - 33.0) < 33.0 * 1e-3);
}
