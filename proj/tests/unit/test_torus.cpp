#include <cmath>

#include "doctest.h"
#include "moments.hpp"
#include "torus.hpp"

using namespace g2rmt;

namespace {
const Parallel par1{};
}

TEST_CASE("character orthogonality on a fine grid") {
  // the grid rule integrates trig polynomials of this degree exactly
  CHECK(std::abs(orthogonality(0, 0, 0, 0, 128, par1) - 1.0) < 1e-10);
  CHECK(std::abs(orthogonality(1, 0, 1, 0, 128, par1) - 1.0) < 1e-10);
  CHECK(std::abs(orthogonality(0, 1, 0, 1, 128, par1) - 1.0) < 1e-10);
  CHECK(std::abs(orthogonality(1, 0, 0, 1, 128, par1)) < 1e-10);
  CHECK(std::abs(orthogonality(1, 1, 2, 0, 128, par1)) < 1e-10);
}

TEST_CASE("closed-form characters match the weyl formula") {
  for (double t1 : {0.3, 1.1, 2.9})
    for (double t2 : {0.7, 1.9, 4.1}) {
      CHECK(std::abs(char_weyl(1, 0, t1, t2) - char_fundamental(Rep::r7, t1, t2)) < 1e-9);
      CHECK(std::abs(char_weyl(0, 1, t1, t2) - char_fundamental(Rep::r14, t1, t2)) < 1e-9);
    }
  // dimensions at the identity (closed form; the Weyl route is singular there)
  CHECK(char_fundamental(Rep::r7, 0, 0) == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(char_fundamental(Rep::r14, 0, 0) == doctest::Approx(14.0).epsilon(1e-12));
  // perturb-and-average fallback still lands near the dimension
  CHECK(std::abs(char_weyl(1, 0, 0, 0) - 7.0) < 1e-5);
}

TEST_CASE("eigenangle data") {
  const SpectralPolynomial s7 = eigenangles(Rep::r7, 0.9, 1.7);
  CHECK(s7.angles.size() == 6);
  CHECK(s7.zero_multiplicity == 1);
  const SpectralPolynomial s14 = eigenangles(Rep::r14, 0.9, 1.7);
  CHECK(s14.angles.size() == 12);
  CHECK(s14.zero_multiplicity == 2);

  // trace of the full rep equals the character
  double tr = double(s7.zero_multiplicity);
  for (double a : s7.angles) tr += std::cos(a);
  CHECK(std::abs(tr - char_fundamental(Rep::r7, 0.9, 1.7)) < 1e-9);

  CHECK(zhat_abs(Rep::r7, 0.9, 1.7, 0.4) ==
        doctest::Approx(std::abs(zhat(Rep::r7, 0.9, 1.7, 0.4))).epsilon(1e-12));
}

TEST_CASE("integer-s quadrature moments are exact") {
  // integrands are trig polynomials, so the grid rule is exact for n = 128
  CHECK(std::abs(quad_moment(Rep::r7, 1, 0, 128, par1) - 6.0) < 1e-9);
  CHECK(std::abs(quad_moment(Rep::r7, 2, 0, 128, par1) - 55.0) < 1e-8);
  CHECK(std::abs(quad_moment(Rep::r14, 1, 0, 128, par1) - 33.0) < 1e-8);
}

TEST_CASE("trace moments count invariants") {
  const auto m7 = trace_moments(Rep::r7, 4, 128, par1);
  REQUIRE(m7.size() == 4);
  CHECK(std::abs(m7[0] - 0.0) < 1e-10);
  CHECK(std::abs(m7[1] - 1.0) < 1e-9);
  CHECK(std::abs(m7[2] - 1.0) < 1e-9);
  CHECK(std::abs(m7[3] - 4.0) < 1e-8);
  const auto m14 = trace_moments(Rep::r14, 2, 128, par1);
  CHECK(std::abs(m14[0] - 0.0) < 1e-10);
  CHECK(std::abs(m14[1] - 1.0) < 1e-9);
}

TEST_CASE("value histogram carries unit mass") {
  HistogramOptions opt;
  opt.bins = 80;
  opt.n = 256;
  const Histogram h = value_histogram(Rep::r7, Statistic::trace, 0, opt, par1);
  CHECK(std::abs(h.total() - 1.0) < 1e-9);
  CHECK(h.underflow + h.overflow < 1e-12);
  // trace statistic lives in [-2, 7]
  CHECK(h.lo >= -2.0 - 1e-9);
  CHECK(h.hi <= 7.0 + 1e-9);

  const Histogram ha = value_histogram(Rep::r7, Statistic::abs, 0, opt, par1);
  CHECK(std::abs(ha.total() - 1.0) < 1e-9);
}

TEST_CASE("parallel quadrature equals serial") {
  Parallel par4;
  par4.threads = 4;
  const double a = quad_moment(Rep::r7, 1.5, 0.2, 256, par1);
  const double b = quad_moment(Rep::r7, 1.5, 0.2, 256, par4);
  CHECK(a == b);  // identical block structure, serial merge
}

TEST_CASE("monte carlo spot check") {
  const double m = mc_moment(Rep::r7, 1, 0, 200000, 42);
  CHECK(std::abs(m - 6.0) < 0.3);
}

TEST_CASE("divergence bound matches the formula domain") {
  CHECK(divergence_bound(Rep::r7) == rep7_formula().domain_bound);
  CHECK(divergence_bound(Rep::r14) == rep14_formula().domain_bound);
}
