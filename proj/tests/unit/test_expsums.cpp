#include <cmath>
#include <complex>

#include "doctest.h"
#include "expsums.hpp"

using namespace g2rmt;

namespace {
const Parallel par1{};
const double PI2 = 6.283185307179586476925286766559;
}  // namespace

TEST_CASE("quadratic gauss sums take their classical values") {
  // p = 5 (1 mod 4): g = sqrt(5); p = 7 (3 mod 4): g = i sqrt(7)
  const Field f5(5, 1);
  const MultiplicativeCharacter chi5(f5, 2);  // j = (q-1)/2
  REQUIRE(chi5.quadratic());
  const cplx g5 = gauss_sum(chi5, AdditiveCharacter(f5, 1));
  CHECK(std::abs(g5 - cplx(std::sqrt(5.0), 0)) < 1e-12);

  const Field f7(7, 1);
  const MultiplicativeCharacter chi7(f7, 3);
  REQUIRE(chi7.quadratic());
  const cplx g7 = gauss_sum(chi7, AdditiveCharacter(f7, 1));
  CHECK(std::abs(g7 - cplx(0, std::sqrt(7.0))) < 1e-12);
}

TEST_CASE("gauss moduli and the degree-1 l-polynomial") {
  const Field f(11, 1);
  for (std::uint64_t j = 1; j < 10; ++j) {
    const MultiplicativeCharacter chi(f, j);
    const AdditiveCharacter psi(f, 1);
    const cplx g = gauss_sum(chi, psi);
    CHECK(std::abs(std::abs(g) - std::sqrt(11.0)) < 1e-12);
    const LPolynomial L = gauss_lpoly(chi, psi);
    REQUIRE(L.coeffs.size() == 2);
    CHECK(std::abs(L.coeffs[1] - g) < 1e-14);
    CHECK(unitarity_deviation(L) < 1e-12);
  }
}

TEST_CASE("hasse-davenport lifting") {
  for (std::uint64_t p : {5, 7}) {
    const Field base(p, 1);
    for (int n : {2, 3}) {
      const auto rep = hasse_davenport_check(base, 1, 1, n);
      CHECK(rep.ok);
      CHECK(rep.deviation < 1e-9);
      CHECK(std::abs(rep.ext - rep.predicted) < 1e-9 * std::pow(double(p), n / 2.0));
    }
  }
}

TEST_CASE("gauss angle spectrum") {
  const AngleSpectrum sp = gauss_angle_spectrum(101, par1);
  CHECK(sp.angles.size() == 99);  // nonprincipal characters
  CHECK(sp.modulus_deviation < 1e-9);
  CHECK(sp.pairing_deviation < 1e-7);
  CHECK(sp.discrepancy > 0);
  CHECK(sp.discrepancy < 0.5);
  CHECK(sp.ks <= sp.discrepancy + 1e-15);
}

TEST_CASE("kloosterman hand value and weil bound") {
  const Field f(5, 1);
  // K(1; 5): x + 1/x takes values 2, 0, 0, 3 at x = 1..4
  const double expect = 2.0 + 2.0 * std::cos(PI2 * 2.0 / 5.0);
  CHECK(kloosterman(f, 1) == doctest::Approx(expect).epsilon(1e-12));

  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    const Field fp(p, 1);
    for (felem a = 1; a < p; ++a) {
      const double k = kloosterman(fp, a);
      CHECK(std::abs(k) <= 2.0 * std::sqrt(double(p)) + 1e-9);
    }
  }
}

TEST_CASE("kloosterman l-polynomial and angle") {
  const Field f(13, 1);
  for (felem a = 1; a < 13; ++a) {
    const KloostermanSample s = kloosterman_lpoly(f, a);
    REQUIRE(s.lpoly.coeffs.size() == 3);
    CHECK(s.lpoly.coeffs[1].real() == doctest::Approx(s.value).epsilon(1e-14));
    CHECK(s.lpoly.coeffs[2].real() == doctest::Approx(13.0).epsilon(1e-14));
    CHECK(unitarity_deviation(s.lpoly) < 1e-9);
    CHECK(s.value == doctest::Approx(-2.0 * std::sqrt(13.0) * std::cos(s.angle)).epsilon(1e-10));
    CHECK(s.angle >= 0);
    CHECK(s.angle <= 3.14159265358979647);
  }
}

TEST_CASE("sato-tate statistic is computed against sin^2") {
  CHECK(satotate_cdf(0) == doctest::Approx(0.0));
  CHECK(satotate_cdf(3.14159265358979) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(satotate_cdf(3.14159265358979 / 2) == doctest::Approx(0.5).epsilon(1e-10));

  const Field f(997, 1);
  const SatoTateReport st = kloosterman_satotate(f, par1);
  CHECK(st.count == 996);
  CHECK(st.ks < 0.1);
}

TEST_CASE("convolution route equals the direct sums") {
  const Field f(13, 1);
  const auto all2 = hyperkloosterman_all(f, 2);
  REQUIRE(all2.size() == 12);
  for (std::uint64_t k = 0; k < 12; ++k) {
    const felem a = f.exp(k);
    CHECK(std::abs(all2[k] - cplx(kloosterman(f, a), 0)) < 1e-9);
    CHECK(std::abs(all2[k] - hyperkloosterman_naive(f, 2, a)) < 1e-9);
  }
  // n = 3 against the two-loop naive route on a small extension field
  const Field f9(3, 2);
  const auto all3 = hyperkloosterman_all(f9, 3);
  REQUIRE(all3.size() == 8);
  for (std::uint64_t k = 0; k < 8; ++k)
    CHECK(std::abs(all3[k] - hyperkloosterman_naive(f9, 3, f9.exp(k))) < 1e-9);
}

TEST_CASE("hyper-kloosterman families by symmetry type") {
  // n = 2: the classical case, self-dual, traces in [-2, 2]
  const Field f7(7, 1);
  const auto fam2 = hk_family(f7, 2);
  REQUIRE(fam2.size() == 6);
  for (const auto& s : fam2) {
    CHECK(s.self_dual);
    CHECK(s.trace >= -2.0 - 1e-9);
    CHECK(s.trace <= 2.0 + 1e-9);
    CHECK(unitarity_deviation(s.norm_poly) < 1e-9);
    CHECK(palindromy_deviation(s.norm_poly, 1) < 1e-9);
  }

  // n = 3, odd characteristic: not self-dual, reconstruction needs all three
  // power sums; unitarity still certifies the answer
  const auto fam3 = hk_family(f7, 3);
  for (const auto& s : fam3) {
    CHECK(!s.self_dual);
    CHECK(unitarity_deviation(s.norm_poly) < 1e-6);
    CHECK(std::abs(s.trace) <= 3.0 + 1e-6);
  }

  // n = 3, characteristic two: self-dual orthogonal, root at T = 1
  const Field f4(2, 2);
  const auto fam3e = hk_family(f4, 3);
  REQUIRE(fam3e.size() == 3);
  for (const auto& s : fam3e) {
    CHECK(s.self_dual);
    CHECK(unitarity_deviation(s.norm_poly) < 1e-6);
    CHECK(palindromy_deviation(s.norm_poly, -1) < 1e-9);
    CHECK(std::abs(s.norm_poly.eval(cplx(1))) < 1e-9);
  }
}

TEST_CASE("overdetermined reconstruction stays consistent") {
  // q = 4, n = 6 is even hence self-dual: the first three power sums fix the
  // polynomial; the arithmetic poly must reproduce the direct sums
  const Field f4(2, 2);
  const auto fam = hk_family(f4, 6);
  for (const auto& s : fam) {
    CHECK(s.self_dual);
    CHECK(unitarity_deviation(s.norm_poly) < 1e-6);
    // degree matches the number of variables minus one... the L-polynomial
    // of an n-variable sum has degree n
    CHECK(s.norm_poly.degree() == 6);
    const cplx direct = hyperkloosterman_naive(f4, 6, s.a);
    // tr Theta = -HK / q^((n-1)/2) for even n, matching the classical angle
    const double scale = std::pow(4.0, 5.0 / 2.0);
    CHECK(std::abs(cplx(s.trace, 0) + direct / scale) < 1e-6);
  }
}

TEST_CASE("g2 family normalization") {
  const NmkData d = nmk_normalize(17, par1);
  CHECK(d.p == 17);
  REQUIRE(d.traces.size() == 16);
  CHECK(d.conj_deviation < 1e-8);
  for (double t : d.traces) {
    CHECK(t >= -2.0 - 1e-6);
    CHECK(t <= 7.0 + 1e-6);
  }
  // |g| = sqrt(p)
  CHECK(std::abs(std::abs(d.gauss) - std::sqrt(17.0)) < 1e-10);

  // power-sum route agrees at m = 1
  const NmkPowerSums ps = nmk_power_sums(17, 3, par1);
  REQUIRE(ps.trace.size() == 3);
  REQUIRE(ps.trace[0].size() == 16);
  if (ps.sign[0] == d.sign)
    for (int t = 0; t < 16; ++t)
      CHECK(ps.trace[0][t] == doctest::Approx(d.traces[t]).epsilon(1e-9));
}

TEST_CASE("g2 l-polynomials from three power sums") {
  const auto polys = nmk_lpolys(17, par1);
  REQUIRE(polys.size() == 16);
  for (const auto& lp : polys) {
    CHECK(lp.poly.degree() == 7);
    CHECK(std::abs(lp.poly.eval(cplx(1))) < 1e-6);  // eigenvalue 1
    CHECK(unitarity_deviation(lp.poly) < 1e-6);
    CHECK(lp.zhat1 >= -1e-3);
    CHECK(lp.zhat1 <= 64.0 + 1e-3);
  }
}

TEST_CASE("equidistribution report at a decisive prime") {
  const EquidistReport e = g2_equidist_report(101, true, par1);
  CHECK(e.count == 100);
  CHECK(e.decisive);
  REQUIRE(e.moments.size() == 4);
  REQUIRE(e.haar_moments.size() == 4);
  REQUIRE(e.moment_dev.size() == 4);
  // Haar references are the invariant counts
  CHECK(e.haar_moments[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(e.haar_moments[1] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(e.haar_moments[2] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(e.haar_moments[3] == doctest::Approx(4.0).epsilon(1e-8));
  for (int k = 0; k < 4; ++k) CHECK(e.moment_dev[k] < 1.0);
  CHECK(e.trace_ks < 0.5);
  CHECK(e.with_det);
  CHECK(std::abs(e.det_mean - 6.0) < 1.5);
}

TEST_CASE("parallel expsum runs match serial") {
  Parallel par4;
  par4.threads = 4;
  const NmkData a = nmk_normalize(41, par1);
  const NmkData b = nmk_normalize(41, par4);
  REQUIRE(a.traces.size() == b.traces.size());
  for (std::size_t i = 0; i < a.traces.size(); ++i) CHECK(a.traces[i] == b.traces[i]);
  const AngleSpectrum s1 = gauss_angle_spectrum(211, par1);
  const AngleSpectrum s4 = gauss_angle_spectrum(211, par4);
  CHECK(s1.discrepancy == s4.discrepancy);
}
