#pragma once
// Exponential sums over finite fields and their L-functions: Gauss sums and
// the Hasse-Davenport relation, Kloosterman sums with their SU(2) angles and
// Sato-Tate statistics, hyper-Kloosterman sums for all parameters at once
// with degree-n L-polynomial reconstruction, and the quadratic-twisted
// seventh-power sum whose normalized classes land in G2 inside SO(7).

#include <cstdint>
#include <vector>

#include "ffield.hpp"
#include "lpoly.hpp"
#include "util.hpp"

namespace g2rmt {

inline constexpr std::uint64_t CONVOLUTION_CAP = std::uint64_t(1) << 20;

// g(chi, psi) = sum_{x != 0} chi(x) psi(x); |g| = sqrt(q) is checked
cplx gauss_sum(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi);

// the degree-1 L-polynomial 1 + g T (weight 1)
LPolynomial gauss_lpoly(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi);

struct HasseDavenportReport {
  cplx base;       // g over the base field
  cplx ext;        // g over the degree-n extension, chi∘Norm and psi∘Trace
  cplx predicted;  // from -g_n = (-g)^n
  double deviation = 0;
  bool ok = false;
};
HasseDavenportReport hasse_davenport_check(const Field& base, std::uint64_t chi_j,
                                           std::uint64_t psi_a, int n);

struct AngleSpectrum {
  std::vector<double> angles;     // theta_chi in [0, 2pi), one per nonprincipal chi
  double discrepancy = 0;         // star discrepancy vs uniform
  double ks = 0;                  // KS statistic vs uniform (same sup metric)
  double pairing_deviation = 0;   // max |g(conj chi) - chi(-1) conj g(chi)|
  double modulus_deviation = 0;   // max | |g|/sqrt(q) - 1 |
};
AngleSpectrum gauss_angle_spectrum(std::uint64_t p, const Parallel& par);

// kl(a, q) = sum_{x != 0} psi(x + a/x); reality and the Weil bound are
// checked on every call
double kloosterman(const Field& f, felem a);

struct KloostermanSample {
  double value = 0;
  double angle = 0;  // in [0, pi], kl = -2 sqrt(q) cos(angle)
  LPolynomial lpoly; // 1 + kl T + q T^2
};
KloostermanSample kloosterman_lpoly(const Field& f, felem a);

double satotate_cdf(double theta);  // CDF of (2/pi) sin^2 on [0, pi]

struct SatoTateReport {
  std::size_t count = 0;
  double ks = 0;
  std::vector<double> angles;
};
SatoTateReport kloosterman_satotate(const Field& f, const Parallel& par);

// kl_n(a, q) for every a != 0 at once, via (n-1)-fold cyclic convolution of
// psi over the multiplicative group in dlog coordinates; result[k] is the
// value at a = generator^k
std::vector<cplx> hyperkloosterman_all(const Field& f, int n);
cplx hyperkloosterman_naive(const Field& f, int n, felem a);

struct HKSample {
  felem a = 0;
  double trace = 0;          // tr Theta = first power sum of the normalized poly
  LPolynomial norm_poly;     // det(I - Theta T), unit inverse roots
  LPolynomial lpoly;         // arithmetic L_a(T), inverse roots q^((n-1)/2)
  bool self_dual = false;
};
// reconstruction from power sums over GF(q^m): m <= floor(n/2) for
// self-dual symmetry types (n even, or q even), m <= n otherwise
std::vector<HKSample> hk_family(const Field& f, int n);

// ---- quadratic-twisted seventh-power sums (G2 family) ----

// S(t) = sum_{x != 0} chi2(x) psi(x^7 + t x) for t = 1..p-1; p >= 17
std::vector<cplx> nmk_all(std::uint64_t p, const Parallel& par);

struct NmkData {
  std::uint64_t p = 0;
  std::vector<cplx> raw;        // S(t), t = 1..p-1
  cplx gauss;                   // g(chi2, psi)
  int sign = 1;                 // resolved normalization sign
  bool decisive = false;        // some |trace| > 2 certified the sign
  double conj_deviation = 0;    // vs conj S(t) = chi2(-1) S(t)
  std::vector<double> traces;   // tr Theta_t = -sign * S(t)/g
};
NmkData nmk_normalize(std::uint64_t p, const Parallel& par);

struct NmkPowerSums {
  std::uint64_t p = 0;
  std::vector<int> sign;                    // per extension degree
  std::vector<bool> decisive;
  std::vector<std::vector<double>> trace;   // trace[m-1][t-1] = tr Theta_t^m
};
NmkPowerSums nmk_power_sums(std::uint64_t p, int mmax, const Parallel& par);

struct NmkLPoly {
  std::uint64_t t = 0;
  LPolynomial poly;   // det(I - Theta_t T), degree 7
  double trace = 0;
  double zhat1 = 0;   // poly/(1-T) evaluated at T=1, the 6-factor det analog
};
std::vector<NmkLPoly> nmk_lpolys(std::uint64_t p, const Parallel& par);

struct EquidistReport {
  std::uint64_t p = 0;
  std::size_t count = 0;
  int sign = 1;
  bool decisive = false;
  std::vector<double> moments;       // empirical trace moments m1..m4
  std::vector<double> haar_moments;  // torus-quadrature references
  std::vector<double> moment_dev;
  double trace_ks = 0;               // empirical traces vs torus histogram CDF
  bool with_det = false;
  double det_mean = 0;               // mean of the 6-factor det analog
  double det_dev = 0;                // |det_mean - 6|
};
EquidistReport g2_equidist_report(std::uint64_t p, bool with_det, const Parallel& par);

}  // namespace g2rmt
