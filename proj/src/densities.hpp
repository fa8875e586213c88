#pragma once
// Value-distribution densities by numerical contour inversion of the moment
// formulas. P1 is the density of log|value|, P2 of |value|; both come from
// one truncated-contour kernel per (formula, c).
//
// Truncation is chosen deterministically from the integrand magnitude. When
// a formula's magnitude decays too slowly to hit the threshold by the Y cap
// (the 14-rep does: its value density has a jump at the top of its support,
// so |M(c+iy)| ~ C/|y| on every vertical line), a Gaussian spectral window
// is applied: mass-exact, moment-safe to ~1e-5 relative, equivalent to
// smoothing the density at scale sigma in log-value space. With the window
// disabled the slow-decay case is a hard error, as the magnitude threshold
// is then unreachable.

#include <vector>

#include "moments.hpp"
#include "util.hpp"

namespace g2rmt {

struct ContourOptions {
  double c = 0.0;            // contour Re s = c
  double tol = 1e-12;        // endpoint magnitude threshold
  double y_cap = 1e4;        // give up (or window) beyond this
  bool allow_window = true;
  double window_sigma = 4e-3;  // used only when raw decay fails
  double oversample = 4.0;     // nodes per oscillation period
  double u_abs_max = 16.0;     // largest |log value| the kernel must serve
};

class ContourKernel {
 public:
  ContourKernel(const GammaRatioFormula& f, const ContourOptions& opt);

  // (1/2pi) integral of M(c+iy) w(y) e^{-iyu} dy over [-Y, Y]
  cplx F(double u) const;

  double truncation_y() const { return Y_; }
  double sigma() const { return sigma_; }       // 0 when unwindowed
  double drift() const { return drift_; }       // = log of the support sup
  std::size_t node_count() const { return y_.size(); }
  double c() const { return c_; }

 private:
  double c_, Y_, sigma_, drift_, step_;
  std::vector<double> y_;
  std::vector<cplx> a_;  // weight * window * M at the node
};

// point evaluations (kernels cached internally per formula/c)
double p1_density(const GammaRatioFormula& f, double x,
                  const ContourOptions& opt = {});
double p2_density(const GammaRatioFormula& f, double x, double cc,
                  ContourOptions opt = {});

struct DensityCurve {
  std::vector<double> u;   // log-value grid (uniform)
  std::vector<double> p1;  // density of log|value|
  std::vector<double> x;   // exp(u)
  std::vector<double> p2;  // density of |value|, = p1/x on this grid
  double c = 0, truncation_y = 0, sigma = 0, support_log_sup = 0;
  std::size_t nodes = 0;
  double max_imag_residual = 0;

  double integral_p1() const;              // composite Simpson over u
  double moment_p2(int k) const;           // int x^k P2 dx via log substitution
};

struct CurveOptions {
  double u_lo = -16.0;
  double du = 1e-3;
  double pad = 0.35;  // grid extends to log-sup + pad
  ContourOptions contour;
};

DensityCurve density_curve(const GammaRatioFormula& f, const CurveOptions& opt = {});

}  // namespace g2rmt
