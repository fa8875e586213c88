#pragma once
// Numeric side of the maximal-torus picture: Weyl measure on [0,2pi)^2,
// characters (closed form and Weyl-formula route), char-poly values at torus
// points, deterministic grid quadrature and weighted value histograms.

#include <vector>

#include "rootsys.hpp"
#include "util.hpp"

namespace g2rmt {

enum class Rep { r7, r14 };
enum class Statistic { trace, abs, logabs };

// |Delta(t)|^2 / 12 at theta = (t1, t2); integrates to 1 against the flat
// torus measure.
double weyl_density(double t1, double t2);

double char_fundamental(Rep r, double t1, double t2);  // closed-form, real

// Weyl character formula route for dominant label (n1, n2); singular points
// resolved by exact directional derivatives of the two orbit sums.
cplx char_weyl(int n1, int n2, double t1, double t2);

// eigenangle data of U_rho(t): the angles attached to nonzero weights plus
// the multiplicity of the zero weight (1 for the 7, 2 for the 14); zhat is
// the char-poly product over `angles` only, the zero-weight factors being
// the ones divided out
struct SpectralPolynomial {
  std::vector<double> angles;
  int zero_multiplicity = 0;
};

SpectralPolynomial eigenangles(Rep r, double t1, double t2);

cplx zhat(Rep r, double t1, double t2, double phi);
double zhat_abs(Rep r, double t1, double t2, double phi);

double divergence_bound(Rep r);  // moment integral diverges at/below this s

// (1/n^2) sum over the n x n lattice of density * |zhat|^s; for s < 0 the
// near-singular cells are refined 16x per axis (midpoint subsampling).
double quad_moment(Rep r, double s, double phi, int n, const Parallel& par);

// <chi_a, chi_b> under the Weyl measure; returns the complex inner product
cplx orthogonality(int a1, int a2, int b1, int b2, int n, const Parallel& par);

struct Histogram {
  double lo = 0, hi = 0, width = 0;
  std::vector<double> mass;     // Weyl-measure mass per bin
  std::vector<double> density;  // mass / width
  double underflow = 0, overflow = 0;
  double total() const;
};

struct HistogramOptions {
  int bins = 200;
  int n = 1024;           // quadrature grid
  double logabs_floor = -12.0;  // values below go to underflow
};

Histogram value_histogram(Rep r, Statistic st, double phi, const HistogramOptions& opt,
                          const Parallel& par);

// first kmax trace moments (deterministic grid)
std::vector<double> trace_moments(Rep r, int kmax, int n, const Parallel& par);

// Monte Carlo spot check of quad_moment (uniform torus sampling, density
// reweighting); intentionally simple, seed-reproducible.
double mc_moment(Rep r, double s, double phi, std::size_t samples, std::uint64_t seed);

}  // namespace g2rmt
