#pragma once
// Exact and analytically-continued moments of characteristic polynomials for
// the two fundamental representations, plus the unitary-symplectic reference
// moments used by the curve families.

#include <vector>

#include "util.hpp"

namespace g2rmt {

// closed form for CT( prod (1-t^a)^{k_class} )/12 on the G2 system
Rational macdonald_g2(unsigned k_short, unsigned k_long);

// integer-s moments of |det-like char poly| for the 7- and 14-dim reps
Rational moment_rep7_exact(unsigned s);   // = macdonald_g2(s+1, 1)
Rational moment_rep14_exact(unsigned s);  // = macdonald_g2(s+1, s+1)

// A ratio of Gamma factors prefactor * prod Gamma(slope*s + offset) /
// prod Gamma(...), valid for Re s > domain_bound. The formulas are data so
// the density machinery can integrate any of them uniformly.
struct GammaRatioFormula {
  Rational prefactor;
  std::vector<std::pair<int, int>> numerator;    // (slope, offset)
  std::vector<std::pair<int, int>> denominator;  // (slope, offset)
  double domain_bound;                           // open half-plane Re s > bound

  cplx eval(cplx s) const;      // exponentiated once; log-space internally
  cplx log_eval(cplx s) const;  // log of the ratio (principal per-factor logs)
};

GammaRatioFormula rep7_formula();
GammaRatioFormula rep14_formula();

cplx moment_rep7_gamma(cplx s);
cplx moment_rep14_gamma(cplx s);

// E[ det(I-A)^s ] over USp(2g), Re s > -1/2
cplx moment_usp(unsigned g, cplx s);

}  // namespace g2rmt
