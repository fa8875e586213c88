#pragma once
// log Gamma for complex argument. Everything downstream (moment formulas on
// vertical lines, density contour integrals) works in log space and
// exponentiates once per ratio, so magnitudes like |Gamma(7+3iy)| at y ~ 1e4
// never materialise as doubles.

#include "util.hpp"

namespace g2rmt {

// principal-branch log Gamma; accurate to ~1e-14 relative away from the poles
cplx log_gamma(cplx z);

inline cplx gamma_c(cplx z) { return std::exp(log_gamma(z)); }

}  // namespace g2rmt
