#pragma once
// Empirical thresholds for the statistical checks, calibrated once on a
// reference run and then frozen. Structural tolerances (unitarity, Weil,
// conjugation symmetry) live next to the code they guard; only the
// equidistribution-rate constants belong here.
//
// Reference run: p in {17, 19, 101, 211, 1009, 10007} for the NMK family,
// p = 10007 for Gauss angles, p = 9973 for Sato-Tate. Every constant clears
// the worst observed scaled deviation by at least 1.7x.

namespace g2rmt {

// Gauss-sum angle star discrepancy: bound C / sqrt(p). Observed 0.73 at
// p = 10007.
inline constexpr double GAUSS_DISCREPANCY_C = 2.0;

// Kloosterman angles vs the sin^2 measure, KS statistic: bound C / sqrt(q).
// Observed 0.51 at q = 9973.
inline constexpr double SATOTATE_KS_C = 3.0;

// NMK trace moments m_1..m_4 vs torus Haar moments: bound C_k / sqrt(p).
// The first two moments ride complete-sum cancellation (worst observed 0.26,
// at p = 17); the third and fourth fluctuate at the scale of their per-sample
// standard deviations (5.8 and 21), worst observed 1.26 and 14.3 at p = 211.
inline constexpr double NMK_MOMENT_C[4] = {2.0, 2.0, 5.0, 25.0};

// NMK empirical trace distribution vs the torus histogram CDF, KS: C / sqrt(p).
// Observed up to 1.48 (p = 1009).
inline constexpr double NMK_TRACE_KS_C = 3.0;

// mean of the 7-root determinant analog vs 6: bound C / sqrt(p). Observed up
// to 1.29 (p = 17), 0.50 at p = 101.
inline constexpr double NMK_DET_C = 3.0;

// torus value histogram vs the contour density, per-bin mass gap. Observed
// 3.4e-4 (7-dim rep) and 2.0e-3 (14-dim rep, quadrature-resolution limited).
inline constexpr double DENSITY_HIST_TOL = 0.005;

}  // namespace g2rmt
