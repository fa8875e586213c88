#pragma once
// Zeta functions of curves over finite fields at desk scale: point counts for
// the projective line and hyperelliptic models y^2 = f(x), exact L-polynomial
// recovery from N_1..N_g via Newton's identities plus the functional
// equation, Riemann-hypothesis verification (exact in the integers for
// genus <= 2), and family moments against the USp(2g) closed form.

#include <cstdint>
#include <string>
#include <vector>

#include "lpoly.hpp"
#include "util.hpp"

namespace g2rmt {

enum class CurveKind { projective_line, hyperelliptic };

struct CurveSpec {
  CurveKind kind = CurveKind::projective_line;
  std::uint64_t p = 0;            // base prime
  std::vector<std::uint64_t> f;   // y^2 = f(x); low-first coefficients in [0, p)
  int genus = 0;
};

CurveSpec projective_line(std::uint64_t p);
CurveSpec hyperelliptic_curve(std::uint64_t p, std::vector<std::uint64_t> f);
// "y2=x3+x", "y^2=x^5+2x+7", or "p1"; whitespace ignored
CurveSpec parse_curve(const std::string& text, std::uint64_t p);

// N_m = #X(GF(p^m)): character sum plus points at infinity (1 for odd deg f,
// 2 or 0 by leading-coefficient squareness for even)
std::int64_t count_points(const CurveSpec& c, int m);
std::int64_t count_points_naive(const CurveSpec& c, int m);  // y-loop oracle

struct ZetaData {
  std::uint64_t q = 0;
  int genus = 0;
  std::vector<std::int64_t> counts;  // the N_m consumed (m = 1..g)
  std::vector<Integer> b;            // P coefficients b_0..b_2g, exact
  LPolynomial P;                     // float copy, weight 1
  double rh_deviation = 0;           // max | |alpha|/sqrt(q) - 1 | over roots
  double fe_deviation = 0;           // functional-equation residual at 5 seeded T
};

// P from N_1..N_g (higher entries ignored); integrality, RH (exact integer
// conditions for g <= 2, root-finding at 1e-6 beyond), and the numeric
// functional equation are all checked; violations are hard errors
ZetaData zeta_from_counts(int g, std::uint64_t q, const std::vector<std::int64_t>& counts);
ZetaData curve_zeta(const CurveSpec& c);

// N_m implied by the recovered P over GF(q^m), exact
std::int64_t predicted_count(const ZetaData& z, int m);

struct FamilyScan {
  int g = 0;
  std::uint64_t q = 0;
  std::size_t grid = 0;         // per-axis grid size (q means the full family)
  std::size_t family_size = 0;  // squarefree curves scanned
  std::size_t skipped = 0;      // discriminant-zero pairs
  // all zero when the scan returns; any violation is a hard error carrying
  // the offending curve
  std::size_t rh_violations = 0, fe_violations = 0, hasse_violations = 0;
  double max_fe_residual = 0;
  double max_rh_deviation = 0;
  double max_norm_a1 = 0;  // max |a_1| / (2g sqrt(q))
  // up to sample_cap per-curve rows (a, b, a_1[, b_2]) in scan order
  std::vector<std::vector<std::int64_t>> samples;
};

// genus 1: the full depressed family y^2 = x^3 + a x + b (every monic
// squarefree cubic is an x-translate of exactly one member, so family
// statistics are identical); genus 2: the trinomial slice y^2 = x^5 + a x + b
// on a deterministic grid (full at q <= 128, 32 values per axis at q <= 512,
// 24 beyond)
FamilyScan family_scan(int g, std::uint64_t q, const Parallel& par, std::size_t sample_cap = 0);

struct FamilyMoment {
  int g = 0;
  std::uint64_t q = 0;
  double s = 0;
  std::size_t family_size = 0;
  double empirical = 0;
  double rmt_value = 0;      // moment_usp(g, s)
  double deviation = 0;
  double sqrt_q_scale = 0;   // deviation * sqrt(q)
};

// mean of det(I - Theta_X)^s = P(q^{-1/2})^s over the genus-g family above
FamilyMoment family_moment(int g, std::uint64_t q, double s, const Parallel& par);

}  // namespace g2rmt
