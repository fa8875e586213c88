#include "moments.hpp"

#include "cgamma.hpp"

namespace g2rmt {

Rational macdonald_g2(unsigned kS, unsigned kL) {
  Integer num = factorial(3 * kS + 3 * kL) * factorial(2 * kS) * factorial(2 * kL) *
                factorial(3 * kL);
  Integer den = 12 * factorial(2 * kS + 3 * kL) * factorial(kS + 2 * kL) *
                factorial(kS + kL) * factorial(kS) * factorial(kL) * factorial(kL);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational moment_rep7_exact(unsigned s) {
  Integer num = factorial(3 * s + 6) * factorial(2 * s + 2);
  Integer den = factorial(2 * s + 5) * factorial(s + 3) * factorial(s + 2) * factorial(s + 1);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational moment_rep14_exact(unsigned s) {
  Integer f = factorial(s + 1);
  Integer num = factorial(6 * s + 6) * factorial(2 * s + 2);
  Integer den = 12 * factorial(5 * s + 5) * f * f * f;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

static void validate(const GammaRatioFormula& f) {
  long snum = 0, sden = 0;
  for (auto [a, b] : f.numerator) {
    if (a <= 0) fail_usage("gamma ratio: slopes must be positive");
    (void)b;
    snum += a;
  }
  for (auto [a, b] : f.denominator) {
    if (a <= 0) fail_usage("gamma ratio: slopes must be positive");
    (void)b;
    sden += a;
  }
  if (snum != sden) fail_usage("gamma ratio: numerator and denominator slope sums differ");
}

cplx GammaRatioFormula::log_eval(cplx s) const {
  if (s.real() <= domain_bound)
    fail_usage("gamma ratio: s outside the analyticity half-plane");
  cplx lg = std::log(cplx(to_double(prefactor), 0.0));
  for (auto [a, b] : numerator) lg += log_gamma(double(a) * s + double(b));
  for (auto [a, b] : denominator) lg -= log_gamma(double(a) * s + double(b));
  return lg;
}

cplx GammaRatioFormula::eval(cplx s) const { return std::exp(log_eval(s)); }

GammaRatioFormula rep7_formula() {
  GammaRatioFormula f;
  f.prefactor = 1;
  f.numerator = {{3, 7}, {2, 3}};
  f.denominator = {{2, 6}, {1, 4}, {1, 3}, {1, 2}};
  f.domain_bound = -1.5;
  validate(f);
  return f;
}

GammaRatioFormula rep14_formula() {
  GammaRatioFormula f;
  f.prefactor = Rational(1, 12);
  f.numerator = {{6, 7}, {2, 3}};
  f.denominator = {{5, 6}, {1, 2}, {1, 2}, {1, 2}};
  f.domain_bound = -7.0 / 6.0;
  validate(f);
  return f;
}

cplx moment_rep7_gamma(cplx s) { return rep7_formula().eval(s); }
cplx moment_rep14_gamma(cplx s) { return rep14_formula().eval(s); }

cplx moment_usp(unsigned g, cplx s) {
  if (g < 1) fail_usage("moment_usp: g must be >= 1");
  if (s.real() <= -0.5) fail_usage("moment_usp: requires Re s > -1/2");
  cplx lg = 2.0 * double(g) * s * std::log(2.0);
  for (unsigned j = 1; j <= g; ++j) {
    lg += log_gamma(cplx(1.0 + g + j, 0.0));
    lg += log_gamma(s + cplx(0.5 + j, 0.0));
    lg -= log_gamma(cplx(0.5 + j, 0.0));
    lg -= log_gamma(s + cplx(1.0 + g + j, 0.0));
  }
  return std::exp(lg);
}

}  // namespace g2rmt
