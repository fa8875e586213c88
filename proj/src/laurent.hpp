#pragma once
// Sparse multivariate Laurent polynomials with exact rational coefficients.
// Used for constant-term extraction of Weyl-denominator-type products; the
// 1/|W| normalization stays exact in-module.

#include <map>
#include <vector>

#include "rootsys.hpp"
#include "util.hpp"

namespace g2rmt {

struct LaurentPoly {
  int rank = 0;
  std::map<std::vector<int>, Rational> terms;  // exponent vector -> coefficient

  static LaurentPoly constant(int rank, const Rational& c);
  static LaurentPoly one(int rank) { return constant(rank, 1); }
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b, std::size_t term_cap);

// (1 - t^alpha)^k by binomial expansion; alpha must be integral.
LaurentPoly root_factor_pow(int rank, const std::vector<int>& alpha, unsigned k);

Rational constant_term(const LaurentPoly& p);

inline constexpr std::size_t DEFAULT_TERM_CAP = 50'000'000;

// CT( prod_{alpha in R} (1 - t^alpha)^{k_class(alpha)} ) / |W|
Rational ct_product(const RootSystem& rs, unsigned k_short, unsigned k_long,
                    std::size_t term_cap = DEFAULT_TERM_CAP);

}  // namespace g2rmt
