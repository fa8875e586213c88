#include "doctest.h"
#include "laurent.hpp"

using namespace g2rmt;

namespace {

LaurentPoly monomial(int rank, std::vector<int> e, const Rational& c) {
  LaurentPoly p;
  p.rank = rank;
  p.terms[std::move(e)] = c;
  return p;
}

Rational binom(unsigned n, unsigned k) {
  return Rational(factorial(n)) / (Rational(factorial(k)) * Rational(factorial(n - k)));
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  // (1 - t1)(1 + t1) = 1 - t1^2
  const LaurentPoly one = LaurentPoly::one(2);
  const LaurentPoly t = monomial(2, {1, 0}, 1);
  const LaurentPoly prod = lp_mul(lp_sub(one, t), lp_add(one, t), 1000);
  CHECK(prod.terms.size() == 2);
  CHECK(prod.terms.at({0, 0}) == 1);
  CHECK(prod.terms.at({2, 0}) == -1);
  CHECK(constant_term(prod) == 1);

  // cancellation removes the term entirely
  const LaurentPoly z = lp_sub(t, t);
  CHECK(z.terms.empty());
  CHECK(constant_term(z) == 0);
}

TEST_CASE("root factor powers are binomial expansions") {
  const LaurentPoly p = root_factor_pow(2, {1, -1}, 3);
  // (1 - t1 t2^{-1})^3
  CHECK(p.terms.size() == 4);
  CHECK(p.terms.at({0, 0}) == 1);
  CHECK(p.terms.at({1, -1}) == -3);
  CHECK(p.terms.at({2, -2}) == 3);
  CHECK(p.terms.at({3, -3}) == -1);
}

TEST_CASE("a1 constant term has a closed form") {
  // CT((1-t)^k (1-1/t)^k) = C(2k, k); the exported value divides by |W| = 2
  const RootSystem a1 = build_a1();
  for (unsigned k = 1; k <= 5; ++k) {
    const Rational expect = binom(2 * k, k) / 2;
    CHECK(ct_product(a1, k, 0) == expect);
    // a1 has no long roots, so the long exponent is inert
    CHECK(ct_product(a1, k, 3) == expect);
  }
}

TEST_CASE("term cap raises a resource error") {
  const RootSystem g2 = build_g2();
  try {
    ct_product(g2, 4, 4, 10);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::cap);
  }
}
