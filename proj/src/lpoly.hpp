#pragma once
// L-polynomials of exponential sums and curves: coefficient containers,
// Newton's identities in both directions, Durand-Kerner root finding, and
// the unitarity (Riemann hypothesis) deviation measure.

#include <vector>

#include "util.hpp"

namespace g2rmt {

struct LPolynomial {
  std::vector<cplx> coeffs;  // constant term first, coeffs[0] == 1
  double q = 0;              // field size
  int weight = 0;            // inverse roots should satisfy |alpha| = q^(weight/2)

  int degree() const { return int(coeffs.size()) - 1; }
  cplx eval(cplx T) const;
};

// roots of sum_i coeffs[i] T^i (leading coefficient nonzero)
std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs);

// e_1..e_k from power sums p_1..p_k (p[i-1] holds p_i);
// k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i
template <typename T>
std::vector<T> elementary_from_power_sums(const std::vector<T>& p) {
  std::vector<T> e(p.size() + 1);
  e[0] = T(1);
  for (std::size_t k = 1; k <= p.size(); ++k) {
    T acc = T(0);
    for (std::size_t i = 1; i <= k; ++i) {
      T term = e[k - i] * p[i - 1];
      if (i % 2)
        acc += term;
      else
        acc -= term;
    }
    e[k] = acc / T(int(k));
  }
  e.erase(e.begin());
  return e;
}

// p_1..p_kmax from e_1..e_n (degree-n polynomial; e_k = 0 beyond n)
template <typename T>
std::vector<T> power_sums_from_elementary(const std::vector<T>& e, int kmax) {
  int n = int(e.size());
  std::vector<T> p(kmax);
  for (int k = 1; k <= kmax; ++k) {
    T acc = T(0);
    for (int i = 1; i < k && i <= n; ++i) {
      T term = e[i - 1] * p[k - i - 1];
      if (i % 2)
        acc += term;
      else
        acc -= term;
    }
    if (k <= n) {
      T last = T(int(k)) * e[k - 1];
      if (k % 2)
        acc += last;
      else
        acc -= last;
    }
    p[k - 1] = acc;
  }
  return p;
}

// L(T) = prod (1 - alpha_i T) from the power sums of the alpha_i:
// coefficient i is (-1)^i e_i
LPolynomial lpoly_from_power_sums(const std::vector<cplx>& power_sums, double q, int weight);

// max over roots T_0 of | |T_0| q^(weight/2) - 1 |
double unitarity_deviation(const LPolynomial& L);

// inverse roots divided by q^(weight/2); unit modulus when unitary
std::vector<cplx> normalized_inverse_roots(const LPolynomial& L);

// max |c_i -/+ c_(n-i)|: sign +1 checks palindromy, -1 anti-palindromy
double palindromy_deviation(const LPolynomial& L, int sign);

}  // namespace g2rmt
