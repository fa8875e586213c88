#include "lpoly.hpp"

#include <algorithm>

namespace g2rmt {

cplx LPolynomial::eval(cplx T) const {
  cplx v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * T + coeffs[i];
  return v;
}

std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs) {
  std::vector<cplx> c = coeffs;
  while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
  int n = int(c.size()) - 1;
  if (n < 1) fail_usage("poly_roots: degree must be at least 1");
  cplx lead = c[n];
  for (auto& v : c) v /= lead;

  // Durand-Kerner from a scaled spiral of initial guesses
  double scale = std::pow(std::max(std::abs(c[0]), 1e-300), 1.0 / n);
  std::vector<cplx> z(n);
  const cplx seed(0.4, 0.9);
  cplx g = 1.0;
  for (int i = 0; i < n; ++i) {
    g *= seed;
    z[i] = scale * g / std::abs(g) * (1.0 + 0.05 * i);
  }
  auto eval = [&](cplx t) {
    cplx v = 0;
    for (int i = n; i >= 0; --i) v = v * t + c[i];
    return v;
  };
  for (int iter = 0; iter < 1000; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      cplx den = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      cplx step = eval(z[i]) / den;
      z[i] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-14 * (scale + 1.0)) return z;
  }
  fail_check("poly_roots: root iteration did not converge");
}

LPolynomial lpoly_from_power_sums(const std::vector<cplx>& power_sums, double q, int weight) {
  std::vector<cplx> e = elementary_from_power_sums(power_sums);
  LPolynomial L;
  L.q = q;
  L.weight = weight;
  L.coeffs.resize(e.size() + 1);
  L.coeffs[0] = 1.0;
  for (std::size_t k = 1; k <= e.size(); ++k) L.coeffs[k] = (k % 2) ? -e[k - 1] : e[k - 1];
  return L;
}

double unitarity_deviation(const LPolynomial& L) {
  double target = std::pow(L.q, 0.5 * L.weight);
  double worst = 0.0;
  for (const cplx& root : poly_roots(L.coeffs)) worst = std::max(worst, std::abs(std::abs(root) * target - 1.0));
  return worst;
}

std::vector<cplx> normalized_inverse_roots(const LPolynomial& L) {
  double target = std::pow(L.q, 0.5 * L.weight);
  std::vector<cplx> out;
  for (const cplx& root : poly_roots(L.coeffs)) out.push_back(1.0 / (root * target));
  std::sort(out.begin(), out.end(), [](const cplx& a, const cplx& b) {
    return std::arg(a) < std::arg(b);
  });
  return out;
}

double palindromy_deviation(const LPolynomial& L, int sign) {
  int n = L.degree();
  double worst = 0.0;
  for (int i = 0; i <= n; ++i) {
    cplx diff = L.coeffs[i] - double(sign) * L.coeffs[n - i];
    worst = std::max(worst, std::abs(diff));
  }
  return worst;
}

}  // namespace g2rmt
