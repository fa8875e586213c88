#include "cgamma.hpp"

namespace g2rmt {

// Lanczos, g = 7, 9 terms. Standard coefficient set; relative error ~1e-15
// on the right half-plane.
static const double lanczos_g = 7.0;
static const double lanczos_c[9] = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7};

cplx log_gamma(cplx z) {
  if (z.real() < 0.5) {
    // reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
    // log(sin(pi z)) computed stably for large |Im z| via its dominant
    // exponential, else sin overflows around |Im z| ~ 230.
    cplx lg = log_gamma(1.0 - z);
    double x = z.real(), y = z.imag();
    cplx logsin;
    if (std::abs(y) < 20.0) {
      logsin = std::log(std::sin(PI * z));
    } else {
      // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / 2i; keep the growing term
      cplx ipz = cplx(0, PI) * z;
      if (y > 0)
        logsin = -ipz - std::log(cplx(0, 2)) + std::log(1.0 - std::exp(2.0 * ipz));
      else
        logsin = ipz - std::log(cplx(0, -2)) + std::log(1.0 - std::exp(-2.0 * ipz));
    }
    (void)x;
    return std::log(PI) - logsin - lg;
  }
  z -= 1.0;
  cplx sum = lanczos_c[0];
  for (int k = 1; k < 9; ++k) sum += lanczos_c[k] / (z + double(k));
  cplx t = z + lanczos_g + 0.5;
  return 0.5 * std::log(2.0 * PI) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace g2rmt
