#include "expsums.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "torus.hpp"

namespace g2rmt {

namespace {

// compensated summation is mandatory above this length; below it plain
// accumulation is within tolerance and faster in the convolution kernels
constexpr std::size_t PLAIN_SUM_CAP = 10000;
// O(p^2) sweeps beyond this are not desk-scale
constexpr std::uint64_t SWEEP_CAP = std::uint64_t(1) << 15;

// e(k/n) for k = 0..n-1 with exact conjugate symmetry, so that terms paired
// by x -> -x cancel to the last bit in reality checks
std::vector<cplx> unit_roots(std::uint64_t n) {
  std::vector<cplx> w(n);
  for (std::uint64_t k = 0; k <= n / 2; ++k) w[k] = std::polar(1.0, 2.0 * PI * double(k) / double(n));
  for (std::uint64_t k = n / 2 + 1; k < n; ++k) w[k] = std::conj(w[n - k]);
  return w;
}

// sup distance between the empirical CDF of the samples and cdf(x)
template <typename CDF>
double ks_statistic(std::vector<double> v, CDF&& cdf) {
  std::sort(v.begin(), v.end());
  const double n = double(v.size());
  double d = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double F = cdf(v[i]);
    d = std::max(d, std::max(F - double(i) / n, double(i + 1) / n - F));
  }
  return d;
}

double wrap_angle(cplx z) {
  double t = std::atan2(z.imag(), z.real());
  if (t < 0) t += 2.0 * PI;
  return t;
}

struct SignResolution {
  int sign = 1;
  bool decisive = false;
};

// the trace of any class in G2's 7-dim representation lies in [-2, 7]; the
// sign is the one placing every candidate trace in that window, decisive
// when the window is asymmetric for some value (|trace| > 2)
SignResolution resolve_sign(const std::vector<double>& plus_traces, const std::string& what) {
  constexpr double tol = 1e-6;
  constexpr double lo = -2.0 - tol, hi = 7.0 + tol;
  bool plus_ok = true, minus_ok = true;
  for (double t : plus_traces) {
    if (t < lo || t > hi) plus_ok = false;
    if (-t < lo || -t > hi) minus_ok = false;
  }
  if (!plus_ok && !minus_ok) fail_check(what + ": no sign places every trace in [-2, 7]");
  if (plus_ok && minus_ok) return {1, false};
  return {plus_ok ? 1 : -1, true};
}

}  // namespace

cplx gauss_sum(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi) {
  if (chi.field != psi.field) fail_usage("gauss_sum: characters live on different fields");
  const Field& f = *chi.field;
  if (chi.principal()) fail_usage("gauss_sum: principal character has a degenerate sum");
  if (!f.has_tables()) fail_usage("gauss_sum: field tables required");
  const auto& ex = f.exp_table();
  const std::uint64_t L = f.q() - 1;
  KahanC s;
  std::uint64_t m = 0;  // j*k mod L, kept exact
  for (std::uint64_t k = 0; k < L; ++k) {
    s.add(std::polar(1.0, 2.0 * PI * double(m) / double(L)) * f.psi_scaled(psi.a, ex[k]));
    m += chi.j;
    if (m >= L) m -= L;
  }
  const cplx g = s.value();
  const double dev = std::abs(std::abs(g) / std::sqrt(double(f.q())) - 1.0);
  if (dev > 1e-9)
    fail_check("gauss_sum: |g| off sqrt(q) by " + std::to_string(dev) + " (q=" + std::to_string(f.q()) +
               ", j=" + std::to_string(chi.j) + ")");
  return g;
}

LPolynomial gauss_lpoly(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi) {
  return LPolynomial{{cplx(1.0), gauss_sum(chi, psi)}, double(chi.field->q()), 1};
}

HasseDavenportReport hasse_davenport_check(const Field& base, std::uint64_t chi_j, std::uint64_t psi_a,
                                           int n) {
  if (base.r() != 1) fail_usage("hasse_davenport_check: base field must be prime");
  if (n < 1 || n > 16) fail_usage("hasse_davenport_check: extension degree out of range");
  HasseDavenportReport rep;
  MultiplicativeCharacter chi(base, chi_j);
  AdditiveCharacter psi(base, psi_a);
  rep.base = gauss_sum(chi, psi);

  Field ext(base.p(), n);
  const auto& ex = ext.exp_table();
  const std::uint64_t L = ext.q() - 1;
  KahanC s;
  for (std::uint64_t k = 0; k < L; ++k) {
    const felem x = ex[k];
    s.add(base.chi(chi_j, ext.norm(x)) * ext.psi_scaled(psi_a, x));
  }
  rep.ext = s.value();
  const double dev = std::abs(std::abs(rep.ext) / std::pow(double(base.p()), 0.5 * n) - 1.0);
  if (dev > 1e-9) fail_check("hasse_davenport_check: extension |g| off sqrt(q^n) by " + std::to_string(dev));

  cplx acc(1.0, 0.0);
  for (int i = 0; i < n; ++i) acc *= -rep.base;
  rep.predicted = -acc;
  rep.deviation = std::abs(rep.ext - rep.predicted) / std::abs(rep.predicted);
  rep.ok = rep.deviation <= 1e-8;
  if (!rep.ok)
    fail_check("hasse_davenport_check: relation off by " + std::to_string(rep.deviation) +
               " (p=" + std::to_string(base.p()) + ", n=" + std::to_string(n) + ")");
  return rep;
}

AngleSpectrum gauss_angle_spectrum(std::uint64_t p, const Parallel& par) {
  if (!is_prime_u64(p) || p < 3) fail_usage("gauss_angle_spectrum: p must be an odd prime");
  if (p > SWEEP_CAP) fail_cap("gauss_angle_spectrum: p exceeds the O(p^2) sweep cap");
  Field f(p, 1);
  const auto& ex = f.exp_table();
  const std::uint64_t L = p - 1;
  std::vector<cplx> h(L);
  for (std::uint64_t k = 0; k < L; ++k) h[k] = f.psi(ex[k]);
  const std::vector<cplx> roots = unit_roots(L);

  std::vector<cplx> g(L);
  block_map<char>(L - 1, par, [&](std::size_t b, std::size_t e, char&) {
    for (std::size_t i = b; i < e; ++i) {
      const std::uint64_t j = i + 1;
      KahanC s;
      std::uint64_t m = 0;
      for (std::uint64_t k = 0; k < L; ++k) {
        s.add(h[k] * roots[m]);
        m += j;
        if (m >= L) m -= L;
      }
      g[j] = s.value();
    }
  });

  AngleSpectrum out;
  out.angles.reserve(L - 1);
  const double sq = std::sqrt(double(p));
  for (std::uint64_t j = 1; j < L; ++j) {
    out.modulus_deviation = std::max(out.modulus_deviation, std::abs(std::abs(g[j]) / sq - 1.0));
    out.angles.push_back(wrap_angle(g[j]));
  }
  if (out.modulus_deviation > 1e-9)
    fail_check("gauss_angle_spectrum: some |g| off sqrt(p) by " + std::to_string(out.modulus_deviation));
  for (std::uint64_t j = 1; j < L; ++j) {
    const cplx pred = (j % 2 ? -1.0 : 1.0) * std::conj(g[j]);
    out.pairing_deviation = std::max(out.pairing_deviation, std::abs(g[L - j] - pred));
  }
  if (out.pairing_deviation > 1e-7)
    fail_check("gauss_angle_spectrum: conjugate pairing off by " + std::to_string(out.pairing_deviation));

  std::vector<double> u(out.angles);
  for (double& x : u) x /= 2.0 * PI;
  out.discrepancy = ks_statistic(u, [](double x) { return x; });
  out.ks = out.discrepancy;
  return out;
}

namespace {

// shared Kloosterman core; da = dlog(a)
double kloosterman_core(const Field& f, const std::vector<std::uint32_t>& ex, std::uint64_t da, felem a) {
  const std::uint64_t L = f.q() - 1;
  KahanC s;
  std::uint64_t iy = da;  // dlog(a) - k mod L
  for (std::uint64_t k = 0; k < L; ++k) {
    s.add(f.psi(f.add(ex[k], ex[iy])));
    iy = iy ? iy - 1 : L - 1;
  }
  const cplx v = s.value();
  const double imag_tol = 1e-12 * std::max(1.0, double(f.q()) / 1e4);
  if (std::abs(v.imag()) > imag_tol)
    fail_check("kloosterman: imaginary part " + std::to_string(v.imag()) + " at a=" + std::to_string(a));
  const double bound = 2.0 * std::sqrt(double(f.q()));
  if (std::abs(v.real()) > bound * (1.0 + 1e-9))
    fail_check("kloosterman: Weil bound violated at a=" + std::to_string(a));
  return v.real();
}

}  // namespace

double kloosterman(const Field& f, felem a) {
  if (a == 0 || a >= f.q()) fail_usage("kloosterman: a must be a nonzero field element");
  if (!f.has_tables()) fail_usage("kloosterman: field tables required");
  return kloosterman_core(f, f.exp_table(), f.dlog(a), a);
}

double satotate_cdf(double theta) {
  if (theta <= 0) return 0.0;
  if (theta >= PI) return 1.0;
  return theta / PI - std::sin(2.0 * theta) / (2.0 * PI);
}

KloostermanSample kloosterman_lpoly(const Field& f, felem a) {
  KloostermanSample s;
  s.value = kloosterman(f, a);
  const double q = double(f.q());
  s.angle = std::acos(std::clamp(-s.value / (2.0 * std::sqrt(q)), -1.0, 1.0));
  s.lpoly = LPolynomial{{cplx(1.0), cplx(s.value), cplx(q)}, q, 1};
  return s;
}

SatoTateReport kloosterman_satotate(const Field& f, const Parallel& par) {
  if (!f.has_tables()) fail_usage("kloosterman_satotate: field tables required");
  if (f.q() > SWEEP_CAP) fail_cap("kloosterman_satotate: q exceeds the O(q^2) sweep cap");
  const auto& ex = f.exp_table();
  const std::uint64_t L = f.q() - 1;
  const double sq = std::sqrt(double(f.q()));
  SatoTateReport rep;
  rep.count = L;
  rep.angles.resize(L);
  block_map<char>(L, par, [&](std::size_t b, std::size_t e, char&) {
    for (std::size_t j = b; j < e; ++j) {
      const double kl = kloosterman_core(f, ex, j, ex[j]);
      rep.angles[j] = std::acos(std::clamp(-kl / (2.0 * sq), -1.0, 1.0));
    }
  });
  rep.ks = ks_statistic(rep.angles, satotate_cdf);
  return rep;
}

std::vector<cplx> hyperkloosterman_all(const Field& f, int n) {
  if (n < 2) fail_usage("hyperkloosterman_all: n must be at least 2");
  if (!f.has_tables()) fail_usage("hyperkloosterman_all: field tables required");
  const std::uint64_t L = f.q() - 1;
  if (L > CONVOLUTION_CAP)
    fail_cap("hyperkloosterman_all: convolution length " + std::to_string(L) + " exceeds cap");
  const auto& ex = f.exp_table();
  std::vector<cplx> h(L), nxt(L);
  for (std::uint64_t k = 0; k < L; ++k) h[k] = f.psi(ex[k]);
  std::vector<cplx> c(h);
  const bool comp = L > PLAIN_SUM_CAP;
  for (int step = 2; step <= n; ++step) {
    for (std::uint64_t s = 0; s < L; ++s) {
      std::uint64_t idx = s;  // s - k mod L
      if (comp) {
        KahanC acc;
        for (std::uint64_t k = 0; k < L; ++k) {
          acc.add(c[k] * h[idx]);
          idx = idx ? idx - 1 : L - 1;
        }
        nxt[s] = acc.value();
      } else {
        cplx acc = 0;
        for (std::uint64_t k = 0; k < L; ++k) {
          acc += c[k] * h[idx];
          idx = idx ? idx - 1 : L - 1;
        }
        nxt[s] = acc;
      }
    }
    std::swap(c, nxt);
  }

  // complete-sum identity: sum over a != 0 equals (sum_x psi(x))^n = (-1)^n;
  // tolerance scales with the accumulated magnitude since the cancellation
  // is gigantic at deep extensions
  KahanC tot;
  Kahan mag;
  for (const cplx& v : c) {
    tot.add(v);
    mag.add(std::abs(v));
  }
  const double want = (n % 2 == 0) ? 1.0 : -1.0;
  const double tol = std::max(1e-6, 1e-12 * double(n) * mag.value());
  if (std::abs(tot.value() - want) > tol)
    fail_check("hyperkloosterman_all: total-sum identity off by " + std::to_string(std::abs(tot.value() - want)) +
               " (q=" + std::to_string(f.q()) + ", n=" + std::to_string(n) + ")");
  return c;
}

cplx hyperkloosterman_naive(const Field& f, int n, felem a) {
  if (n < 2) fail_usage("hyperkloosterman_naive: n must be at least 2");
  if (a == 0 || a >= f.q()) fail_usage("hyperkloosterman_naive: a must be a nonzero field element");
  if (!f.has_tables()) fail_usage("hyperkloosterman_naive: field tables required");
  const std::uint64_t L = f.q() - 1;
  if (std::pow(double(L), n - 1) > 2e6) fail_cap("hyperkloosterman_naive: (q-1)^(n-1) beyond cap");
  const auto& ex = f.exp_table();
  const std::uint64_t da = f.dlog(a);
  std::vector<std::uint64_t> k(std::size_t(n - 1), 0);
  KahanC s;
  for (;;) {
    std::uint64_t dsum = 0;
    felem xsum = 0;
    for (int i = 0; i < n - 1; ++i) {
      dsum += k[std::size_t(i)];
      xsum = f.add(xsum, ex[k[std::size_t(i)]]);
    }
    const std::uint64_t dlast = (da + L - dsum % L) % L;
    s.add(f.psi(f.add(xsum, ex[dlast])));
    std::size_t i = 0;
    while (i < k.size() && ++k[i] == L) k[i++] = 0;
    if (i == k.size()) break;
  }
  return s.value();
}

std::vector<HKSample> hk_family(const Field& f, int n) {
  if (n < 2 || n > 12) fail_usage("hk_family: n out of range [2, 12]");
  if (!f.has_tables()) fail_usage("hk_family: field tables required");
  const std::uint64_t q = f.q(), L = q - 1;
  const bool self_dual = (n % 2 == 0) || (f.p() == 2);
  const int mmax = self_dual ? n / 2 : n;
  const double sgn = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^(n+1)
  const auto& ex = f.exp_table();

  // ps[j][m-1] = m-th power sum of the normalized inverse roots at a = ex[j]
  std::vector<std::vector<cplx>> ps(L, std::vector<cplx>(std::size_t(mmax)));
  for (int m = 1; m <= mmax; ++m) {
    Field ext(f.p(), f.r() * m);
    const auto all = hyperkloosterman_all(ext, n);
    const auto emb = embedding_map(f, ext);
    const double scale = std::pow(double(ext.q()), 0.5 * double(n - 1));
    for (std::uint64_t j = 0; j < L; ++j)
      ps[j][std::size_t(m - 1)] = sgn / scale * all[ext.dlog(emb[ex[j]])];
  }

  std::vector<HKSample> out(L);
  const double qpow = std::pow(double(q), 0.5 * double(n - 1));
  for (std::uint64_t j = 0; j < L; ++j) {
    HKSample& smp = out[j];
    smp.a = ex[j];
    smp.self_dual = self_dual;
    std::vector<cplx> coeff(std::size_t(n + 1));
    coeff[0] = 1.0;
    if (self_dual) {
      std::vector<double> pr(static_cast<std::size_t>(mmax));
      for (int m = 0; m < mmax; ++m) {
        if (std::abs(ps[j][std::size_t(m)].imag()) > 1e-9)
          fail_check("hk_family: self-dual power sum not real at a=" + std::to_string(smp.a));
        pr[std::size_t(m)] = ps[j][std::size_t(m)].real();
      }
      const auto e = elementary_from_power_sums(pr);
      for (int i = 1; i <= mmax; ++i) coeff[std::size_t(i)] = (i % 2 ? -e[std::size_t(i - 1)] : e[std::size_t(i - 1)]);
      // functional-equation fill: palindromic for even n, anti-palindromic
      // (forced eigenvalue 1) for odd n over even q
      const double fill = (n % 2 == 0) ? 1.0 : -1.0;
      for (int i = mmax + 1; i <= n; ++i) coeff[std::size_t(i)] = fill * coeff[std::size_t(n - i)];
    } else {
      const auto e = elementary_from_power_sums(ps[j]);
      for (int i = 1; i <= n; ++i) coeff[std::size_t(i)] = (i % 2 ? -e[std::size_t(i - 1)] : e[std::size_t(i - 1)]);
    }
    smp.norm_poly = LPolynomial{coeff, 1.0, 0};
    const double dev = unitarity_deviation(smp.norm_poly);
    if (dev > 1e-6)
      fail_check("hk_family: normalized roots off the unit circle by " + std::to_string(dev) +
                 " at a=" + std::to_string(smp.a));
    smp.trace = ps[j][0].real();
    std::vector<cplx> ar(std::size_t(n + 1));
    for (int i = 0; i <= n; ++i) ar[std::size_t(i)] = coeff[std::size_t(i)] * std::pow(qpow, double(i));
    smp.lpoly = LPolynomial{ar, double(q), n - 1};
  }
  return out;
}

std::vector<cplx> nmk_all(std::uint64_t p, const Parallel& par) {
  if (!is_prime_u64(p)) fail_usage("nmk_all: p must be prime");
  if (p < 17) fail_usage("nmk_all: p must be at least 17");
  if (p > SWEEP_CAP) fail_cap("nmk_all: p exceeds the O(p^2) sweep cap");
  Field f(p, 1);
  const std::vector<cplx> w = unit_roots(p);
  std::vector<signed char> c2(p, 0);
  std::vector<std::uint32_t> x7(p, 0);
  for (std::uint64_t x = 1; x < p; ++x) {
    c2[x] = (signed char)f.chi2(x);
    x7[x] = (std::uint32_t)f.pow(x, 7);
  }
  std::vector<cplx> out(p - 1);
  block_map<char>(p - 1, par, [&](std::size_t b, std::size_t e, char&) {
    for (std::size_t i = b; i < e; ++i) {
      const std::uint64_t t = i + 1;
      KahanC s;
      std::uint64_t tx = 0;  // t*x mod p
      for (std::uint64_t x = 1; x < p; ++x) {
        tx += t;
        if (tx >= p) tx -= p;
        std::uint64_t idx = x7[x] + tx;
        if (idx >= p) idx -= p;
        s.add(c2[x] > 0 ? w[idx] : -w[idx]);
      }
      out[i] = s.value();
    }
  });
  // conj S(t) = chi2(-1) S(t): real for p = 1 mod 4, imaginary for p = 3 mod 4
  double dev = 0;
  for (const cplx& v : out)
    dev = std::max(dev, std::abs(p % 4 == 1 ? v.imag() : v.real()));
  if (dev > 1e-8)
    fail_check("nmk_all: conjugation symmetry off by " + std::to_string(dev) + " at p=" + std::to_string(p));
  return out;
}

NmkData nmk_normalize(std::uint64_t p, const Parallel& par) {
  NmkData d;
  d.p = p;
  d.raw = nmk_all(p, par);
  for (const cplx& v : d.raw)
    d.conj_deviation = std::max(d.conj_deviation, std::abs(p % 4 == 1 ? v.imag() : v.real()));
  Field f(p, 1);
  MultiplicativeCharacter chi2(f, (p - 1) / 2);
  AdditiveCharacter psi1(f, 1);
  d.gauss = gauss_sum(chi2, psi1);

  std::vector<double> plus(d.raw.size());
  for (std::size_t i = 0; i < d.raw.size(); ++i) {
    const cplx ratio = d.raw[i] / d.gauss;
    if (std::abs(ratio.imag()) > 1e-8)
      fail_check("nmk_normalize: normalized value not real at t=" + std::to_string(i + 1));
    plus[i] = -ratio.real();
  }
  const auto res = resolve_sign(plus, "nmk_normalize(p=" + std::to_string(p) + ")");
  d.sign = res.sign;
  d.decisive = res.decisive;
  d.traces.resize(plus.size());
  for (std::size_t i = 0; i < plus.size(); ++i) d.traces[i] = res.sign * plus[i];
  return d;
}

NmkPowerSums nmk_power_sums(std::uint64_t p, int mmax, const Parallel& par) {
  if (mmax < 1 || mmax > 4) fail_usage("nmk_power_sums: mmax out of range [1, 4]");
  NmkPowerSums out;
  out.p = p;
  {
    const auto base = nmk_normalize(p, par);
    out.sign.push_back(base.sign);
    out.decisive.push_back(base.decisive);
    out.trace.push_back(base.traces);
  }
  const std::vector<cplx> w = unit_roots(p);
  for (int m = 2; m <= mmax; ++m) {
    Field ext(p, m);
    const std::uint64_t LQ = ext.q() - 1;
    const auto& ex = ext.exp_table();
    // bucket by (Tr(x), Tr(x^7)) with quadratic-character weights; then
    // S_m(t) = sum_{v,u} B[v,u] psi(u + t v) costs p^2 per t instead of q
    std::vector<std::int64_t> B(p * p, 0);
    std::uint64_t k7 = 0;  // 7k mod (q^m - 1)
    for (std::uint64_t k = 0; k < LQ; ++k) {
      const std::uint64_t u = ext.trace(ex[k7]);
      const std::uint64_t v = ext.trace(ex[k]);
      B[v * p + u] += (k & 1) ? -1 : 1;
      k7 += 7;
      if (k7 >= LQ) k7 -= LQ;
    }
    MultiplicativeCharacter c2e(ext, LQ / 2);
    AdditiveCharacter p1e(ext, 1);
    const cplx gm = gauss_sum(c2e, p1e);

    std::vector<cplx> val(p - 1);
    block_map<char>(p - 1, par, [&](std::size_t b, std::size_t e, char&) {
      for (std::size_t i = b; i < e; ++i) {
        const std::uint64_t t = i + 1;
        KahanC s;
        std::uint64_t tv = 0;  // t*v mod p
        for (std::uint64_t v = 0; v < p; ++v) {
          const std::int64_t* row = &B[v * p];
          std::uint64_t idx = tv;  // (u + t v) mod p as u walks 0..p-1
          for (std::uint64_t u = 0; u < p; ++u) {
            if (row[u]) s.add(double(row[u]) * w[idx]);
            ++idx;
            if (idx == p) idx = 0;
          }
          tv += t;
          if (tv >= p) tv -= p;
        }
        val[i] = s.value();
      }
    });

    std::vector<double> plus(val.size());
    for (std::size_t i = 0; i < val.size(); ++i) {
      const cplx ratio = val[i] / gm;
      if (std::abs(ratio.imag()) > 1e-8)
        fail_check("nmk_power_sums: normalized value not real at m=" + std::to_string(m) +
                   ", t=" + std::to_string(i + 1));
      plus[i] = -ratio.real();
    }
    const auto res = resolve_sign(plus, "nmk_power_sums(p=" + std::to_string(p) + ", m=" + std::to_string(m) + ")");
    out.sign.push_back(res.sign);
    out.decisive.push_back(res.decisive);
    std::vector<double> tr(plus.size());
    for (std::size_t i = 0; i < plus.size(); ++i) tr[i] = res.sign * plus[i];
    out.trace.push_back(tr);
  }
  return out;
}

std::vector<NmkLPoly> nmk_lpolys(std::uint64_t p, const Parallel& par) {
  const auto ps = nmk_power_sums(p, 3, par);
  std::vector<NmkLPoly> out(p - 1);
  for (std::size_t i = 0; i + 1 < p; ++i) {
    const std::vector<double> pv = {ps.trace[0][i], ps.trace[1][i], ps.trace[2][i]};
    const auto e = elementary_from_power_sums(pv);
    const double c1 = -e[0], c2 = e[1], c3 = -e[2];
    NmkLPoly& s = out[i];
    s.t = i + 1;
    // (1 - T) times a palindromic sextic: anti-palindromic degree 7
    s.poly = LPolynomial{{1.0, c1, c2, c3, -c3, -c2, -c1, -1.0}, 1.0, 0};
    const double dev = unitarity_deviation(s.poly);
    if (dev > 1e-6)
      fail_check("nmk_lpolys: roots off the unit circle by " + std::to_string(dev) +
                 " at t=" + std::to_string(s.t) + ", p=" + std::to_string(p));
    s.trace = pv[0];
    s.zhat1 = 7.0 + 5.0 * c1 + 3.0 * c2 + c3;  // poly/(1-T) at T=1
  }
  return out;
}

EquidistReport g2_equidist_report(std::uint64_t p, bool with_det, const Parallel& par) {
  EquidistReport rep;
  rep.p = p;
  rep.with_det = with_det;
  const auto data = nmk_normalize(p, par);
  rep.count = data.traces.size();
  rep.sign = data.sign;
  rep.decisive = data.decisive;

  constexpr int KM = 4;
  rep.haar_moments = trace_moments(Rep::r7, KM, 512, par);
  for (int k = 1; k <= KM; ++k) {
    Kahan s;
    for (double t : data.traces) s.add(std::pow(t, k));
    rep.moments.push_back(s.value() / double(rep.count));
    rep.moment_dev.push_back(std::abs(rep.moments.back() - rep.haar_moments[std::size_t(k - 1)]));
  }

  HistogramOptions ho;
  ho.bins = 400;
  ho.n = 1024;
  const Histogram h = value_histogram(Rep::r7, Statistic::trace, 0.0, ho, par);
  std::vector<double> cum(h.mass.size() + 1, 0.0);
  for (std::size_t i = 0; i < h.mass.size(); ++i) cum[i + 1] = cum[i] + h.mass[i];
  const double tot = h.total();
  const auto cdf = [&](double x) -> double {
    if (x <= h.lo) return h.underflow / tot;
    if (x >= h.hi) return (h.underflow + cum.back()) / tot;
    const double pos = (x - h.lo) / h.width;
    std::size_t b = std::size_t(pos);
    if (b >= h.mass.size()) b = h.mass.size() - 1;
    return (h.underflow + cum[b] + h.mass[b] * (pos - double(b))) / tot;
  };
  rep.trace_ks = ks_statistic(data.traces, cdf);

  if (with_det) {
    const auto lp = nmk_lpolys(p, par);
    Kahan s;
    for (const auto& e : lp) s.add(e.zhat1);
    rep.det_mean = s.value() / double(lp.size());
    rep.det_dev = std::abs(rep.det_mean - 6.0);
  }
  return rep;
}

}  // namespace g2rmt
