#include "torus.hpp"

#include <array>

namespace g2rmt {

// positive roots as integer pairs (a, b): phase of t^alpha is a*t1 + b*t2
static constexpr std::array<std::pair<int, int>, 6> POS = {
    {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}};
static constexpr std::array<std::pair<int, int>, 3> POS_SHORT = {{{1, 0}, {1, 1}, {2, 1}}};

double weyl_density(double t1, double t2) {
  double prod = 1.0;
  for (auto [a, b] : POS) prod *= 2.0 - 2.0 * std::cos(a * t1 + b * t2);
  return prod / 12.0;
}

double char_fundamental(Rep r, double t1, double t2) {
  if (r == Rep::r7) {
    double s = 1.0;
    for (auto [a, b] : POS_SHORT) s += 2.0 * std::cos(a * t1 + b * t2);
    return s;
  }
  double s = 2.0;
  for (auto [a, b] : POS) s += 2.0 * std::cos(a * t1 + b * t2);
  return s;
}

// ---- Weyl character formula ----

namespace {

struct WeylOrbitSum {
  // signed exponential sum  sum_i sign_i * exp(i (a_i t1 + b_i t2))
  std::vector<int> a, b, sign;
  cplx eval(double t1, double t2) const {
    cplx s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      double ph = a[i] * t1 + b[i] * t2;
      s += double(sign[i]) * cplx(std::cos(ph), std::sin(ph));
    }
    return s;
  }
  // k-th directional derivative along d, up to the common factor i^k:
  // sum_i sign_i <mu_i, d>^k exp(i (a_i t1 + b_i t2)). Ratios of same-k
  // values are unaffected by the dropped factor.
  cplx dsum(int k, double d1, double d2, double t1, double t2) const {
    cplx s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      double m = std::pow(a[i] * d1 + b[i] * d2, k);
      double ph = a[i] * t1 + b[i] * t2;
      s += double(sign[i]) * m * cplx(std::cos(ph), std::sin(ph));
    }
    return s;
  }
  double dscale(int k, double d1, double d2) const {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] * d1 + b[i] * d2));
    return std::pow(m, k) * double(a.size());
  }
};

WeylOrbitSum orbit_sum(const std::vector<WeylElement>& W, const Weight& v) {
  WeylOrbitSum os;
  for (const auto& w : W) {
    Weight img = apply(w, v);
    if (img[0].get_den() != 1 || img[1].get_den() != 1)
      fail_check("weyl orbit of an integral weight left the lattice");
    os.a.push_back((int)img[0].get_num().get_si());
    os.b.push_back((int)img[1].get_num().get_si());
    os.sign.push_back(w.det);
  }
  return os;
}

struct CharTable {
  RootSystem rs = build_g2();
  std::vector<WeylElement> W = weyl_group(rs);
  WeylOrbitSum denom;
  CharTable() { denom = orbit_sum(W, rs.delta); }
  WeylOrbitSum numer(int n1, int n2) {
    Weight lam = g2_weight(n1, n2);
    for (int i = 0; i < 2; ++i) lam[i] += rs.delta[i];
    return orbit_sum(W, lam);
  }
};

CharTable& char_table() {
  static CharTable tbl;
  return tbl;
}

}  // namespace

cplx char_weyl(int n1, int n2, double t1, double t2) {
  if (n1 < 0 || n2 < 0) fail_usage("char_weyl: label must be dominant (n1, n2 >= 0)");
  auto& tbl = char_table();
  WeylOrbitSum num = tbl.numer(n1, n2);
  cplx den = tbl.denom.eval(t1, t2);
  if (std::abs(den) >= 1e-8) return num.eval(t1, t2) / den;

  // singular torus point: the denominator vanishes to some order k along a
  // generic direction, and so does the numerator (the character is bounded).
  // Both k-th directional derivatives are exact finite sums, so the limit is
  // a plain ratio with no numeric cancellation beyond the derivative sums.
  const double d1 = 1.0, d2 = 0.3737;
  for (int k = 1; k <= 8; ++k) {
    cplx dden = tbl.denom.dsum(k, d1, d2, t1, t2);
    if (std::abs(dden) >= 1e-8 * tbl.denom.dscale(k, d1, d2))
      return num.dsum(k, d1, d2, t1, t2) / dden;
  }
  fail_check("char_weyl: singular point has no resolvable leading order");
}

SpectralPolynomial eigenangles(Rep r, double t1, double t2) {
  SpectralPolynomial sp;
  if (r == Rep::r7) {
    sp.zero_multiplicity = 1;
    for (auto [a, b] : POS_SHORT) {
      sp.angles.push_back(a * t1 + b * t2);
      sp.angles.push_back(-(a * t1 + b * t2));
    }
  } else {
    sp.zero_multiplicity = 2;
    for (auto [a, b] : POS) {
      sp.angles.push_back(a * t1 + b * t2);
      sp.angles.push_back(-(a * t1 + b * t2));
    }
  }
  return sp;
}

cplx zhat(Rep r, double t1, double t2, double phi) {
  cplx prod = 1.0;
  for (double ang : eigenangles(r, t1, t2).angles) {
    double ph = ang - phi;
    prod *= cplx(1.0 - std::cos(ph), -std::sin(ph));
  }
  return prod;
}

double zhat_abs(Rep r, double t1, double t2, double phi) {
  // |1 - e^{i ph}| = 2 |sin(ph/2)|
  double prod = 1.0;
  for (double ang : eigenangles(r, t1, t2).angles)
    prod *= 2.0 * std::abs(std::sin(0.5 * (ang - phi)));
  return prod;
}

double divergence_bound(Rep r) { return r == Rep::r7 ? -1.5 : -7.0 / 6.0; }

namespace {

// midpoint subsample of one lattice cell, 16x16
double refined_cell(Rep r, double s, double phi, double t1, double t2, double h) {
  double acc = 0.0;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      double u1 = t1 + h * ((i + 0.5) / 16.0 - 0.5);
      double u2 = t2 + h * ((j + 0.5) / 16.0 - 0.5);
      acc += weyl_density(u1, u2) * std::pow(zhat_abs(r, u1, u2, phi), s);
    }
  return acc / 256.0;
}

}  // namespace

double quad_moment(Rep r, double s, double phi, int n, const Parallel& par) {
  if (n < 8) fail_usage("quad_moment: grid too small");
  if (s <= divergence_bound(r))
    fail_usage("quad_moment: moment integral diverges at this s");
  const double h = 2.0 * PI / n;
  const bool refine = s < 0.0;
  double total = block_sum(std::size_t(n) * n, par, [&](std::size_t idx) {
    int j = int(idx / n), k = int(idx % n);
    double t1 = h * j, t2 = h * k;
    double z = zhat_abs(r, t1, t2, phi);
    if (refine && z < 1e-3) return refined_cell(r, s, phi, t1, t2, h);
    double w = weyl_density(t1, t2);
    if (w < 1e-300) return 0.0;  // singular locus carries no measure
    return w * std::pow(z, s);
  });
  return total / (double(n) * n);
}

cplx orthogonality(int a1, int a2, int b1, int b2, int n, const Parallel& par) {
  const double h = 2.0 * PI / n;
  cplx total = block_sum_c(std::size_t(n) * n, par, [&](std::size_t idx) -> cplx {
    int j = int(idx / n), k = int(idx % n);
    double t1 = h * j, t2 = h * k;
    double w = weyl_density(t1, t2);
    if (w < 1e-300) return 0.0;
    cplx ca = char_weyl(a1, a2, t1, t2);
    cplx cb = char_weyl(b1, b2, t1, t2);
    return w * ca * std::conj(cb);
  });
  return total / (double(n) * n);
}

double Histogram::total() const {
  Kahan k;
  for (double m : mass) k.add(m);
  k.add(underflow);
  k.add(overflow);
  return k.value();
}

Histogram value_histogram(Rep r, Statistic st, double phi, const HistogramOptions& opt,
                          const Parallel& par) {
  if (opt.bins < 1 || opt.n < 8) fail_usage("value_histogram: bad bins/grid");
  const int n = opt.n;
  const double h = 2.0 * PI / n;

  auto stat_of = [&](double t1, double t2) -> double {
    switch (st) {
      case Statistic::trace:
        return char_fundamental(r, t1, t2);
      case Statistic::abs:
        return zhat_abs(r, t1, t2, phi);
      default:
        return std::log(zhat_abs(r, t1, t2, phi));
    }
  };

  // pass 1: range
  double lo, hi;
  if (st == Statistic::trace) {
    lo = -2.0;
    hi = r == Rep::r7 ? 7.0 : 14.0;
  } else {
    struct MinMax {
      double lo = 1e300, hi = -1e300;
    };
    auto blocks = block_map<MinMax>(std::size_t(n) * n, par,
                                    [&](std::size_t b, std::size_t e, MinMax& mm) {
                                      for (std::size_t i = b; i < e; ++i) {
                                        int j = int(i / n), k = int(i % n);
                                        if (weyl_density(h * j, h * k) < 1e-300) continue;
                                        double v = stat_of(h * j, h * k);
                                        if (st == Statistic::logabs && v < opt.logabs_floor)
                                          continue;
                                        mm.lo = std::min(mm.lo, v);
                                        mm.hi = std::max(mm.hi, v);
                                      }
                                    });
    MinMax mm;
    for (auto& b : blocks) {
      mm.lo = std::min(mm.lo, b.lo);
      mm.hi = std::max(mm.hi, b.hi);
    }
    lo = mm.lo;
    hi = mm.hi + 1e-12 * (std::abs(mm.hi) + 1.0);
  }

  Histogram out;
  out.lo = lo;
  out.hi = hi;
  out.width = (hi - lo) / opt.bins;

  struct Acc {
    std::vector<double> mass;
    double under = 0, over = 0;
  };
  auto blocks = block_map<Acc>(std::size_t(n) * n, par, [&](std::size_t b, std::size_t e,
                                                            Acc& acc) {
    acc.mass.assign(opt.bins, 0.0);
    for (std::size_t i = b; i < e; ++i) {
      int j = int(i / n), k = int(i % n);
      double w = weyl_density(h * j, h * k);
      if (w < 1e-300) continue;
      w /= double(n) * n;
      double v = stat_of(h * j, h * k);
      if (v < lo)
        acc.under += w;
      else if (v >= hi)
        acc.over += w;
      else
        acc.mass[std::size_t((v - lo) / out.width)] += w;
    }
  });
  out.mass.assign(opt.bins, 0.0);
  for (auto& b : blocks) {
    for (int i = 0; i < opt.bins; ++i) out.mass[i] += b.mass[i];
    out.underflow += b.under;
    out.overflow += b.over;
  }
  out.density.resize(opt.bins);
  for (int i = 0; i < opt.bins; ++i) out.density[i] = out.mass[i] / out.width;
  return out;
}

std::vector<double> trace_moments(Rep r, int kmax, int n, const Parallel& par) {
  const double h = 2.0 * PI / n;
  struct Acc {
    std::array<Kahan, 8> m;
  };
  if (kmax < 1 || kmax > 8) fail_usage("trace_moments: kmax in [1,8]");
  auto blocks = block_map<Acc>(std::size_t(n) * n, par,
                               [&](std::size_t b, std::size_t e, Acc& acc) {
                                 for (std::size_t i = b; i < e; ++i) {
                                   int j = int(i / n), k = int(i % n);
                                   double w = weyl_density(h * j, h * k);
                                   if (w < 1e-300) continue;
                                   double tr = char_fundamental(r, h * j, h * k);
                                   double p = 1.0;
                                   for (int q = 0; q < kmax; ++q) {
                                     p *= tr;
                                     acc.m[q].add(w * p);
                                   }
                                 }
                               });
  std::vector<double> out(kmax);
  for (int q = 0; q < kmax; ++q) {
    Kahan t;
    for (auto& b : blocks) t.add(b.m[q].value());
    out[q] = t.value() / (double(n) * n);
  }
  return out;
}

double mc_moment(Rep r, double s, double phi, std::size_t samples, std::uint64_t seed) {
  if (s <= divergence_bound(r)) fail_usage("mc_moment: divergent s");
  SplitMix64 rng(seed);
  Kahan acc;
  for (std::size_t i = 0; i < samples; ++i) {
    double t1 = 2.0 * PI * rng.uniform();
    double t2 = 2.0 * PI * rng.uniform();
    acc.add(weyl_density(t1, t2) * std::pow(zhat_abs(r, t1, t2, phi), s));
  }
  return acc.value() / double(samples);
}

}  // namespace g2rmt
