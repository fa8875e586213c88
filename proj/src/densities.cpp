#include "densities.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace g2rmt {

ContourKernel::ContourKernel(const GammaRatioFormula& f, const ContourOptions& opt) {
  c_ = opt.c;
  if (c_ <= f.domain_bound) fail_usage("contour: c outside the analyticity half-plane");

  drift_ = 0.0;
  for (auto [a, b] : f.numerator) (void)b, drift_ += a * std::log(double(a));
  for (auto [a, b] : f.denominator) (void)b, drift_ -= a * std::log(double(a));
  drift_ = std::abs(drift_);

  const double log_tol = std::log(opt.tol);
  auto log_mag = [&](double y) { return f.log_eval(cplx(c_, y)).real(); };

  // deterministic truncation: doubling scan of the raw magnitude
  sigma_ = 0.0;
  Y_ = 0.0;
  for (double y = 16.0; y <= opt.y_cap; y *= 2.0) {
    if (log_mag(y) < log_tol) {
      Y_ = y;
      break;
    }
  }
  if (Y_ == 0.0) {
    if (!opt.allow_window)
      fail_check("contour: slow decay, integrand magnitude above threshold at Y cap");
    sigma_ = opt.window_sigma;
    for (double y = 16.0; y <= opt.y_cap; y *= 2.0) {
      if (log_mag(y) - 0.5 * sigma_ * sigma_ * y * y < log_tol) {
        Y_ = y;
        break;
      }
    }
    if (Y_ == 0.0) fail_check("contour: windowed integrand still above threshold at Y cap");
  }

  // trapezoid nodes; step tied to the oscillation scale of M(c+iy) e^{-iyu}
  double rate = drift_ + std::max(1.0, opt.u_abs_max);
  step_ = 2.0 * PI / (opt.oversample * rate);
  std::size_t K = (std::size_t)std::ceil(2.0 * Y_ / step_);
  if (K % 2) ++K;
  step_ = 2.0 * Y_ / double(K);
  y_.resize(K + 1);
  a_.resize(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    double y = -Y_ + double(k) * step_;
    y_[k] = y;
    cplx lg = f.log_eval(cplx(c_, y));
    double lw = sigma_ > 0 ? -0.5 * sigma_ * sigma_ * y * y : 0.0;
    double weight = (k == 0 || k == K) ? 0.5 * step_ : step_;
    a_[k] = std::exp(lg + lw) * weight;
  }
}

cplx ContourKernel::F(double u) const {
  // incremental rotation: e^{-i y_k u} advances by e^{-i step u} per node
  cplx rot(std::cos(step_ * u), -std::sin(step_ * u));
  cplx cur(std::cos(y_[0] * u), -std::sin(y_[0] * u));
  KahanC acc;
  for (std::size_t k = 0; k < y_.size(); ++k) {
    acc.add(a_[k] * cur);
    cur *= rot;
    if ((k & 0x1fffu) == 0x1fffu) cur /= std::abs(cur);  // kill drift
  }
  return acc.value() / (2.0 * PI);
}

// ---- cached point evaluation ----

namespace {

std::string formula_key(const GammaRatioFormula& f, const ContourOptions& o) {
  std::ostringstream os;
  os << to_string(f.prefactor) << '|';
  for (auto [a, b] : f.numerator) os << a << ',' << b << ';';
  os << '|';
  for (auto [a, b] : f.denominator) os << a << ',' << b << ';';
  os << '|' << o.c << '|' << o.tol << '|' << o.window_sigma << '|' << o.oversample << '|'
     << o.u_abs_max << '|' << o.allow_window;
  return os.str();
}

const ContourKernel& cached_kernel(const GammaRatioFormula& f, const ContourOptions& o) {
  static std::map<std::string, ContourKernel> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = formula_key(f, o);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, ContourKernel(f, o)).first;
  return it->second;
}

}  // namespace

double p1_density(const GammaRatioFormula& f, double x, const ContourOptions& opt) {
  const ContourKernel& k = cached_kernel(f, opt);
  cplx v = k.F(x) * std::exp(-k.c() * x);
  if (std::abs(v.imag()) > 1e-8)
    fail_check("p1_density: imaginary residual above tolerance");
  return v.real();
}

double p2_density(const GammaRatioFormula& f, double x, double cc, ContourOptions opt) {
  if (x <= 0) fail_usage("p2_density: x must be positive");
  if (cc <= 0) fail_usage("p2_density: contour offset c must be positive");
  opt.c = cc;
  const ContourKernel& k = cached_kernel(f, opt);
  double u = std::log(x);
  cplx v = k.F(u) * std::pow(x, -cc - 1.0);
  if (std::abs(v.imag()) > 1e-8)
    fail_check("p2_density: imaginary residual above tolerance");
  return v.real();
}

// ---- curves ----

double DensityCurve::integral_p1() const {
  // composite Simpson on the uniform u grid (grid sizes here are odd-count)
  std::size_t n = u.size();
  if (n < 3) return 0.0;
  double h = u[1] - u[0];
  Kahan acc;
  std::size_t last = n - 1;
  if (last % 2) --last;  // even interval count
  for (std::size_t i = 0; i + 2 <= last; i += 2) {
    acc.add(p1[i] + 4.0 * p1[i + 1] + p1[i + 2]);
  }
  double v = acc.value() * h / 3.0;
  if (last != n - 1) v += 0.5 * h * (p1[n - 2] + p1[n - 1]);
  return v;
}

double DensityCurve::moment_p2(int k) const {
  // int x^k P2 dx = int e^{ku} P1(u) du
  std::size_t n = u.size();
  double h = u[1] - u[0];
  Kahan acc;
  std::size_t last = n - 1;
  if (last % 2) --last;
  auto f = [&](std::size_t i) { return std::exp(double(k) * u[i]) * p1[i]; };
  for (std::size_t i = 0; i + 2 <= last; i += 2)
    acc.add(f(i) + 4.0 * f(i + 1) + f(i + 2));
  double v = acc.value() * h / 3.0;
  if (last != n - 1) v += 0.5 * h * (f(n - 2) + f(n - 1));
  return v;
}

DensityCurve density_curve(const GammaRatioFormula& f, const CurveOptions& opt) {
  ContourOptions copt = opt.contour;
  copt.u_abs_max = std::max(std::abs(opt.u_lo), 8.0);
  ContourKernel kern(f, copt);

  DensityCurve out;
  out.c = copt.c;
  out.truncation_y = kern.truncation_y();
  out.sigma = kern.sigma();
  out.support_log_sup = kern.drift();
  out.nodes = kern.node_count();

  double u_hi = kern.drift() + opt.pad;
  std::size_t n = (std::size_t)std::floor((u_hi - opt.u_lo) / opt.du) + 1;
  if (n % 2 == 0) ++n;  // odd point count -> even Simpson interval count
  out.u.resize(n);
  out.p1.resize(n);
  out.x.resize(n);
  out.p2.resize(n);
  double max_imag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double u = opt.u_lo + double(i) * opt.du;
    cplx v = kern.F(u) * std::exp(-copt.c * u);
    max_imag = std::max(max_imag, std::abs(v.imag()));
    out.u[i] = u;
    out.p1[i] = v.real();
    out.x[i] = std::exp(u);
    out.p2[i] = v.real() / out.x[i];
  }
  out.max_imag_residual = max_imag;
  if (max_imag > 1e-8) fail_check("density_curve: imaginary residual above tolerance");
  for (std::size_t i = 0; i < n; ++i) {
    if (out.p1[i] < -1e-9) fail_check("density_curve: density below -1e-9");
    if (out.p1[i] < 0) out.p1[i] = 0.0;
    out.p2[i] = out.p1[i] / out.x[i];
  }
  return out;
}

}  // namespace g2rmt
