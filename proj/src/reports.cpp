// Command dispatch: validates configs, runs the experiments, and assembles
// deterministic JSON payloads plus CSV artifacts.

#include "reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>

#include "calib.hpp"
#include "curves.hpp"
#include "densities.hpp"
#include "expsums.hpp"
#include "ffield.hpp"
#include "laurent.hpp"
#include "lpoly.hpp"
#include "moments.hpp"
#include "torus.hpp"

namespace g2rmt {

namespace {

using u64 = std::uint64_t;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void require_keys(const Json& cfg, const std::set<std::string>& allowed) {
  for (auto it = cfg.begin(); it != cfg.end(); ++it)
    if (!allowed.count(it.key())) fail_usage("config: unknown key \"" + it.key() + "\"");
}

long long get_int(const Json& cfg, const std::string& key, long long dflt) {
  if (!cfg.contains(key)) return dflt;
  const Json& v = cfg.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned())
    fail_usage("config: " + key + " must be an integer");
  return v.get<long long>();
}

long long req_int(const Json& cfg, const std::string& key) {
  if (!cfg.contains(key)) fail_usage("config: missing " + key);
  return get_int(cfg, key, 0);
}

double get_double(const Json& cfg, const std::string& key, double dflt) {
  if (!cfg.contains(key)) return dflt;
  const Json& v = cfg.at(key);
  if (!v.is_number()) fail_usage("config: " + key + " must be a number");
  return v.get<double>();
}

bool get_bool(const Json& cfg, const std::string& key, bool dflt) {
  if (!cfg.contains(key)) return dflt;
  const Json& v = cfg.at(key);
  if (!v.is_boolean()) fail_usage("config: " + key + " must be a boolean");
  return v.get<bool>();
}

std::string get_string(const Json& cfg, const std::string& key, const std::string& dflt) {
  if (!cfg.contains(key)) return dflt;
  const Json& v = cfg.at(key);
  if (!v.is_string()) fail_usage("config: " + key + " must be a string");
  return v.get<std::string>();
}

Parallel par_from(const Json& cfg) {
  Parallel par;
  par.threads = int(get_int(cfg, "threads", 1));
  if (par.threads < 1) fail_usage("config: threads must be positive");
  return par;
}

Rep rep_from(const Json& cfg) {
  const long long r = get_int(cfg, "rep", 7);
  if (r == 7) return Rep::r7;
  if (r == 14) return Rep::r14;
  fail_usage("config: rep must be 7 or 14");
}

struct CheckList {
  Json arr = Json::array();
  bool all = true;
  void add(const std::string& name, bool ok, double value, double bound) {
    Json c;
    c["name"] = name;
    c["ok"] = ok;
    c["value"] = value;
    c["bound"] = bound;
    arr.push_back(c);
    all = all && ok;
  }
  void bounded(const std::string& name, double value, double bound) {
    add(name, value <= bound, value, bound);
  }
};

std::vector<double> s_list(const Json& cfg) {
  if (!cfg.contains("s")) return {0.0, 1.0, 2.0};
  const Json& v = cfg.at("s");
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_array()) {
    for (const Json& e : v) {
      if (!e.is_number()) fail_usage("config: s entries must be numbers");
      out.push_back(e.get<double>());
    }
  } else {
    fail_usage("config: s must be a number or an array of numbers");
  }
  if (out.empty()) fail_usage("config: s list is empty");
  return out;
}

std::vector<std::string> split_modes(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool is_nonneg_integer(double s) { return s >= 0 && s == std::floor(s) && s <= 1e6; }

double rel_dev(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// ---- moments ----

void cmd_moments(const Json& cfg, Report& r) {
  require_keys(cfg, {"rep", "s", "mode", "n", "threads", "gamma_tol", "quad_tol"});
  const Rep rep = rep_from(cfg);
  const auto ss = s_list(cfg);
  const int n = int(get_int(cfg, "n", 512));
  if (n < 4 || n > 65536) fail_usage("config: n out of range");
  const double gamma_tol = get_double(cfg, "gamma_tol", 1e-12);
  const double quad_tol = get_double(cfg, "quad_tol", 1e-8);
  const Parallel par = par_from(cfg);

  bool all_int = true;
  for (double s : ss) all_int = all_int && is_nonneg_integer(s);
  std::string mode = get_string(cfg, "mode", all_int ? "exact" : "gamma");
  const auto modes = split_modes(mode);
  std::set<std::string> mset(modes.begin(), modes.end());
  for (const auto& m : mset)
    if (m != "exact" && m != "gamma" && m != "quadrature")
      fail_usage("config: mode must combine exact, gamma, quadrature");
  if (mset.empty()) fail_usage("config: empty mode");

  Json echo = cfg;
  echo["rep"] = rep == Rep::r7 ? 7 : 14;
  echo["s"] = ss;
  echo["mode"] = mode;
  echo["n"] = n;
  echo["threads"] = par.threads;
  r.payload["config"] = echo;

  CheckList checks;
  Json rows = Json::array();
  double worst_eg = 0, worst_gq = 0, worst_eq = 0;
  for (double s : ss) {
    Json row;
    row["s"] = s;
    double exact_v = 0, gamma_v = 0, quad_v = 0;
    bool has_exact = false, has_gamma = false, has_quad = false;
    if (mset.count("exact")) {
      if (!is_nonneg_integer(s)) fail_usage("moments: exact mode needs integer s >= 0");
      const Rational v = rep == Rep::r7 ? moment_rep7_exact(unsigned(s))
                                        : moment_rep14_exact(unsigned(s));
      row["exact"] = to_string(v);
      exact_v = to_double(v);
      row["exact_value"] = exact_v;
      has_exact = true;
    }
    if (mset.count("gamma")) {
      const cplx v = rep == Rep::r7 ? moment_rep7_gamma(cplx(s, 0))
                                    : moment_rep14_gamma(cplx(s, 0));
      gamma_v = v.real();
      row["gamma"] = gamma_v;
      row["gamma_imag"] = v.imag();
      has_gamma = true;
    }
    if (mset.count("quadrature")) {
      quad_v = quad_moment(rep, s, 0.0, n, par);
      row["quadrature"] = quad_v;
      has_quad = true;
    }
    if (has_exact && has_gamma) worst_eg = std::max(worst_eg, rel_dev(gamma_v, exact_v));
    if (has_gamma && has_quad) worst_gq = std::max(worst_gq, rel_dev(quad_v, gamma_v));
    if (has_exact && has_quad) worst_eq = std::max(worst_eq, rel_dev(quad_v, exact_v));
    rows.push_back(row);
  }
  if (mset.count("exact") && mset.count("gamma"))
    checks.bounded("exact_vs_gamma", worst_eg, gamma_tol);
  if (mset.count("gamma") && mset.count("quadrature"))
    checks.bounded("gamma_vs_quadrature", worst_gq, quad_tol);
  if (mset.count("exact") && mset.count("quadrature"))
    checks.bounded("exact_vs_quadrature", worst_eq, quad_tol);

  r.payload["results"] = Json{{"rows", rows}};
  r.payload["checks"] = checks.arr;
  r.ok = checks.all;
}

// ---- ct_verify ----

void cmd_ct_verify(const Json& cfg, Report& r) {
  require_keys(cfg, {"ks_max", "kl_max", "term_cap", "threads"});
  const int ks_max = int(get_int(cfg, "ks_max", 2));
  const int kl_max = int(get_int(cfg, "kl_max", 2));
  if (ks_max < 0 || kl_max < 0 || ks_max > 8 || kl_max > 8)
    fail_usage("config: ks_max/kl_max out of range");
  const auto cap = std::size_t(get_int(cfg, "term_cap", (long long)DEFAULT_TERM_CAP));

  Json echo = cfg;
  echo["ks_max"] = ks_max;
  echo["kl_max"] = kl_max;
  echo["term_cap"] = cap;
  r.payload["config"] = echo;

  const RootSystem rs = build_g2();
  Json rows = Json::array();
  bool all_equal = true;
  for (int ks = 0; ks <= ks_max; ++ks)
    for (int kl = 0; kl <= kl_max; ++kl) {
      const Rational ct = ct_product(rs, unsigned(ks), unsigned(kl), cap);
      const Rational mac = macdonald_g2(unsigned(ks), unsigned(kl));
      const bool eq = ct == mac;
      all_equal = all_equal && eq;
      rows.push_back(Json{{"ks", ks},
                          {"kl", kl},
                          {"ct", to_string(ct)},
                          {"closed_form", to_string(mac)},
                          {"equal", eq}});
    }
  CheckList checks;
  checks.add("constant_term_identity", all_equal, all_equal ? 0.0 : 1.0, 0.0);
  r.payload["results"] = Json{{"rows", rows}};
  r.payload["checks"] = checks.arr;
  r.ok = checks.all;
}

// ---- density ----

void cmd_density(const Json& cfg, Report& r) {
  require_keys(cfg, {"rep", "du", "u_lo", "norm_tol", "mean_tol", "threads"});
  const Rep rep = rep_from(cfg);
  CurveOptions opt;
  opt.du = get_double(cfg, "du", opt.du);
  opt.u_lo = get_double(cfg, "u_lo", opt.u_lo);
  if (opt.du <= 0 || opt.du > 0.5) fail_usage("config: du out of range");
  const double norm_tol = get_double(cfg, "norm_tol", 1e-6);
  const double mean_tol = get_double(cfg, "mean_tol", 1e-4);

  Json echo = cfg;
  echo["rep"] = rep == Rep::r7 ? 7 : 14;
  echo["du"] = opt.du;
  echo["u_lo"] = opt.u_lo;
  r.payload["config"] = echo;

  const GammaRatioFormula f = rep == Rep::r7 ? rep7_formula() : rep14_formula();
  const DensityCurve dc = density_curve(f, opt);

  Json res;
  res["c"] = dc.c;
  res["truncation_y"] = dc.truncation_y;
  res["sigma"] = dc.sigma;
  res["support_log_sup"] = dc.support_log_sup;
  res["nodes"] = dc.nodes;
  res["points"] = dc.u.size();
  res["max_imag_residual"] = dc.max_imag_residual;
  const double integral = dc.integral_p1();
  const double mean = dc.moment_p2(1);
  res["integral"] = integral;
  res["mean"] = mean;
  r.payload["results"] = res;

  CheckList checks;
  checks.bounded("normalization", std::abs(integral - 1.0), norm_tol);
  if (rep == Rep::r7) checks.bounded("mean_vs_6", std::abs(mean - 6.0), mean_tol);
  r.payload["checks"] = checks.arr;
  r.ok = checks.all;

  std::string p1 = "u,density\n", p2 = "x,density\n";
  for (std::size_t i = 0; i < dc.u.size(); ++i) {
    p1 += fmt(dc.u[i]) + "," + fmt(dc.p1[i]) + "\n";
    p2 += fmt(dc.x[i]) + "," + fmt(dc.p2[i]) + "\n";
  }
  r.artifacts.emplace_back("p1.csv", std::move(p1));
  r.artifacts.emplace_back("p2.csv", std::move(p2));
}

// ---- hist ----

void cmd_hist(const Json& cfg, Report& r) {
  require_keys(cfg, {"rep", "stat", "phi", "bins", "n", "norm_tol", "threads"});
  const Rep rep = rep_from(cfg);
  const std::string stat_s = get_string(cfg, "stat", "trace");
  Statistic st;
  if (stat_s == "trace")
    st = Statistic::trace;
  else if (stat_s == "abs")
    st = Statistic::abs;
  else if (stat_s == "logabs")
    st = Statistic::logabs;
  else
    fail_usage("config: stat must be trace, abs, or logabs");
  const double phi = get_double(cfg, "phi", 0.0);
  HistogramOptions opt;
  opt.bins = int(get_int(cfg, "bins", opt.bins));
  opt.n = int(get_int(cfg, "n", opt.n));
  if (opt.bins < 1 || opt.bins > 100000) fail_usage("config: bins out of range");
  if (opt.n < 8 || opt.n > 16384) fail_usage("config: n out of range");
  const Parallel par = par_from(cfg);

  Json echo = cfg;
  echo["rep"] = rep == Rep::r7 ? 7 : 14;
  echo["stat"] = stat_s;
  echo["phi"] = phi;
  echo["bins"] = opt.bins;
  echo["n"] = opt.n;
  echo["threads"] = par.threads;
  r.payload["config"] = echo;

  const Histogram h = value_histogram(rep, st, phi, opt, par);
  Json res;
  res["lo"] = h.lo;
  res["hi"] = h.hi;
  res["width"] = h.width;
  res["bins"] = h.mass.size();
  res["underflow"] = h.underflow;
  res["overflow"] = h.overflow;
  res["total"] = h.total();
  if (st == Statistic::trace) res["moments"] = trace_moments(rep, 4, opt.n, par);
  r.payload["results"] = res;

  CheckList checks;
  checks.bounded("mass_total", std::abs(h.total() - 1.0), get_double(cfg, "norm_tol", 1e-6));
  r.payload["checks"] = checks.arr;
  r.ok = checks.all;

  std::string csv = "bin_left,bin_right,density\n";
  for (std::size_t i = 0; i < h.mass.size(); ++i) {
    const double left = h.lo + double(i) * h.width;
    csv += fmt(left) + "," + fmt(left + h.width) + "," + fmt(h.density[i]) + "\n";
  }
  r.artifacts.emplace_back("hist.csv", std::move(csv));
}

// ---- zeta ----

void cmd_zeta(const Json& cfg, Report& r) {
  require_keys(cfg, {"curve", "p", "verify", "rh_tol", "fe_tol", "threads"});
  const std::string curve = get_string(cfg, "curve", "");
  if (curve.empty()) fail_usage("config: missing curve");
  const long long p = req_int(cfg, "p");
  if (p < 2) fail_usage("config: p must be a prime >= 2");
  const bool verify = get_bool(cfg, "verify", true);

  Json echo = cfg;
  echo["curve"] = curve;
  echo["p"] = p;
  echo["verify"] = verify;
  r.payload["config"] = echo;

  const CurveSpec c = parse_curve(curve, u64(p));
  const ZetaData z = curve_zeta(c);

  Json res;
  res["kind"] = c.kind == CurveKind::projective_line ? "p1" : "hyperelliptic";
  res["p"] = c.p;
  res["genus"] = c.genus;
  res["f"] = c.f;
  res["counts"] = z.counts;
  Json bs = Json::array();
  for (const Integer& b : z.b) bs.push_back(b.get_str());
  res["b"] = bs;
  res["rh_deviation"] = z.rh_deviation;
  res["fe_deviation"] = z.fe_deviation;

  CheckList checks;
  checks.bounded("riemann_hypothesis", z.rh_deviation, get_double(cfg, "rh_tol", 1e-6));
  checks.bounded("functional_equation", z.fe_deviation, get_double(cfg, "fe_tol", 1e-8));
  if (verify) {
    // brute-force count oracle and the counts the recovered P implies
    u64 qm = 1;
    int mismatches = 0, tested = 0;
    for (int m = 1; m <= std::max(1, 2 * c.genus); ++m) {
      const bool in_cap = qm <= (u64(1) << 21) / u64(p);
      qm *= u64(p);
      if (!in_cap) break;
      const std::int64_t direct =
          c.kind == CurveKind::projective_line ? count_points(c, m) : count_points_naive(c, m);
      if (direct != predicted_count(z, m)) ++mismatches;
      ++tested;
    }
    res["verified_counts"] = tested;
    checks.add("count_oracle", mismatches == 0, double(mismatches), 0.0);
  }
  r.payload["results"] = res;
  r.payload["checks"] = checks.arr;
  r.ok = checks.all;
}

// ---- gauss ----

void cmd_gauss(const Json& cfg, Report& r) {
  require_keys(cfg, {"p", "modulus_tol", "pairing_tol", "discrepancy_c", "threads"});
  const long long p = req_int(cfg, "p");
  if (p < 3) fail_usage("config: p must be an odd prime");
  const Parallel par = par_from(cfg);

  Json echo = cfg;
  echo["p"] = p;
  echo["threads"] = par.threads;
  r.payload["config"] = echo;

  const AngleSpectrum sp = gauss_angle_spectrum(u64(p), par);
  Json res;
  res["family"] = "gauss";
  res["p"] = p;
  res["q"] = p;
  res["count"] = sp.angles.size();
  res["ks_stat"] = sp.ks;
  res["discrepancy"] = sp.discrepancy;
  res["pairing_deviation"] = sp.pairing_deviation;
  res["modulus_deviation"] = sp.modulus_deviation;
  res["weil_violations"] = 0;
  Json samples = Json::array();
  for (std::size_t i = 0; i < sp.angles.size() && i < 32; ++i) samples.push_back(sp.angles[i]);
  res["samples"] = samples;
  r.payload["results"] = res;

  CheckList checks;
  checks.bounded("modulus", sp.modulus_deviation, get_double(cfg, "modulus_tol", 1e-9));
  checks.bounded("conjugate_pairing", sp.pairing_deviation, get_double(cfg, "pairing_tol", 1e-7));
  checks.bounded("angle_discrepancy", sp.discrepancy,
                 get_double(cfg, "discrepancy_c", GAUSS_DISCREPANCY_C) / std::sqrt(double(p)));
  r.payload["checks"] = checks.arr;
  r.ok = checks.all;

  std::string csv = "theta\n";
  for (double a : sp.angles) csv += fmt(a) + "\n";
  r.artifacts.emplace_back("angles.csv", std::move(csv));
}

// ---- kloosterman ----

void cmd_kloosterman(const Json& cfg, Report& r) {
  require_keys(cfg, {"p", "r", "a", "satotate", "weil_tol", "unitary_tol", "ks_c", "threads"});
  const long long p = req_int(cfg, "p");
  const int deg = int(get_int(cfg, "r", 1));
  const bool satotate = get_bool(cfg, "satotate", false);
  const long long a = get_int(cfg, "a", 1);
  if (p < 2 || deg < 1) fail_usage("config: bad field parameters");
  const Parallel par = par_from(cfg);

  Json echo = cfg;
  echo["p"] = p;
  echo["r"] = deg;
  echo["satotate"] = satotate;
  if (!satotate) echo["a"] = a;
  echo["threads"] = par.threads;
  r.payload["config"] = echo;

  const Field f(u64(p), deg);
  Json res;
  res["family"] = "kloosterman";
  res["p"] = p;
  res["q"] = f.q();
  CheckList checks;
  if (satotate) {
    const SatoTateReport st = kloosterman_satotate(f, par);
    res["count"] = st.count;
    res["ks_stat"] = st.ks;
    res["weil_violations"] = 0;
    Json samples = Json::array();
    for (std::size_t i = 0; i < st.angles.size() && i < 32; ++i) samples.push_back(st.angles[i]);
    res["samples"] = samples;
    checks.bounded("satotate_ks", st.ks,
                   get_double(cfg, "ks_c", SATOTATE_KS_C) / std::sqrt(double(f.q())));
    std::string csv = "theta\n";
    for (double ang : st.angles) csv += fmt(ang) + "\n";
    r.artifacts.emplace_back("angles.csv", std::move(csv));
  } else {
    if (a < 1 || u64(a) >= f.q()) fail_usage("config: a must be a nonzero field element");
    const KloostermanSample ks = kloosterman_lpoly(f, felem(a));
    res["a"] = a;
    res["value"] = ks.value;
    res["angle"] = ks.angle;
    res["weil_violations"] = 0;
    Json lp = Json::array();
    for (const cplx& cc : ks.lpoly.coeffs) lp.push_back(cc.real());
    res["lpoly"] = lp;
    checks.bounded("weil", std::abs(ks.value),
                   2.0 * std::sqrt(double(f.q())) * (1 + get_double(cfg, "weil_tol", 1e-9)));
    checks.bounded("unitary", unitarity_deviation(ks.lpoly), get_double(cfg, "unitary_tol", 1e-9));
  }
  r.payload["results"] = res;
  r.payload["checks"] = checks.arr;
  r.ok = checks.all;
}

// ---- hk ----

void cmd_hk(const Json& cfg, Report& r) {
  require_keys(cfg, {"p", "r", "n", "unitary_tol", "palindromy_tol", "root_tol", "threads"});
  const long long p = req_int(cfg, "p");
  const int deg = int(get_int(cfg, "r", 1));
  const int n = int(req_int(cfg, "n"));
  if (p < 2 || deg < 1) fail_usage("config: bad field parameters");
  const Parallel par = par_from(cfg);

  Json echo = cfg;
  echo["p"] = p;
  echo["r"] = deg;
  echo["n"] = n;
  echo["threads"] = par.threads;
  r.payload["config"] = echo;

  const Field f(u64(p), deg);
  const auto fam = hk_family(f, n);
  double tmin = 0, tmax = 0, unit = 0, palin = 0, root1 = 0;
  const int psign = n % 2 ? -1 : 1;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const double t = fam[i].trace;
    if (i == 0) tmin = tmax = t;
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
    unit = std::max(unit, unitarity_deviation(fam[i].norm_poly));
    if (fam[i].self_dual) {
      palin = std::max(palin, palindromy_deviation(fam[i].norm_poly, psign));
      if (n % 2) root1 = std::max(root1, std::abs(fam[i].norm_poly.eval(1.0)));
    }
  }
  Json res;
  res["family"] = "hyperkloosterman";
  res["p"] = p;
  res["q"] = f.q();
  res["n"] = n;
  res["count"] = fam.size();
  res["self_dual"] = !fam.empty() && fam.front().self_dual;
  res["trace_min"] = tmin;
  res["trace_max"] = tmax;
  res["max_unitarity_deviation"] = unit;
  Json samples = Json::array();
  for (std::size_t i = 0; i < fam.size() && i < 32; ++i)
    samples.push_back(Json{{"a", fam[i].a}, {"trace", fam[i].trace}});
  res["samples"] = samples;
  r.payload["results"] = res;

  CheckList checks;
  checks.bounded("unitary", unit, get_double(cfg, "unitary_tol", 1e-6));
  if (!fam.empty() && fam.front().self_dual) {
    checks.bounded("palindromy", palin, get_double(cfg, "palindromy_tol", 1e-9));
    if (n % 2) checks.bounded("root_at_one", root1, get_double(cfg, "root_tol", 1e-9));
  }
  r.payload["checks"] = checks.arr;
  r.ok = checks.all;

  std::string csv = "a,trace\n";
  for (const auto& s : fam) csv += std::to_string(s.a) + "," + fmt(s.trace) + "\n";
  r.artifacts.emplace_back("traces.csv", std::move(csv));
}

// ---- nmk ----

void cmd_nmk(const Json& cfg, Report& r) {
  require_keys(cfg, {"p", "conj_tol", "range_tol", "threads"});
  const long long p = req_int(cfg, "p");
  const Parallel par = par_from(cfg);

  Json echo = cfg;
  echo["p"] = p;
  echo["threads"] = par.threads;
  r.payload["config"] = echo;

  const NmkData d = nmk_normalize(u64(p), par);
  double tmin = d.traces.front(), tmax = d.traces.front();
  for (double t : d.traces) {
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
  }
  Json res;
  res["family"] = "nmk";
  res["p"] = p;
  res["q"] = p;
  res["count"] = d.traces.size();
  res["sign"] = d.sign;
  res["decisive"] = d.decisive;
  res["conj_deviation"] = d.conj_deviation;
  res["trace_min"] = tmin;
  res["trace_max"] = tmax;
  Json samples = Json::array();
  for (std::size_t i = 0; i < d.traces.size() && i < 32; ++i) samples.push_back(d.traces[i]);
  res["samples"] = samples;
  r.payload["results"] = res;

  CheckList checks;
  checks.bounded("conjugation_symmetry", d.conj_deviation, get_double(cfg, "conj_tol", 1e-8));
  checks.bounded("trace_range", std::max(-2.0 - tmin, tmax - 7.0),
                 get_double(cfg, "range_tol", 1e-6));
  r.payload["checks"] = checks.arr;
  r.ok = checks.all;

  std::string csv = "t,trace\n";
  for (std::size_t i = 0; i < d.traces.size(); ++i)
    csv += std::to_string(i + 1) + "," + fmt(d.traces[i]) + "\n";
  r.artifacts.emplace_back("traces.csv", std::move(csv));
}

// ---- equidist ----

void cmd_equidist(const Json& cfg, Report& r) {
  require_keys(cfg, {"p", "with_det", "moment_c", "trace_ks_c", "det_c", "threads"});
  const long long p = req_int(cfg, "p");
  const bool with_det = get_bool(cfg, "with_det", false);
  const Parallel par = par_from(cfg);

  Json echo = cfg;
  echo["p"] = p;
  echo["with_det"] = with_det;
  echo["threads"] = par.threads;
  r.payload["config"] = echo;

  const EquidistReport e = g2_equidist_report(u64(p), with_det, par);
  Json res;
  res["family"] = "nmk";
  res["p"] = p;
  res["count"] = e.count;
  res["sign"] = e.sign;
  res["decisive"] = e.decisive;
  res["moments"] = e.moments;
  res["haar_moments"] = e.haar_moments;
  res["moment_dev"] = e.moment_dev;
  res["ks_stat"] = e.trace_ks;
  res["with_det"] = e.with_det;
  if (e.with_det) {
    res["det_mean"] = e.det_mean;
    res["det_dev"] = e.det_dev;
  }
  r.payload["results"] = res;

  CheckList checks;
  const double rp = std::sqrt(double(p));
  for (int k = 1; k <= 4; ++k) {
    const double ck = get_double(cfg, "moment_c", NMK_MOMENT_C[k - 1]);
    checks.bounded("moment_" + std::to_string(k), e.moment_dev[k - 1], ck / rp);
  }
  checks.bounded("trace_ks", e.trace_ks, get_double(cfg, "trace_ks_c", NMK_TRACE_KS_C) / rp);
  if (e.with_det)
    checks.bounded("det_mean_vs_6", e.det_dev, get_double(cfg, "det_c", NMK_DET_C) / rp);
  r.payload["checks"] = checks.arr;
  r.ok = checks.all;
}

// ---- family ----

void cmd_family(const Json& cfg, Report& r) {
  require_keys(cfg, {"g", "q", "s", "sample_cap", "rh_tol", "fe_tol", "threads"});
  const int g = int(req_int(cfg, "g"));
  const long long q = req_int(cfg, "q");
  if (q < 3) fail_usage("config: q must be an odd prime power >= 3");
  const auto sample_cap = std::size_t(get_int(cfg, "sample_cap", 16));
  const bool with_moment = cfg.contains("s");
  const double s = get_double(cfg, "s", 1.0);
  const Parallel par = par_from(cfg);

  Json echo = cfg;
  echo["g"] = g;
  echo["q"] = q;
  if (with_moment) echo["s"] = s;
  echo["sample_cap"] = sample_cap;
  echo["threads"] = par.threads;
  r.payload["config"] = echo;

  if (g == 3 && !with_moment) fail_usage("config: genus-3 runs are moment-only, pass s");

  Json res;
  res["g"] = g;
  res["q"] = q;
  CheckList checks;
  if (g <= 2) {
    const FamilyScan scan = family_scan(g, u64(q), par, sample_cap);
    res["grid"] = scan.grid;
    res["family_size"] = scan.family_size;
    res["skipped"] = scan.skipped;
    res["rh_violations"] = scan.rh_violations;
    res["fe_violations"] = scan.fe_violations;
    res["hasse_violations"] = scan.hasse_violations;
    res["max_fe_residual"] = scan.max_fe_residual;
    res["max_rh_deviation"] = scan.max_rh_deviation;
    res["max_norm_a1"] = scan.max_norm_a1;
    checks.add("riemann_hypothesis", scan.rh_violations == 0, double(scan.rh_violations), 0.0);
    checks.add("functional_equation", scan.fe_violations == 0, double(scan.fe_violations), 0.0);
    checks.add("hasse_bound", scan.hasse_violations == 0, double(scan.hasse_violations), 0.0);
    checks.bounded("max_fe_residual", scan.max_fe_residual, get_double(cfg, "fe_tol", 1e-8));
    checks.bounded("max_rh_deviation", scan.max_rh_deviation, get_double(cfg, "rh_tol", 1e-6));
    std::string csv = g == 1 ? "a,b,a1\n" : "a,b,a1,b2\n";
    for (const auto& row : scan.samples) {
      for (std::size_t i = 0; i < row.size(); ++i)
        csv += (i ? "," : "") + std::to_string(row[i]);
      csv += "\n";
    }
    r.artifacts.emplace_back("samples.csv", std::move(csv));
  }
  if (with_moment) {
    const FamilyMoment fm = family_moment(g, u64(q), s, par);
    res["family_size"] = fm.family_size;
    res["s"] = fm.s;
    res["empirical"] = fm.empirical;
    res["rmt_value"] = fm.rmt_value;
    res["deviation"] = fm.deviation;
    res["sqrt_q_scale"] = fm.sqrt_q_scale;
  }
  r.payload["results"] = res;
  r.payload["checks"] = checks.arr;
  r.ok = checks.all;
}

}  // namespace

Report run_command(const std::string& command, const Json& config) {
  Report r;
  r.payload["schema_version"] = REPORT_SCHEMA_VERSION;
  r.payload["command"] = command;
  r.payload["config"] = config;
  r.payload["checks"] = Json::array();
  try {
    if (!config.is_object()) fail_usage("config: expected a JSON object");
    if (command == "moments")
      cmd_moments(config, r);
    else if (command == "ct_verify")
      cmd_ct_verify(config, r);
    else if (command == "density")
      cmd_density(config, r);
    else if (command == "hist")
      cmd_hist(config, r);
    else if (command == "zeta")
      cmd_zeta(config, r);
    else if (command == "gauss")
      cmd_gauss(config, r);
    else if (command == "kloosterman")
      cmd_kloosterman(config, r);
    else if (command == "hk")
      cmd_hk(config, r);
    else if (command == "nmk")
      cmd_nmk(config, r);
    else if (command == "equidist")
      cmd_equidist(config, r);
    else if (command == "family")
      cmd_family(config, r);
    else
      fail_usage("unknown command \"" + command + "\"");
    r.exit_class = r.ok ? 0 : 1;
  } catch (const Error& e) {
    r.ok = false;
    r.exit_class = int(e.kind);
    r.payload["error"] =
        Json{{"kind", e.kind == ErrKind::check   ? "check"
                      : e.kind == ErrKind::usage ? "usage"
                                                 : "cap"},
             {"message", e.what()}};
  } catch (const Json::exception& e) {
    r.ok = false;
    r.exit_class = 2;
    r.payload["error"] = Json{{"kind", "usage"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    r.ok = false;
    r.exit_class = 1;
    r.payload["error"] = Json{{"kind", "check"}, {"message", e.what()}};
  }
  r.payload["ok"] = r.ok;
  r.payload["exit_class"] = r.exit_class;
  return r;
}

std::string report_text(const Report& r) { return r.payload.dump(2) + "\n"; }

}  // namespace g2rmt
