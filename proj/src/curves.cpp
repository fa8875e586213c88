// Point counts, exact zeta L-polynomials, Riemann hypothesis checks, and
// family statistics for hyperelliptic curves over odd-characteristic fields.

#include "curves.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <limits>

#include "ffield.hpp"
#include "moments.hpp"

namespace g2rmt {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// dense GF(p) polynomials, low-first coefficients in [0, p)
using Poly = std::vector<u64>;

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pderiv(const Poly& f, u64 p) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * (i % p) % p);
  ptrim(d);
  return d;
}

Poly pmod(Poly a, const Poly& b, u64 p) {
  const u64 lead_inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const u64 c = a.back() * lead_inv % p;
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const u64 s = c * b[i] % p;
      a[off + i] = (a[off + i] + p - s) % p;
    }
    ptrim(a);
    if (a.size() < b.size()) break;
  }
  return a;
}

Poly pgcd(Poly a, Poly b, u64 p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool squarefree_mod_p(const Poly& f, u64 p) {
  Poly d = pderiv(f, p);
  if (d.empty()) return f.size() <= 1;
  return pgcd(f, d, p).size() == 1;
}

struct QDecomp {
  u64 p;
  int r;
};

QDecomp decompose_q(u64 q) {
  if (q < 3) fail_usage("family: q must be an odd prime power >= 3");
  u64 p = q;
  for (u64 d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 2) fail_usage("family: odd characteristic required");
  int r = 0;
  u64 t = q;
  while (t % p == 0) {
    t /= p;
    ++r;
  }
  if (t != 1) fail_usage("family: q must be a prime power");
  return {p, r};
}

std::vector<u64> grid_values(u64 q, std::size_t grid) {
  std::vector<u64> v(grid);
  for (std::size_t i = 0; i < grid; ++i) v[i] = u64(i) * q / grid;
  return v;
}

// points at infinity of the smooth model of y^2 = f(x) over F
i64 infinity_points(const Field& F, const std::vector<u64>& f) {
  if (f.size() % 2 == 0) return 1;  // odd degree
  return F.chi2(f.back()) == 1 ? 2 : 0;
}

// functional-equation probes: T inside the critical disc, S = 1/(qT), and
// the rational weights making P(S) wS = P(T) wT an identity
struct FEProbes {
  std::array<cplx, 5> T, S, wT, wS;
};

FEProbes make_probes(int g, u64 q) {
  FEProbes pr;
  SplitMix64 rng(0x9e3779b97f4a7c15ULL * q + 0x6a09e667f3bcc909ULL * u64(g + 1));
  const double dq = double(q);
  const double rq = std::sqrt(dq);
  for (int k = 0; k < 5; ++k) {
    for (;;) {
      const double rad = (0.42 + 0.56 * rng.uniform()) / rq;
      const double th = 2.0 * PI * rng.uniform();
      const cplx T = std::polar(rad, th);
      const cplx S = 1.0 / (dq * T);
      if (std::abs(1.0 - T) < 0.05 || std::abs(1.0 - dq * T) < 0.05 ||
          std::abs(1.0 - S) < 0.05 || std::abs(1.0 - dq * S) < 0.05)
        continue;
      cplx tp = 1.0;
      for (int i = 0; i < 2 * g - 2; ++i) tp /= T;
      for (int i = 0; i < 2 - 2 * g; ++i) tp *= T;
      pr.T[k] = T;
      pr.S[k] = S;
      pr.wT[k] = std::pow(dq, 1 - g) * tp / ((1.0 - T) * (1.0 - dq * T));
      pr.wS[k] = 1.0 / ((1.0 - S) * (1.0 - dq * S));
      break;
    }
  }
  return pr;
}

cplx eval_real(const double* c, int n, cplx T) {
  cplx acc = c[n - 1];
  for (int i = n - 2; i >= 0; --i) acc = acc * T + c[i];
  return acc;
}

double fe_residual(const double* c, int n, const FEProbes& pr) {
  double worst = 0;
  for (int k = 0; k < 5; ++k) {
    const cplx A = eval_real(c, n, pr.S[k]) * pr.wS[k];
    const cplx B = eval_real(c, n, pr.T[k]) * pr.wT[k];
    const double den = std::abs(A) + std::abs(B);
    if (den > 0) worst = std::max(worst, std::abs(A - B) / den);
  }
  return worst;
}

// both inverse-root pairs on |alpha| = sqrt(q), as integer inequalities:
// the quadratic z^2 - sz + pr with s = -b1/sqrt(q), pr = b2/q - 2 must have
// real roots in [-2, 2]
bool rh_ok_g1(i64 b1, i64 q) { return b1 * b1 <= 4 * q; }

bool rh_ok_g2(i64 b1, i64 b2, i64 q) {
  const i64 disc = b1 * b1 - 4 * b2 + 8 * q;
  const i64 edge = 2 * q + b2;
  return disc >= 0 && b1 * b1 <= 16 * q && edge >= 0 && edge * edge >= 4 * q * b1 * b1;
}

std::string curve_tag(u64 q, u64 a, u64 b) {
  return "q=" + std::to_string(q) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
}

// full depressed-cubic family sweep; blocks over the (a, b) pair index space,
// per-block visit(acc, a, b, s1) on squarefree members with s1 = sum chi2(f(x))
template <class Acc, class Visit>
std::vector<Acc> g1_sweep(const Field& F, const Parallel& par, Visit&& visit) {
  const u64 q = F.q();
  const bool prime = F.r() == 1;
  std::vector<std::int8_t> c2(prime ? 2 * q : q);
  for (u64 x = 0; x < q; ++x) c2[x] = std::int8_t(F.chi2(x));
  if (prime)
    for (u64 x = 0; x < q; ++x) c2[q + x] = c2[x];
  std::vector<felem> x3(q), d27b2(q);
  const felem c27 = F.from_int(27);
  for (u64 x = 0; x < q; ++x) x3[x] = F.mul(F.mul(x, x), x);
  for (u64 b = 0; b < q; ++b) d27b2[b] = F.mul(c27, F.mul(b, b));
  const felem c4 = F.from_int(4);
  return block_map<Acc>(q * q, par, [&](std::size_t lo, std::size_t hi, Acc& acc) {
    std::vector<felem> v(q);
    u64 cur_a = q;
    felem d4a3 = 0;
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const u64 a = idx / q, b = idx % q;
      if (a != cur_a) {
        cur_a = a;
        for (u64 x = 0; x < q; ++x) v[x] = F.add(x3[x], F.mul(a, x));
        d4a3 = F.mul(c4, F.mul(F.mul(a, a), a));
      }
      if (F.add(d4a3, d27b2[b]) == 0) {
        ++acc.skipped;
        continue;
      }
      long long s1 = 0;
      if (prime) {
        const std::int8_t* t = c2.data() + b;
        for (u64 x = 0; x < q; ++x) s1 += t[v[x]];
      } else {
        for (u64 x = 0; x < q; ++x) s1 += c2[F.add(v[x], b)];
      }
      visit(acc, a, b, s1);
    }
  });
}

// trinomial slice y^2 = x^5 + ax + b on a grid; serial over curves, the
// GF(q^2) character sums run block-parallel; visit(a, b, s1, s2)
template <class Visit>
void g2_sweep(const Field& F, const Field& E, const std::vector<u64>& avals,
              const std::vector<u64>& bvals, const Parallel& par, std::size_t& skipped,
              Visit&& visit) {
  const u64 q = F.q(), Q = E.q(), p = F.p();
  const bool prime = F.r() == 1;
  std::vector<std::int8_t> c2(prime ? 2 * q : q);
  for (u64 x = 0; x < q; ++x) c2[x] = std::int8_t(F.chi2(x));
  if (prime)
    for (u64 x = 0; x < q; ++x) c2[q + x] = c2[x];
  std::vector<felem> x5(q);
  for (u64 x = 0; x < q; ++x) x5[x] = F.pow(x, 5);
  std::vector<std::int8_t> c2E(Q);
  std::vector<std::uint32_t> x5E(Q);
  block_map<char>(Q, par, [&](std::size_t lo, std::size_t hi, char&) {
    for (std::size_t x = lo; x < hi; ++x) {
      c2E[x] = std::int8_t(E.chi2(x));
      x5E[x] = std::uint32_t(E.pow(x, 5));
    }
  });
  const auto emb = embedding_map(F, E);
  const felem c256 = F.from_int(256), c3125 = F.from_int(3125);
  std::vector<felem> db(bvals.size());
  for (std::size_t j = 0; j < bvals.size(); ++j)
    db[j] = F.mul(c3125, F.pow(bvals[j], 4));
  std::vector<std::uint32_t> whi(prime ? Q : 0), wgen(prime ? 0 : Q);
  std::vector<std::uint16_t> wlo(prime ? Q : 0);
  std::vector<felem> v1(q);
  std::vector<std::uint32_t> offm(prime ? p : 0);
  for (u64 a : avals) {
    const felem aE = emb[a];
    for (u64 x = 0; x < q; ++x) v1[x] = F.add(x5[x], F.mul(a, x));
    block_map<char>(Q, par, [&](std::size_t lo, std::size_t hi, char&) {
      for (std::size_t x = lo; x < hi; ++x) {
        const felem w = E.add(x5E[x], E.mul(aE, x));
        if (prime) {
          wlo[x] = std::uint16_t(w % p);
          whi[x] = std::uint32_t(w - w % p);
        } else {
          wgen[x] = std::uint32_t(w);
        }
      }
    });
    const felem da = F.mul(c256, F.pow(a, 5));
    for (std::size_t j = 0; j < bvals.size(); ++j) {
      const u64 b = bvals[j];
      if (F.add(da, db[j]) == 0) {
        ++skipped;
        continue;
      }
      long long s1 = 0;
      if (prime) {
        const std::int8_t* t = c2.data() + b;
        for (u64 x = 0; x < q; ++x) s1 += t[v1[x]];
      } else {
        for (u64 x = 0; x < q; ++x) s1 += c2[F.add(v1[x], b)];
      }
      long long s2 = 0;
      if (prime) {
        for (u64 l = 0; l < p; ++l) offm[l] = std::uint32_t(l + b >= p ? l + b - p : l + b);
        auto blocks = block_map<long long>(Q, par, [&](std::size_t lo, std::size_t hi, long long& acc) {
          for (std::size_t x = lo; x < hi; ++x) acc += c2E[whi[x] + offm[wlo[x]]];
        });
        for (long long t : blocks) s2 += t;
      } else {
        const felem bE = emb[b];
        auto blocks = block_map<long long>(Q, par, [&](std::size_t lo, std::size_t hi, long long& acc) {
          for (std::size_t x = lo; x < hi; ++x) acc += c2E[E.add(wgen[x], bE)];
        });
        for (long long t : blocks) s2 += t;
      }
      visit(a, b, s1, s2);
    }
  }
}

std::vector<u64> g2_grid(u64 q) {
  if (q <= 128) return grid_values(q, std::size_t(q));
  return grid_values(q, q <= 512 ? 32 : 24);
}

}  // namespace

CurveSpec projective_line(u64 p) {
  if (!is_prime(p)) fail_usage("curve: p must be prime");
  CurveSpec c;
  c.kind = CurveKind::projective_line;
  c.p = p;
  c.genus = 0;
  return c;
}

CurveSpec hyperelliptic_curve(u64 p, std::vector<u64> f) {
  if (!is_prime(p) || p == 2) fail_usage("curve: p must be an odd prime");
  if (p >= (u64(1) << 31)) fail_cap("curve: base prime capped at 2^31");
  for (auto& c : f) c %= p;
  ptrim(f);
  if (f.size() < 4) fail_usage("curve: need deg f >= 3");
  if (!squarefree_mod_p(f, p)) fail_usage("curve: f must be squarefree");
  CurveSpec c;
  c.kind = CurveKind::hyperelliptic;
  c.p = p;
  c.f = std::move(f);
  const int d = int(c.f.size()) - 1;
  c.genus = (d % 2 ? d - 1 : d - 2) / 2;
  return c;
}

CurveSpec parse_curve(const std::string& text, u64 p) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(std::tolower(static_cast<unsigned char>(ch)));
  if (s == "p1") return projective_line(p);
  if (s.rfind("y^2=", 0) == 0)
    s = s.substr(4);
  else if (s.rfind("y2=", 0) == 0)
    s = s.substr(3);
  else
    fail_usage("curve: expected \"p1\" or \"y^2 = f(x)\"");
  if (p == 0 || !is_prime(p)) fail_usage("curve: p must be prime");
  std::vector<u64> coeffs;
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    u64 sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = p - 1;
      ++i;
    } else if (any) {
      fail_usage("curve: cannot parse polynomial");
    }
    u64 coef = 1;
    bool saw_digits = false;
    u64 digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = digits * 10 % p + u64(s[i] - '0');
      digits %= p;
      saw_digits = true;
      ++i;
    }
    if (saw_digits) coef = digits;
    u64 exp = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') ++i;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        exp = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          exp = exp * 10 + u64(s[i] - '0');
          if (exp > 64) fail_usage("curve: exponent too large");
          ++i;
        }
      }
    } else if (!saw_digits) {
      fail_usage("curve: cannot parse polynomial");
    }
    if (coeffs.size() < exp + 1) coeffs.resize(exp + 1, 0);
    coeffs[exp] = (coeffs[exp] + sign * coef) % p;
    any = true;
  }
  if (!any) fail_usage("curve: empty polynomial");
  return hyperelliptic_curve(p, coeffs);
}

i64 count_points(const CurveSpec& c, int m) {
  if (m < 1 || m > 62) fail_usage("count: extension degree out of range");
  if (c.kind == CurveKind::projective_line) {
    i64 qm = 1;
    for (int i = 0; i < m; ++i) {
      if (qm > (std::numeric_limits<i64>::max() - 1) / i64(c.p))
        fail_cap("count: q^m overflows");
      qm *= i64(c.p);
    }
    return qm + 1;
  }
  u64 qm = 1;
  for (int i = 0; i < m; ++i) {
    qm *= c.p;
    if (qm > FIELD_TABLE_CAP) fail_cap("count: field capped at 2^26 elements");
  }
  const Field F(c.p, m);
  const int d = int(c.f.size()) - 1;
  auto blocks = block_map<long long>(F.q(), Parallel{}, [&](std::size_t lo, std::size_t hi, long long& acc) {
    for (u64 x = lo; x < hi; ++x) {
      felem y = c.f[d];
      for (int i = d - 1; i >= 0; --i) y = F.add(F.mul(y, x), c.f[i]);
      acc += 1 + F.chi2(y);
    }
  });
  i64 n = infinity_points(F, c.f);
  for (long long t : blocks) n += t;
  return n;
}

i64 count_points_naive(const CurveSpec& c, int m) {
  if (c.kind == CurveKind::projective_line) return count_points(c, m);
  if (m < 1) fail_usage("count: extension degree out of range");
  u64 qm = 1;
  for (int i = 0; i < m; ++i) {
    qm *= c.p;
    if (qm > (u64(1) << 21)) fail_cap("count: naive count capped at 2^21 elements");
  }
  const Field F(c.p, m);
  std::vector<std::uint32_t> nsq(F.q(), 0);
  for (u64 y = 0; y < F.q(); ++y) ++nsq[F.mul(y, y)];
  const int d = int(c.f.size()) - 1;
  i64 n = infinity_points(F, c.f);
  for (u64 x = 0; x < F.q(); ++x) {
    felem y = c.f[d];
    for (int i = d - 1; i >= 0; --i) y = F.add(F.mul(y, x), c.f[i]);
    n += nsq[y];
  }
  return n;
}

ZetaData zeta_from_counts(int g, u64 q, const std::vector<i64>& counts) {
  if (g < 0 || g > 16) fail_usage("zeta: genus out of range");
  if (int(counts.size()) < g) fail_usage("zeta: need point counts N_1..N_g");
  ZetaData z;
  z.q = q;
  z.genus = g;
  z.counts.assign(counts.begin(), counts.begin() + g);
  const Integer qi = Integer(static_cast<unsigned long>(q));
  std::vector<Rational> ps(g);
  Integer qm = 1;
  for (int m = 1; m <= g; ++m) {
    qm *= qi;
    ps[m - 1] = Rational(qm + 1 - counts[m - 1]);
  }
  const auto e = elementary_from_power_sums(ps);
  z.b.assign(2 * g + 1, Integer(0));
  z.b[0] = 1;
  for (int k = 1; k <= g; ++k) {
    Rational bk = (k % 2) ? Rational(-e[k - 1]) : e[k - 1];
    bk.canonicalize();
    if (bk.get_den() != 1)
      fail_check("zeta: coefficient b_" + std::to_string(k) + " is not an integer");
    z.b[k] = bk.get_num();
  }
  Integer qp = 1;
  for (int i = g - 1; i >= 0; --i) {
    qp *= qi;
    z.b[2 * g - i] = qp * z.b[i];
  }
  if (g == 1 && z.b[1] * z.b[1] > 4 * qi)
    fail_check("zeta: Riemann hypothesis violated (b1^2 > 4q)");
  if (g == 2) {
    const Integer &b1 = z.b[1], &b2 = z.b[2];
    const Integer disc = b1 * b1 - 4 * b2 + 8 * qi;
    const Integer edge = 2 * qi + b2;
    if (disc < 0 || b1 * b1 > 16 * qi || edge < 0 || edge * edge < 4 * qi * b1 * b1)
      fail_check("zeta: Riemann hypothesis violated");
  }
  z.P.coeffs.resize(2 * g + 1);
  for (int i = 0; i <= 2 * g; ++i) z.P.coeffs[i] = z.b[i].get_d();
  z.P.q = double(q);
  z.P.weight = 1;
  z.rh_deviation = g > 0 ? unitarity_deviation(z.P) : 0.0;
  if (z.rh_deviation > 1e-6)
    fail_check("zeta: inverse roots leave the |alpha| = sqrt(q) circle");
  const FEProbes pr = make_probes(g, q);
  std::vector<double> cd(2 * g + 1);
  for (int i = 0; i <= 2 * g; ++i) cd[i] = z.b[i].get_d();
  z.fe_deviation = fe_residual(cd.data(), int(cd.size()), pr);
  if (z.fe_deviation > 1e-8) fail_check("zeta: functional equation residual too large");
  return z;
}

ZetaData curve_zeta(const CurveSpec& c) {
  std::vector<i64> counts;
  for (int m = 1; m <= c.genus; ++m) counts.push_back(count_points(c, m));
  return zeta_from_counts(c.genus, c.p, counts);
}

i64 predicted_count(const ZetaData& z, int m) {
  if (m < 1 || m > 62) fail_usage("zeta: extension degree out of range");
  Integer qm = 1;
  const Integer qi = Integer(static_cast<unsigned long>(z.q));
  for (int i = 0; i < m; ++i) qm *= qi;
  Rational n = Rational(qm + 1);
  if (z.genus > 0) {
    std::vector<Rational> e(2 * z.genus);
    for (int k = 1; k <= 2 * z.genus; ++k)
      e[k - 1] = (k % 2) ? Rational(-z.b[k]) : Rational(z.b[k]);
    const auto ps = power_sums_from_elementary(e, m);
    n -= ps[m - 1];
  }
  n.canonicalize();
  if (n.get_den() != 1) fail_check("zeta: predicted count is not an integer");
  if (!n.get_num().fits_slong_p()) fail_cap("zeta: predicted count overflows");
  return i64(n.get_num().get_si());
}

FamilyScan family_scan(int g, u64 q, const Parallel& par, std::size_t sample_cap) {
  const QDecomp d = decompose_q(q);
  FamilyScan out;
  out.g = g;
  out.q = q;
  const double dq = double(q);
  const double rq = std::sqrt(dq);
  if (g == 1) {
    if (q > 4096) fail_cap("family: genus-1 scan capped at q <= 4096");
    const Field F(d.p, d.r);
    const FEProbes pr = make_probes(1, q);
    out.grid = std::size_t(q);
    struct Acc {
      std::size_t n = 0, skipped = 0;
      double max_fe = 0, max_rh = 0, max_na1 = 0;
      std::vector<std::vector<i64>> rows;
    };
    auto blocks = g1_sweep<Acc>(F, par, [&](Acc& acc, u64 a, u64 b, long long s1) {
      ++acc.n;
      const i64 b1 = s1;
      if (!rh_ok_g1(b1, i64(q)))
        fail_check("family: Riemann hypothesis violated at " + curve_tag(q, a, b));
      const double re = -double(b1) / (2.0 * dq);
      const double im = std::sqrt(std::max(0.0, 4.0 * dq - double(b1) * double(b1))) / (2.0 * dq);
      acc.max_rh = std::max(acc.max_rh, std::abs(std::hypot(re, im) * rq - 1.0));
      const double cs[3] = {1.0, double(b1), dq};
      const double fe = fe_residual(cs, 3, pr);
      if (fe > 1e-8)
        fail_check("family: functional equation residual too large at " + curve_tag(q, a, b));
      acc.max_fe = std::max(acc.max_fe, fe);
      acc.max_na1 = std::max(acc.max_na1, std::abs(double(b1)) / (2.0 * rq));
      if (acc.rows.size() < sample_cap) acc.rows.push_back({i64(a), i64(b), b1});
    });
    for (const auto& acc : blocks) {
      out.family_size += acc.n;
      out.skipped += acc.skipped;
      out.max_fe_residual = std::max(out.max_fe_residual, acc.max_fe);
      out.max_rh_deviation = std::max(out.max_rh_deviation, acc.max_rh);
      out.max_norm_a1 = std::max(out.max_norm_a1, acc.max_na1);
      for (const auto& row : acc.rows)
        if (out.samples.size() < sample_cap) out.samples.push_back(row);
    }
    return out;
  }
  if (g != 2) fail_usage("family: scans support genus 1 and 2");
  if (q > 2048) fail_cap("family: genus-2 scan capped at q <= 2048");
  const Field F(d.p, d.r);
  const Field E(d.p, 2 * d.r);
  const auto vals = g2_grid(q);
  out.grid = vals.size();
  const FEProbes pr = make_probes(2, q);
  g2_sweep(F, E, vals, vals, par, out.skipped, [&](u64 a, u64 b, long long s1, long long s2) {
    ++out.family_size;
    const i64 a1 = s1, a2 = s2;
    const i64 two = a1 * a1 + a2;
    if (((two % 2) + 2) % 2 != 0)
      fail_check("family: non-integral L-coefficient at " + curve_tag(q, a, b));
    const i64 b1 = a1, b2 = two / 2;
    if (a1 * a1 > 16 * i64(q))
      fail_check("family: Hasse-Weil bound violated at " + curve_tag(q, a, b));
    if (!rh_ok_g2(b1, b2, i64(q)))
      fail_check("family: Riemann hypothesis violated at " + curve_tag(q, a, b));
    LPolynomial P;
    P.coeffs = {1.0, double(b1), double(b2), dq * double(b1), dq * dq};
    P.q = dq;
    P.weight = 1;
    const double rh = unitarity_deviation(P);
    if (rh > 1e-6)
      fail_check("family: inverse roots leave the critical circle at " + curve_tag(q, a, b));
    out.max_rh_deviation = std::max(out.max_rh_deviation, rh);
    const double cs[5] = {1.0, double(b1), double(b2), dq * double(b1), dq * dq};
    const double fe = fe_residual(cs, 5, pr);
    if (fe > 1e-8)
      fail_check("family: functional equation residual too large at " + curve_tag(q, a, b));
    out.max_fe_residual = std::max(out.max_fe_residual, fe);
    out.max_norm_a1 = std::max(out.max_norm_a1, std::abs(double(a1)) / (4.0 * rq));
    if (out.samples.size() < sample_cap) out.samples.push_back({i64(a), i64(b), a1, b2});
  });
  return out;
}

FamilyMoment family_moment(int g, u64 q, double s, const Parallel& par) {
  if (s < 0) fail_usage("family: moment order must be nonnegative");
  if (g < 1 || g > 3) fail_usage("family: moments support genus 1, 2, 3");
  const QDecomp d = decompose_q(q);
  FamilyMoment out;
  out.g = g;
  out.q = q;
  out.s = s;
  const double dq = double(q);
  const double rq = std::sqrt(dq);
  Kahan total;
  std::size_t n = 0;
  if (g == 1) {
    if (q > 4096) fail_cap("family: genus-1 moments capped at q <= 4096");
    const Field F(d.p, d.r);
    struct Acc {
      std::size_t n = 0, skipped = 0;
      Kahan k;
    };
    auto blocks = g1_sweep<Acc>(F, par, [&](Acc& acc, u64, u64, long long s1) {
      ++acc.n;
      const double det = std::max(0.0, 2.0 + double(s1) / rq);
      acc.k.add(std::pow(det, s));
    });
    for (const auto& acc : blocks) {
      n += acc.n;
      total.add(acc.k.value());
    }
  } else if (g == 2) {
    if (q > 2048) fail_cap("family: genus-2 moments capped at q <= 2048");
    const Field F(d.p, d.r);
    const Field E(d.p, 2 * d.r);
    const auto vals = g2_grid(q);
    std::size_t skipped = 0;
    g2_sweep(F, E, vals, vals, par, skipped, [&](u64 a, u64 b, long long s1, long long s2) {
      const i64 two = i64(s1) * s1 + s2;
      if (((two % 2) + 2) % 2 != 0)
        fail_check("family: non-integral L-coefficient at " + curve_tag(q, a, b));
      const double b1 = double(s1), b2 = double(two / 2);
      const double det = std::max(0.0, 2.0 + 2.0 * b1 / rq + b2 / dq);
      total.add(std::pow(det, s));
      ++n;
    });
  } else {
    if (q > 64) fail_cap("family: genus-3 moments capped at q <= 64");
    const Field F(d.p, d.r);
    const Field E2(d.p, 2 * d.r);
    const Field E3(d.p, 3 * d.r);
    const auto vals = grid_values(q, std::size_t(std::min<u64>(q, 8)));
    const auto emb2 = embedding_map(F, E2);
    const auto emb3 = embedding_map(F, E3);
    std::vector<felem> x7a(F.q()), x7b(E2.q()), x7c(E3.q());
    for (u64 x = 0; x < F.q(); ++x) x7a[x] = F.pow(x, 7);
    for (u64 x = 0; x < E2.q(); ++x) x7b[x] = E2.pow(x, 7);
    for (u64 x = 0; x < E3.q(); ++x) x7c[x] = E3.pow(x, 7);
    const felem c77 = F.from_int(823543), c66 = F.from_int(46656);
    auto char_sum = [&](const Field& K, const std::vector<felem>& x7, felem aK, felem bK) {
      auto blocks = block_map<long long>(K.q(), par, [&](std::size_t lo, std::size_t hi, long long& acc) {
        for (u64 x = lo; x < hi; ++x)
          acc += K.chi2(K.add(x7[x], K.add(K.mul(aK, x), bK)));
      });
      long long t = 0;
      for (long long v : blocks) t += v;
      return t;
    };
    for (u64 a : vals)
      for (u64 b : vals) {
        if (F.add(F.mul(c77, F.pow(b, 6)), F.mul(c66, F.pow(a, 7))) == 0) continue;
        const long long s1 = char_sum(F, x7a, a, b);
        const long long s2 = char_sum(E2, x7b, emb2[a], emb2[b]);
        const long long s3 = char_sum(E3, x7c, emb3[a], emb3[b]);
        const std::vector<Rational> ps = {Rational(long(-s1)), Rational(long(-s2)),
                                          Rational(long(-s3))};
        auto e = elementary_from_power_sums(ps);
        for (auto& ek : e) {
          ek.canonicalize();
          if (ek.get_den() != 1)
            fail_check("family: non-integral L-coefficient at " + curve_tag(q, a, b));
        }
        const double b1 = -e[0].get_d(), b2 = e[1].get_d(), b3 = -e[2].get_d();
        const double det = std::max(0.0, 2.0 + 2.0 * b1 / rq + 2.0 * b2 / dq + b3 / (dq * rq));
        total.add(std::pow(det, s));
        ++n;
      }
  }
  if (n == 0) fail_check("family: no squarefree members");
  out.family_size = n;
  out.empirical = total.value() / double(n);
  out.rmt_value = moment_usp(unsigned(g), cplx(s, 0.0)).real();
  out.deviation = std::abs(out.empirical - out.rmt_value);
  out.sqrt_q_scale = out.deviation * rq;
  return out;
}

}  // namespace g2rmt
