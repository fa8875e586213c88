#include "laurent.hpp"

namespace g2rmt {

LaurentPoly LaurentPoly::constant(int rank, const Rational& c) {
  LaurentPoly p;
  p.rank = rank;
  if (c != 0) p.terms[std::vector<int>(rank, 0)] = c;
  return p;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank != b.rank) fail_usage("laurent: rank mismatch in add");
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms) {
    auto [it, fresh] = out.terms.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank != b.rank) fail_usage("laurent: rank mismatch in sub");
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms) {
    auto [it, fresh] = out.terms.try_emplace(e, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b, std::size_t term_cap) {
  if (a.rank != b.rank) fail_usage("laurent: rank mismatch in mul");
  LaurentPoly out;
  out.rank = a.rank;
  std::vector<int> e(a.rank);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      for (int i = 0; i < a.rank; ++i) e[i] = ea[i] + eb[i];
      auto [it, fresh] = out.terms.try_emplace(e, Rational(0));
      if (fresh && out.terms.size() > term_cap)
        fail_cap("laurent: term count cap exceeded (" + std::to_string(term_cap) + ")");
      it->second += ca * cb;
      if (it->second == 0) out.terms.erase(it);
    }
  return out;
}

LaurentPoly root_factor_pow(int rank, const std::vector<int>& alpha, unsigned k) {
  LaurentPoly p;
  p.rank = rank;
  Integer binom = 1;
  for (unsigned j = 0; j <= k; ++j) {
    if (j > 0) binom = binom * (k - j + 1) / j;  // exact at every step
    std::vector<int> e(rank);
    for (int i = 0; i < rank; ++i) e[i] = alpha[i] * (int)j;
    Rational c(binom);
    if (j & 1u) c = -c;
    if (c != 0) p.terms[e] += c;
  }
  return p;
}

Rational constant_term(const LaurentPoly& p) {
  auto it = p.terms.find(std::vector<int>(p.rank, 0));
  return it == p.terms.end() ? Rational(0) : it->second;
}

Rational ct_product(const RootSystem& rs, unsigned k_short, unsigned k_long,
                    std::size_t term_cap) {
  LaurentPoly acc = LaurentPoly::one(rs.rank);
  for (const Root& r : rs.roots) {
    unsigned k = r.cls == RootClass::Short ? k_short : k_long;
    if (k == 0) continue;
    std::vector<int> alpha(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
      if (r.coords[i].get_den() != 1)
        fail_usage("laurent: root coordinates must be integral for ct_product");
      alpha[i] = (int)r.coords[i].get_num().get_si();
    }
    acc = lp_mul(acc, root_factor_pow(rs.rank, alpha, k), term_cap);
  }
  return constant_term(acc) / Rational((unsigned long)weyl_group(rs).size());
}

}  // namespace g2rmt
