#pragma once
// GF(p) and GF(p^r) with dense exp/dlog tables, trace and norm maps, and
// additive/multiplicative characters. Elements are encoded as mixed-radix
// integers in [0, p^r): the value sum_i c_i p^i stands for the polynomial
// sum_i c_i x^i, coefficients in [0, p). Tables require q <= 2^26; larger
// fields must be constructed with no_table=true and lose dlog-based ops.

#include <cstdint>
#include <vector>

#include "util.hpp"

namespace g2rmt {

using felem = std::uint64_t;

inline constexpr std::uint64_t FIELD_TABLE_CAP = std::uint64_t(1) << 26;

bool is_prime_u64(std::uint64_t n);

// monic polynomial over GF(p), coefficients low degree first, size = deg+1
bool poly_is_irreducible(std::uint64_t p, const std::vector<std::uint32_t>& f);

// lex-smallest monic irreducible of degree r (ordering: the low-first
// coefficient vector read as a base-p integer)
std::vector<std::uint32_t> find_irreducible(std::uint64_t p, int r);

// pinned copy of find_irreducible's result for p in {2,3,5,7}, r <= 12;
// nullptr outside that range
const std::vector<std::uint32_t>* bundled_modulus(std::uint64_t p, int r);

class Field {
 public:
  Field(std::uint64_t p, int r);
  Field(std::uint64_t p, int r, std::vector<std::uint32_t> modulus, bool no_table = false);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;
  Field(Field&&) = default;
  Field& operator=(Field&&) = default;

  std::uint64_t p() const { return p_; }
  int r() const { return r_; }
  std::uint64_t q() const { return q_; }
  bool has_tables() const { return tables_; }
  const std::vector<std::uint32_t>& modulus() const { return mod_; }

  felem zero() const { return 0; }
  felem one() const { return 1; }
  felem x() const { return r_ > 1 ? p_ : 0; }  // class of x (== 0 when r == 1)
  felem generator() const;
  felem from_int(std::uint64_t n) const { return n % p_; }

  felem add(felem a, felem b) const;
  felem sub(felem a, felem b) const;
  felem neg(felem a) const;
  felem mul(felem a, felem b) const;
  felem inv(felem a) const;
  felem pow(felem a, std::uint64_t e) const;

  std::uint64_t dlog(felem a) const;        // a != 0, tables required
  felem exp(std::uint64_t k) const;         // generator^k, any k
  const std::vector<std::uint32_t>& exp_table() const;

  // relative trace/norm to the subfield GF(p^(r/m)) over which this field
  // has degree m (m | r); the result is checked to lie in that subfield
  felem rel_trace(felem a, int m) const;
  felem rel_norm(felem a, int m) const;
  // absolute maps to the prime field, returned as residues in [0, p)
  std::uint64_t trace(felem a) const;
  std::uint64_t norm(felem a) const;

  cplx psi(felem a) const { return psi_scaled(1, a); }
  cplx psi_scaled(std::uint64_t c, felem a) const;  // e(c Tr(a)/p)
  cplx chi(std::uint64_t j, felem a) const;         // e(j dlog(a)/(q-1)), 0 at a=0
  int chi2(felem a) const;                          // quadratic character, p odd

 private:
  std::uint64_t p_ = 0;
  int r_ = 0;
  std::uint64_t q_ = 0;
  bool tables_ = false;
  std::vector<std::uint32_t> mod_;
  std::vector<std::uint64_t> pow_p_;  // p^i, i = 0..r
  felem gen_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> dlog_;
  std::vector<std::uint32_t> tr_basis_;  // absolute trace of x^i
  std::vector<cplx> psi_tab_;            // e(k/p), size p, built when p <= 2^20

  void init(std::vector<std::uint32_t> modulus, bool no_table);
  felem mul_poly(felem a, felem b) const;
  felem pow_poly(felem a, std::uint64_t e) const;
  felem frobenius(felem a, int i) const;  // a^(p^i)
};

struct AdditiveCharacter {
  const Field* field;
  std::uint64_t a;  // nonzero scale in the prime field
  AdditiveCharacter(const Field& f, std::uint64_t scale) : field(&f), a(scale % f.p()) {
    if (a == 0) fail_usage("additive character: scale must be nonzero");
  }
  cplx operator()(felem x) const { return field->psi_scaled(a, x); }
};

struct MultiplicativeCharacter {
  const Field* field;
  std::uint64_t j;  // exponent mod q-1; 0 is the principal character
  MultiplicativeCharacter(const Field& f, std::uint64_t jj) : field(&f), j(jj % (f.q() - 1)) {}
  bool principal() const { return j == 0; }
  bool quadratic() const { return field->p() != 2 && j == (field->q() - 1) / 2; }
  cplx operator()(felem x) const { return field->chi(j, x); }
};

// image of every base element under the embedding sending base's x-class to
// the smallest root of base.modulus() in ext; requires same p and
// base.r() | ext.r()
std::vector<felem> embedding_map(const Field& base, const Field& ext);

}  // namespace g2rmt
