#include <cstdint>

#include "doctest.h"
#include "ffield.hpp"

using namespace g2rmt;

TEST_CASE("prime field arithmetic") {
  const Field f(7, 1);
  CHECK(f.q() == 7);
  for (felem a = 1; a < 7; ++a) {
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.add(a, f.neg(a)) == 0);
  }
  CHECK(f.pow(3, 6) == 1);  // Fermat
  CHECK(f.from_int(23) == 2);

  // quadratic character: squares mod 7 are {1, 2, 4}
  CHECK(f.chi2(0) == 0);
  CHECK(f.chi2(1) == 1);
  CHECK(f.chi2(2) == 1);
  CHECK(f.chi2(3) == -1);
  CHECK(f.chi2(4) == 1);
  CHECK(f.chi2(5) == -1);
  CHECK(f.chi2(6) == -1);
  // multiplicativity
  for (felem a = 1; a < 7; ++a)
    for (felem b = 1; b < 7; ++b) CHECK(f.chi2(f.mul(a, b)) == f.chi2(a) * f.chi2(b));
}

TEST_CASE("character sums vanish") {
  const Field f(11, 1);
  cplx s = 0;
  for (felem a = 0; a < 11; ++a) s += f.psi(a);
  CHECK(std::abs(s) < 1e-12);

  const MultiplicativeCharacter chi(f, 3);
  cplx t = 0;
  for (felem a = 1; a < 11; ++a) t += chi(a);
  CHECK(std::abs(t) < 1e-12);
}

TEST_CASE("extension field structure") {
  const Field f(3, 2);
  CHECK(f.q() == 9);
  // generator has full multiplicative order
  const felem g = f.generator();
  felem acc = 1;
  int order = 0;
  do {
    acc = f.mul(acc, g);
    ++order;
  } while (acc != 1);
  CHECK(order == 8);

  // dlog inverts exp
  for (std::uint64_t k = 0; k < 8; ++k) CHECK(f.dlog(f.exp(k)) == k);

  // absolute trace and norm land in the prime field and are onto
  bool trace_hits[3] = {false, false, false};
  for (felem a = 0; a < 9; ++a) trace_hits[f.trace(a)] = true;
  CHECK((trace_hits[0] && trace_hits[1] && trace_hits[2]));
  // norm is multiplicative
  const Field base(3, 1);
  for (felem a = 1; a < 9; ++a)
    for (felem b = 1; b < 9; ++b)
      CHECK(f.norm(f.mul(a, b)) == base.mul(f.norm(a), f.norm(b)));
}

TEST_CASE("quadratic character factors through the norm") {
  const Field base(7, 1);
  const Field ext(7, 2);
  for (felem x = 1; x < ext.q(); ++x) CHECK(ext.chi2(x) == base.chi2(ext.norm(x)));
}

TEST_CASE("characteristic two") {
  const Field f(2, 2);
  CHECK(f.q() == 4);
  cplx s = 0;
  for (felem a = 0; a < 4; ++a) s += f.psi(a);
  CHECK(std::abs(s) < 1e-12);
  CHECK_THROWS_AS(f.chi2(1), Error);
}

TEST_CASE("irreducibles") {
  CHECK(is_prime_u64(9973));
  CHECK(!is_prime_u64(9975));
  CHECK(is_prime_u64(2));
  CHECK(!is_prime_u64(1));

  // x^2 + 1: reducible mod 5, irreducible mod 7
  CHECK(!poly_is_irreducible(5, {1, 0, 1}));
  CHECK(poly_is_irreducible(7, {1, 0, 1}));

  // lex-smallest irreducible cubic over GF(2) is x^3 + x + 1
  CHECK(find_irreducible(2, 3) == std::vector<std::uint32_t>{1, 1, 0, 1});
  const auto* bundled = bundled_modulus(2, 3);
  REQUIRE(bundled != nullptr);
  CHECK(*bundled == find_irreducible(2, 3));
}

TEST_CASE("embeddings respect relative maps") {
  const Field base(2, 2);
  const Field ext(2, 4);
  const auto emb = embedding_map(base, ext);
  REQUIRE(emb.size() == 4);
  CHECK(emb[0] == 0);
  CHECK(emb[1] == 1);
  // embedding is a ring homomorphism
  for (felem a = 0; a < 4; ++a)
    for (felem b = 0; b < 4; ++b) {
      CHECK(emb[base.add(a, b)] == ext.add(emb[a], emb[b]));
      CHECK(emb[base.mul(a, b)] == ext.mul(emb[a], emb[b]));
    }
  // relative trace to the quadratic subfield lands in the embedded image
  for (felem x = 0; x < 16; ++x) {
    const felem t = ext.rel_trace(x, 2);
    bool in_image = false;
    for (felem a = 0; a < 4; ++a) in_image = in_image || emb[a] == t;
    CHECK(in_image);
  }
}
