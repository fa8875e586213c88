#include "doctest.h"
#include "rootsys.hpp"

using namespace g2rmt;

TEST_CASE("g2 root system shape") {
  const RootSystem rs = build_g2();
  CHECK(rs.rank == 2);
  CHECK(rs.positive.size() == 6);
  CHECK(rs.roots.size() == 12);

  int n_short = 0, n_long = 0;
  for (const Root& r : rs.positive) (r.cls == RootClass::Short ? n_short : n_long)++;
  CHECK(n_short == 3);
  CHECK(n_long == 3);

  // long roots three times the length of short ones
  Rational s2, l2;
  for (const Root& r : rs.positive) {
    const Rational n = rs.norm2(r.coords);
    if (r.cls == RootClass::Short)
      s2 = n;
    else
      l2 = n;
  }
  CHECK(l2 == s2 * 3);

  // half-sum of positive roots
  CHECK(rs.delta == Weight{Rational(5), Rational(3)});
}

TEST_CASE("g2 weyl group") {
  const RootSystem rs = build_g2();
  const auto W = weyl_group(rs);
  CHECK(W.size() == 12);
  int det_sum = 0;
  for (const auto& w : W) det_sum += w.det;
  CHECK(det_sum == 0);

  // group closed under action on roots: each image of a root is a root
  for (const auto& w : W)
    for (const Root& r : rs.roots) {
      const Weight img = apply(w, r.coords);
      bool found = false;
      for (const Root& r2 : rs.roots) found = found || r2.coords == img;
      CHECK(found);
    }
}

TEST_CASE("integrality of root pairings") {
  const RootSystem rs = build_g2();
  for (const Root& a : rs.roots)
    for (const Root& b : rs.roots) {
      const Rational pairing = rs.inner(a.coords, b.coords) * 2 / rs.norm2(b.coords);
      CHECK(pairing.get_den() == 1);
    }
}

TEST_CASE("simple reflections move delta by one root") {
  const RootSystem rs = build_g2();
  for (std::size_t i = 0; i < rs.simple.size(); ++i) {
    const Weight& alpha = rs.positive[rs.simple[i]].coords;
    const Weight img = rs.reflect_simple(int(i), rs.delta);
    for (int k = 0; k < rs.rank; ++k) CHECK(img[k] == rs.delta[k] - alpha[k]);
  }
}

TEST_CASE("weyl dimension formula on g2") {
  const RootSystem rs = build_g2();
  CHECK(weyl_dimension(rs, g2_weight(0, 0)) == 1);
  CHECK(weyl_dimension(rs, g2_weight(1, 0)) == 7);
  CHECK(weyl_dimension(rs, g2_weight(0, 1)) == 14);
  CHECK(weyl_dimension(rs, g2_weight(2, 0)) == 27);
  CHECK(weyl_dimension(rs, g2_weight(1, 1)) == 64);
}

TEST_CASE("a1 root system") {
  const RootSystem rs = build_a1();
  CHECK(rs.rank == 1);
  CHECK(rs.roots.size() == 2);
  CHECK(weyl_group(rs).size() == 2);
  // fundamental weight is alpha/2; dim of the (k+1)-dimensional rep
  for (int k = 0; k <= 5; ++k)
    CHECK(weyl_dimension(rs, Weight{Rational(k, 2)}) == k + 1);
}

TEST_CASE("json loader validates") {
  // minimal valid A1 document
  const std::string good = R"({
    "name": "A1",
    "rank": 1,
    "positive_roots": [{"coords": [1], "class": "short"}],
    "gram": [[2]]
  })";
  const RootSystem rs = load_rootsystem_json(good);
  CHECK(rs.roots.size() == 2);

  // non-symmetric gram matrix must be rejected
  const std::string bad = R"({
    "name": "bad",
    "rank": 2,
    "positive_roots": [{"coords": [1, 0], "class": "short"},
                        {"coords": [0, 1], "class": "short"},
                        {"coords": [1, 1], "class": "short"}],
    "gram": [[2, 1], [0, 2]]
  })";
  CHECK_THROWS_AS(load_rootsystem_json(bad), Error);
}
