#include <cmath>

#include "curves.hpp"
#include "doctest.h"
#include "moments.hpp"

using namespace g2rmt;

namespace {
const Parallel par1{};
}

TEST_CASE("curve parsing") {
  const CurveSpec c1 = parse_curve("y2=x3+x", 5);
  CHECK(c1.kind == CurveKind::hyperelliptic);
  CHECK(c1.genus == 1);
  CHECK(c1.f == std::vector<std::uint64_t>{0, 1, 0, 1});

  const CurveSpec c2 = parse_curve(" y^2 = x^5 + 2x + 1 ", 11);
  CHECK(c2.genus == 2);
  CHECK(c2.f == std::vector<std::uint64_t>{1, 2, 0, 0, 0, 1});

  const CurveSpec c3 = parse_curve("p1", 13);
  CHECK(c3.kind == CurveKind::projective_line);
  CHECK(c3.genus == 0);

  // coefficients and signs reduce mod p
  const CurveSpec c4 = parse_curve("y2=x3-x+12", 7);
  CHECK(c4.f == std::vector<std::uint64_t>{5, 6, 0, 1});

  CHECK_THROWS_AS(parse_curve("y2=x2+1", 5), Error);    // degree too low
  CHECK_THROWS_AS(parse_curve("y2=x3", 5), Error);      // not squarefree
  CHECK_THROWS_AS(parse_curve("y2=x3+z", 5), Error);    // stray symbol
  CHECK_THROWS_AS(parse_curve("y2=x3+x", 4), Error);    // composite p
  CHECK_THROWS_AS(parse_curve("y2=x3+x", 2), Error);    // even characteristic
}

TEST_CASE("point counts cross-check") {
  const CurveSpec c = parse_curve("y2=x3+x", 5);
  CHECK(count_points(c, 1) == 4);
  CHECK(count_points_naive(c, 1) == 4);
  for (int m = 1; m <= 4; ++m) CHECK(count_points(c, m) == count_points_naive(c, m));

  const CurveSpec c7 = parse_curve("y2=x3+1", 7);
  CHECK(count_points(c7, 1) == 12);

  const CurveSpec g2c = parse_curve("y2=x5+x+1", 11);
  for (int m = 1; m <= 3; ++m) CHECK(count_points(g2c, m) == count_points_naive(g2c, m));

  const CurveSpec line = projective_line(5);
  CHECK(count_points(line, 1) == 6);
  CHECK(count_points(line, 2) == 26);
  CHECK(count_points(line, 3) == 126);
}

TEST_CASE("zeta of an elliptic curve") {
  const CurveSpec c = parse_curve("y2=x3+x", 5);
  const ZetaData z = curve_zeta(c);
  CHECK(z.genus == 1);
  REQUIRE(z.b.size() == 3);
  CHECK(z.b[0] == 1);
  CHECK(z.b[1] == -2);
  CHECK(z.b[2] == 5);
  CHECK(z.rh_deviation < 1e-9);
  CHECK(z.fe_deviation < 1e-12);
  // implied higher counts match the brute force
  for (int m = 2; m <= 5; ++m) CHECK(predicted_count(z, m) == count_points(c, m));
}

TEST_CASE("zeta of a genus-2 curve is overdetermined") {
  const CurveSpec c = parse_curve("y2=x5+x", 7);
  const ZetaData z = curve_zeta(c);
  CHECK(z.genus == 2);
  REQUIRE(z.b.size() == 5);
  CHECK(z.b[0] == 1);
  // functional equation ties the top coefficients to the bottom ones
  CHECK(z.b[3] == z.b[1] * 7);
  CHECK(z.b[4] == 49);
  // only N_1, N_2 entered; N_3, N_4 are genuine predictions
  CHECK(predicted_count(z, 3) == count_points_naive(c, 3));
  CHECK(predicted_count(z, 4) == count_points_naive(c, 4));
}

TEST_CASE("zeta of the projective line") {
  const ZetaData z = curve_zeta(projective_line(13));
  CHECK(z.genus == 0);
  REQUIRE(z.b.size() == 1);
  CHECK(z.b[0] == 1);
  CHECK(predicted_count(z, 2) == 170);
}

TEST_CASE("impossible counts are rejected") {
  // genus 1 over GF(5): N_1 = 12 violates the Hasse bound
  CHECK_THROWS_AS(zeta_from_counts(1, 5, {12}), Error);
  // genus 2 over GF(5): parity obstruction to integer coefficients
  CHECK_THROWS_AS(zeta_from_counts(2, 5, {6, 27}), Error);
}

TEST_CASE("family scan at a small prime") {
  const FamilyScan scan = family_scan(1, 13, par1, 5);
  CHECK(scan.g == 1);
  CHECK(scan.grid == 13);
  CHECK(scan.family_size + scan.skipped == 169);
  CHECK(scan.family_size >= 169 - 3 * 13);
  CHECK(scan.rh_violations == 0);
  CHECK(scan.fe_violations == 0);
  CHECK(scan.hasse_violations == 0);
  CHECK(scan.max_fe_residual < 1e-8);
  CHECK(scan.max_rh_deviation < 1e-6);
  CHECK(scan.max_norm_a1 <= 1.0 + 1e-12);
  CHECK(scan.samples.size() == 5);
  for (const auto& row : scan.samples) REQUIRE(row.size() == 3);

  const FamilyScan g2s = family_scan(2, 13, par1, 3);
  CHECK(g2s.grid == 13);
  CHECK(g2s.family_size + g2s.skipped == 169);
  CHECK(g2s.rh_violations == 0);
  CHECK(g2s.max_fe_residual < 1e-8);
  for (const auto& row : g2s.samples) REQUIRE(row.size() == 4);
}

TEST_CASE("family scans are thread-count invariant") {
  Parallel par3;
  par3.threads = 3;
  const FamilyScan a = family_scan(1, 101, par1, 8);
  const FamilyScan b = family_scan(1, 101, par3, 8);
  CHECK(a.family_size == b.family_size);
  CHECK(a.max_fe_residual == b.max_fe_residual);
  CHECK(a.max_rh_deviation == b.max_rh_deviation);
  CHECK(a.max_norm_a1 == b.max_norm_a1);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(a.samples[i] == b.samples[i]);
}

TEST_CASE("family moments approach the symplectic value") {
  const FamilyMoment fm = family_moment(1, 101, 2.0, par1);
  CHECK(fm.family_size > 9000);
  CHECK(fm.rmt_value == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(fm.deviation < 1.5);

  Parallel par4;
  par4.threads = 4;
  const FamilyMoment fm4 = family_moment(1, 101, 2.0, par4);
  CHECK(fm.empirical == fm4.empirical);  // deterministic reduction

  // genus 2 on the trinomial slice
  const FamilyMoment g2m = family_moment(2, 31, 1.0, par1);
  CHECK(g2m.rmt_value == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(g2m.deviation < 1.5);

  // genus 3 runs the cubic-extension route
  const FamilyMoment g3m = family_moment(3, 13, 1.0, par1);
  CHECK(g3m.family_size > 0);
  CHECK(g3m.deviation < 2.0);

  Parallel par2;
  par2.threads = 2;
  const FamilyMoment g3m2 = family_moment(3, 13, 1.0, par2);
  CHECK(g3m.empirical == g3m2.empirical);
}

TEST_CASE("caps and usage errors") {
  CHECK_THROWS_AS(family_scan(1, 8191, par1), Error);       // beyond the scan cap
  CHECK_THROWS_AS(family_moment(1, 13, -1.0, par1), Error); // negative s
  CHECK_THROWS_AS(projective_line(6), Error);               // composite p
  CHECK_THROWS_AS(count_points(parse_curve("y2=x3+x", 5), 40), Error);  // table cap
}
