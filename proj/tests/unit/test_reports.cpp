#include <string>

#include "doctest.h"
#include "reports.hpp"

using namespace g2rmt;

TEST_CASE("moments command emits the exact values") {
  Json cfg;
  cfg["rep"] = 7;
  cfg["s"] = {0, 1, 2};
  cfg["mode"] = "exact";
  const Report r = run_command("moments", cfg);
  CHECK(r.ok);
  CHECK(r.exit_class == 0);
  const Json& rows = r.payload.at("results").at("rows");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].at("exact").get<std::string>() == "1");
  CHECK(rows[1].at("exact").get<std::string>() == "6");
  CHECK(rows[2].at("exact").get<std::string>() == "55");
  CHECK(r.payload.at("ok").get<bool>());
  CHECK(r.payload.at("schema_version").get<int>() == REPORT_SCHEMA_VERSION);
}

TEST_CASE("mode defaults depend on the exponents") {
  Json cfg;
  cfg["rep"] = 7;
  cfg["s"] = {0.5};
  const Report r = run_command("moments", cfg);
  CHECK(r.ok);
  CHECK(r.payload.at("config").at("mode").get<std::string>() == "gamma");

  Json cfg2;
  cfg2["rep"] = 14;
  cfg2["s"] = {1};
  const Report r2 = run_command("moments", cfg2);
  CHECK(r2.ok);
  CHECK(r2.payload.at("config").at("mode").get<std::string>() == "exact");
}

TEST_CASE("cross-mode agreement is checked") {
  Json cfg;
  cfg["rep"] = 7;
  cfg["s"] = {0.5};
  cfg["mode"] = "gamma,quadrature";
  cfg["n"] = 512;
  const Report r = run_command("moments", cfg);
  CHECK(r.ok);
  bool found = false;
  for (const Json& c : r.payload.at("checks"))
    if (c.at("name") == "gamma_vs_quadrature") {
      found = true;
      CHECK(c.at("ok").get<bool>());
      CHECK(c.at("value").get<double>() <= 1e-8);
    }
  CHECK(found);
}

TEST_CASE("reports are deterministic") {
  Json cfg;
  cfg["p"] = 101;
  const Report a = run_command("gauss", cfg);
  const Report b = run_command("gauss", cfg);
  CHECK(report_text(a) == report_text(b));

  Json cfg4 = cfg;
  cfg4["threads"] = 4;
  const Report c = run_command("gauss", cfg4);
  CHECK(a.payload.at("results") == c.payload.at("results"));
}

TEST_CASE("payload carries no wall-clock data") {
  Json cfg;
  cfg["p"] = 17;
  const Report r = run_command("nmk", cfg);
  CHECK(!r.payload.contains("timestamp"));
  CHECK(report_text(r).find("timestamp") == std::string::npos);
}

TEST_CASE("error classification") {
  // unknown command
  const Report a = run_command("frobnicate", Json::object());
  CHECK(!a.ok);
  CHECK(a.exit_class == 2);
  CHECK(a.payload.at("error").at("kind") == "usage");

  // unknown key
  Json bad;
  bad["p"] = 17;
  bad["quux"] = 1;
  const Report b = run_command("nmk", bad);
  CHECK(b.exit_class == 2);

  // missing required parameter
  const Report c = run_command("zeta", Json{{"p", 5}});
  CHECK(c.exit_class == 2);

  // resource cap
  Json capped;
  capped["ks_max"] = 4;
  capped["kl_max"] = 4;
  capped["term_cap"] = 10;
  const Report d = run_command("ct_verify", capped);
  CHECK(d.exit_class == 3);
  CHECK(d.payload.at("error").at("kind") == "cap");

  // statistical check failure is exit class 1
  Json strict;
  strict["p"] = 17;
  strict["trace_ks_c"] = 1e-9;
  const Report e = run_command("equidist", strict);
  CHECK(!e.ok);
  CHECK(e.exit_class == 1);
}

TEST_CASE("artifacts are attached") {
  Json cfg;
  cfg["rep"] = 7;
  cfg["bins"] = 50;
  cfg["n"] = 128;
  const Report r = run_command("hist", cfg);
  CHECK(r.ok);
  REQUIRE(r.artifacts.size() == 1);
  CHECK(r.artifacts[0].first == "hist.csv");
  CHECK(r.artifacts[0].second.rfind("bin_left,bin_right,density\n", 0) == 0);
}

TEST_CASE("zeta command round-trips a known curve") {
  Json cfg;
  cfg["curve"] = "y2=x3+x";
  cfg["p"] = 5;
  const Report r = run_command("zeta", cfg);
  CHECK(r.ok);
  const Json& res = r.payload.at("results");
  CHECK(res.at("genus").get<int>() == 1);
  const Json& b = res.at("b");
  REQUIRE(b.size() == 3);
  CHECK(b[0].get<std::string>() == "1");
  CHECK(b[1].get<std::string>() == "-2");
  CHECK(b[2].get<std::string>() == "5");
  bool rh = false;
  for (const Json& c : r.payload.at("checks"))
    if (c.at("name") == "riemann_hypothesis") rh = c.at("ok").get<bool>();
  CHECK(rh);
}

TEST_CASE("family command merges scan and moment") {
  Json cfg;
  cfg["g"] = 1;
  cfg["q"] = 13;
  cfg["s"] = 2.0;
  cfg["sample_cap"] = 4;
  const Report r = run_command("family", cfg);
  CHECK(r.ok);
  const Json& res = r.payload.at("results");
  CHECK(res.at("rh_violations").get<int>() == 0);
  CHECK(res.at("rmt_value").get<double>() == doctest::Approx(5.0));
  REQUIRE(r.artifacts.size() == 1);
  CHECK(r.artifacts[0].first == "samples.csv");
}

TEST_CASE("kloosterman command in both shapes") {
  Json one;
  one["p"] = 13;
  one["a"] = 1;
  const Report r1 = run_command("kloosterman", one);
  CHECK(r1.ok);
  CHECK(r1.payload.at("results").contains("value"));

  Json st;
  st["p"] = 101;
  st["satotate"] = true;
  const Report r2 = run_command("kloosterman", st);
  CHECK(r2.ok);
  CHECK(r2.payload.at("results").at("count").get<int>() == 100);
  REQUIRE(r2.artifacts.size() == 1);
  CHECK(r2.artifacts[0].first == "angles.csv");
}
