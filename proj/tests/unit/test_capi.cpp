#include <cstring>
#include <string>

#include "doctest.h"
#include "g2rmt.h"
#include "json.hpp"

TEST_CASE("version string") {
  const char* v = g2rmt_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) >= 5);
}

TEST_CASE("run and inspect a report") {
  g2rmt_report* r = g2rmt_run("moments", R"({"rep":7,"s":[0,1],"mode":"exact"})");
  REQUIRE(r != nullptr);
  CHECK(g2rmt_report_ok(r) == 1);
  CHECK(g2rmt_report_exit_class(r) == G2RMT_OK);
  char* text = g2rmt_report_json(r);
  REQUIRE(text != nullptr);
  const auto payload = nlohmann::json::parse(text);
  CHECK(payload.at("command") == "moments");
  CHECK(payload.at("results").at("rows")[1].at("exact") == "6");
  g2rmt_string_free(text);
  g2rmt_report_free(r);
}

TEST_CASE("malformed config becomes a usage report") {
  g2rmt_report* r = g2rmt_run("moments", "{not json");
  REQUIRE(r != nullptr);
  CHECK(g2rmt_report_ok(r) == 0);
  CHECK(g2rmt_report_exit_class(r) == G2RMT_USAGE_ERROR);
  char* text = g2rmt_report_json(r);
  const auto payload = nlohmann::json::parse(text);
  CHECK(payload.at("error").at("kind") == "usage");
  g2rmt_string_free(text);
  g2rmt_report_free(r);
}

TEST_CASE("unknown command becomes a usage report") {
  g2rmt_report* r = g2rmt_run("no_such_command", "{}");
  REQUIRE(r != nullptr);
  CHECK(g2rmt_report_exit_class(r) == G2RMT_USAGE_ERROR);
  g2rmt_report_free(r);
}

TEST_CASE("artifact accessors") {
  g2rmt_report* r = g2rmt_run("hist", R"({"rep":7,"bins":40,"n":128})");
  REQUIRE(r != nullptr);
  REQUIRE(g2rmt_report_artifact_count(r) == 1);
  const char* name = g2rmt_report_artifact_name(r, 0);
  const char* data = g2rmt_report_artifact_data(r, 0);
  REQUIRE(name != nullptr);
  REQUIRE(data != nullptr);
  CHECK(std::string(name) == "hist.csv");
  CHECK(std::string(data).rfind("bin_left", 0) == 0);

  CHECK(g2rmt_report_artifact_name(r, 5) == nullptr);
  CHECK(g2rmt_last_error() != nullptr);
  g2rmt_report_free(r);
}

TEST_CASE("null tolerance") {
  CHECK(g2rmt_report_ok(nullptr) == 0);
  CHECK(g2rmt_report_exit_class(nullptr) == G2RMT_USAGE_ERROR);
  CHECK(g2rmt_report_artifact_count(nullptr) == 0);
  g2rmt_report_free(nullptr);
  g2rmt_string_free(nullptr);
}
