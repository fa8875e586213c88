#pragma once
// Experiment orchestration: every command yields a schema-versioned JSON
// payload plus optional CSV artifacts, with errors mapped to exit classes.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "util.hpp"

namespace g2rmt {

using Json = nlohmann::json;

inline constexpr int REPORT_SCHEMA_VERSION = 1;

struct Report {
  Json payload;        // schema_version, command, config, results, checks, ok
  bool ok = true;
  int exit_class = 0;  // 0 success, 1 check failure, 2 usage, 3 resource cap
  std::vector<std::pair<std::string, std::string>> artifacts;  // name -> CSV
};

// commands: moments, ct_verify, density, hist, zeta, gauss, kloosterman,
// hk, nmk, equidist, family. The payload is deterministic for a fixed
// config (no timestamp; callers add one when writing files).
Report run_command(const std::string& command, const Json& config);

std::string report_text(const Report& r);  // sorted keys, 2-space indent

}  // namespace g2rmt
