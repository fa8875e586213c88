#include "g2rmt.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "reports.hpp"

struct g2rmt_report {
  g2rmt::Report rep;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* g2rmt_version(void) { return "1.0.0"; }

g2rmt_report* g2rmt_run(const char* command, const char* config_json) {
  g_last_error.clear();
  g2rmt_report* out = nullptr;
  try {
    out = new g2rmt_report;
    g2rmt::Json cfg = g2rmt::Json::object();
    std::string parse_error;
    if (config_json && *config_json) {
      try {
        cfg = g2rmt::Json::parse(config_json);
      } catch (const std::exception& e) {
        parse_error = e.what();
      }
    }
    const std::string cmd = command ? command : "";
    if (parse_error.empty()) {
      out->rep = g2rmt::run_command(cmd, cfg);
    } else {
      out->rep.ok = false;
      out->rep.exit_class = G2RMT_USAGE_ERROR;
      out->rep.payload["schema_version"] = g2rmt::REPORT_SCHEMA_VERSION;
      out->rep.payload["command"] = cmd;
      out->rep.payload["error"] =
          g2rmt::Json{{"kind", "usage"}, {"message", "config: " + parse_error}};
      out->rep.payload["ok"] = false;
      out->rep.payload["exit_class"] = G2RMT_USAGE_ERROR;
    }
    return out;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    delete out;
    return nullptr;
  } catch (...) {
    g_last_error = "unknown error";
    delete out;
    return nullptr;
  }
}

void g2rmt_report_free(g2rmt_report* r) { delete r; }

char* g2rmt_report_json(const g2rmt_report* r) {
  if (!r) {
    g_last_error = "null report";
    return nullptr;
  }
  try {
    return dup_string(g2rmt::report_text(r->rep));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

int g2rmt_report_ok(const g2rmt_report* r) { return r && r->rep.ok ? 1 : 0; }

int g2rmt_report_exit_class(const g2rmt_report* r) {
  return r ? r->rep.exit_class : G2RMT_USAGE_ERROR;
}

size_t g2rmt_report_artifact_count(const g2rmt_report* r) {
  return r ? r->rep.artifacts.size() : 0;
}

const char* g2rmt_report_artifact_name(const g2rmt_report* r, size_t i) {
  if (!r || i >= r->rep.artifacts.size()) {
    g_last_error = "artifact index out of range";
    return nullptr;
  }
  return r->rep.artifacts[i].first.c_str();
}

const char* g2rmt_report_artifact_data(const g2rmt_report* r, size_t i) {
  if (!r || i >= r->rep.artifacts.size()) {
    g_last_error = "artifact index out of range";
    return nullptr;
  }
  return r->rep.artifacts[i].second.c_str();
}

void g2rmt_string_free(char* s) { std::free(s); }

const char* g2rmt_last_error(void) {
  return g_last_error.empty() ? nullptr : g_last_error.c_str();
}

}  // extern "C"
