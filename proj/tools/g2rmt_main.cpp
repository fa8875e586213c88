// Command-line front end. Builds a JSON config from flags, runs it through
// the C API, and writes the report plus any CSV artifacts to the output
// directory. Exit code mirrors the report's exit class.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "g2rmt.h"
#include "json.hpp"

namespace {

using Json = nlohmann::json;

struct Global {
  std::string out_dir;
  std::string format = "both";
  int threads = 1;
};

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    std::size_t pos = 0;
    const double v = std::stod(cur, &pos);
    if (pos != cur.size()) throw CLI::ValidationError("--s", "bad number: " + cur);
    out.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      cur.push_back(c);
  }
  flush();
  return out;
}

int run(const std::string& command, Json cfg, const Global& g) {
  cfg["threads"] = g.threads;
  g2rmt_report* rep = g2rmt_run(command.c_str(), cfg.dump().c_str());
  if (!rep) {
    const char* msg = g2rmt_last_error();
    std::fprintf(stderr, "error: %s\n", msg ? msg : "run failed");
    return G2RMT_USAGE_ERROR;
  }
  const int exit_class = g2rmt_report_exit_class(rep);

  char* text = g2rmt_report_json(rep);
  Json payload = Json::parse(text ? text : "{}");
  g2rmt_string_free(text);

  std::error_code ec;
  std::filesystem::create_directories(g.out_dir, ec);
  if (ec) {
    std::fprintf(stderr, "error: cannot create output directory %s\n", g.out_dir.c_str());
    g2rmt_report_free(rep);
    return G2RMT_USAGE_ERROR;
  }

  if (g.format == "json" || g.format == "both") {
    Json stamped = payload;
    stamped["timestamp"] = timestamp_utc();
    const std::string path = g.out_dir + "/" + command + ".json";
    std::ofstream os(path);
    if (!os) {
      std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
      g2rmt_report_free(rep);
      return G2RMT_USAGE_ERROR;
    }
    os << stamped.dump(2) << "\n";
    std::fprintf(stderr, "wrote %s\n", path.c_str());
  }
  if (g.format == "csv" || g.format == "both") {
    const size_t n = g2rmt_report_artifact_count(rep);
    for (size_t i = 0; i < n; ++i) {
      const char* name = g2rmt_report_artifact_name(rep, i);
      const char* data = g2rmt_report_artifact_data(rep, i);
      if (!name || !data) continue;
      const std::string path = g.out_dir + "/" + command + "_" + name;
      std::ofstream os(path);
      if (!os) {
        std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
        g2rmt_report_free(rep);
        return G2RMT_USAGE_ERROR;
      }
      os << data;
      std::fprintf(stderr, "wrote %s\n", path.c_str());
    }
  }

  // condensed run summary on stdout
  Json summary;
  summary["command"] = command;
  summary["ok"] = g2rmt_report_ok(rep) != 0;
  summary["exit_class"] = exit_class;
  if (payload.contains("error")) summary["error"] = payload["error"];
  if (payload.contains("checks")) summary["checks"] = payload["checks"];
  if (payload.contains("results")) {
    const Json& res = payload["results"];
    for (const char* key : {"rows", "integral", "mean", "count", "sign", "decisive", "ks_stat",
                            "family_size", "empirical", "rmt_value", "deviation", "value",
                            "trace_min", "trace_max", "b"})
      if (res.contains(key)) summary[key] = res[key];
  }
  std::printf("%s\n", summary.dump(2).c_str());

  g2rmt_report_free(rep);
  return exit_class;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G2 random matrix statistics and exponential sum experiments"};
  app.require_subcommand(1);

  Global g;
  if (const char* env = std::getenv("G2RMT_OUT")) g.out_dir = env;
  if (g.out_dir.empty()) g.out_dir = "g2rmt_out";

  app.add_option("--out", g.out_dir, "output directory (env G2RMT_OUT overrides the default)")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads")->capture_default_str();
  app.add_option("--format", g.format, "report outputs: json, csv, or both")
      ->check(CLI::IsMember({"json", "csv", "both"}))
      ->capture_default_str();
  app.fallthrough();

  int exit_code = 0;
  auto bind = [&](CLI::App* sub, const std::string& command, auto build) {
    sub->callback([&, command, build] { exit_code = run(command, build(), g); });
  };

  // moments
  {
    auto* sub = app.add_subcommand("moments", "moments of the characteristic polynomial");
    auto rep = std::make_shared<int>(7);
    auto s = std::make_shared<std::string>("0,1,2");
    auto mode = std::make_shared<std::string>("");
    auto n = std::make_shared<int>(512);
    auto gamma_tol = std::make_shared<double>(1e-12);
    auto quad_tol = std::make_shared<double>(1e-8);
    sub->add_option("--rep", *rep, "representation dimension, 7 or 14")->capture_default_str();
    sub->add_option("--s", *s, "comma-separated list of moment orders")->capture_default_str();
    sub->add_option("--mode", *mode, "comma-joined subset of exact,gamma,quadrature");
    sub->add_option("--n", *n, "quadrature grid size per circle")->capture_default_str();
    sub->add_option("--gamma-tol", *gamma_tol, "exact vs gamma tolerance")->capture_default_str();
    sub->add_option("--quad-tol", *quad_tol, "quadrature tolerance")->capture_default_str();
    bind(sub, "moments", [=] {
      Json cfg{{"rep", *rep}, {"s", parse_list(*s)}, {"n", *n},
               {"gamma_tol", *gamma_tol}, {"quad_tol", *quad_tol}};
      if (!mode->empty()) cfg["mode"] = *mode;
      return cfg;
    });
  }

  // ct_verify
  {
    auto* sub = app.add_subcommand("ct_verify", "constant term identity table");
    auto ks = std::make_shared<int>(2);
    auto kl = std::make_shared<int>(2);
    auto cap = std::make_shared<long long>(50000000);
    sub->add_option("--ks-max", *ks, "short root exponent bound")->capture_default_str();
    sub->add_option("--kl-max", *kl, "long root exponent bound")->capture_default_str();
    sub->add_option("--term-cap", *cap, "Laurent term cap")->capture_default_str();
    bind(sub, "ct_verify",
         [=] { return Json{{"ks_max", *ks}, {"kl_max", *kl}, {"term_cap", *cap}}; });
  }

  // density
  {
    auto* sub = app.add_subcommand("density", "value density of the characteristic polynomial");
    auto rep = std::make_shared<int>(7);
    auto du = std::make_shared<double>(1e-3);
    auto u_lo = std::make_shared<double>(-16.0);
    auto norm_tol = std::make_shared<double>(1e-6);
    auto mean_tol = std::make_shared<double>(1e-4);
    sub->add_option("--rep", *rep, "representation dimension, 7 or 14")->capture_default_str();
    sub->add_option("--du", *du, "grid step in log coordinates")->capture_default_str();
    sub->add_option("--u-lo", *u_lo, "left end of the log grid")->capture_default_str();
    sub->add_option("--norm-tol", *norm_tol, "normalization tolerance")->capture_default_str();
    sub->add_option("--mean-tol", *mean_tol, "first moment tolerance")->capture_default_str();
    bind(sub, "density", [=] {
      return Json{{"rep", *rep}, {"du", *du}, {"u_lo", *u_lo},
                  {"norm_tol", *norm_tol}, {"mean_tol", *mean_tol}};
    });
  }

  // hist
  {
    auto* sub = app.add_subcommand("hist", "torus histogram of a spectral statistic");
    auto rep = std::make_shared<int>(7);
    auto stat = std::make_shared<std::string>("trace");
    auto phi = std::make_shared<double>(0.0);
    auto bins = std::make_shared<int>(200);
    auto n = std::make_shared<int>(1024);
    sub->add_option("--rep", *rep, "representation dimension, 7 or 14")->capture_default_str();
    sub->add_option("--stat", *stat, "trace, abs, or logabs")->capture_default_str();
    sub->add_option("--phi", *phi, "evaluation angle")->capture_default_str();
    sub->add_option("--bins", *bins, "histogram bins")->capture_default_str();
    sub->add_option("--n", *n, "grid size per circle")->capture_default_str();
    bind(sub, "hist", [=] {
      return Json{{"rep", *rep}, {"stat", *stat}, {"phi", *phi}, {"bins", *bins}, {"n", *n}};
    });
  }

  // zeta
  {
    auto* sub = app.add_subcommand("zeta", "zeta function of a curve over a prime field");
    auto curve = std::make_shared<std::string>();
    auto p = std::make_shared<long long>(0);
    auto verify = std::make_shared<bool>(true);
    sub->add_option("--curve", *curve, "curve equation, e.g. \"y2=x3+x\" or \"p1\"")->required();
    sub->add_option("--p", *p, "prime characteristic")->required();
    sub->add_flag("!--no-verify", *verify, "skip brute-force count verification");
    bind(sub, "zeta", [=] { return Json{{"curve", *curve}, {"p", *p}, {"verify", *verify}}; });
  }

  // gauss
  {
    auto* sub = app.add_subcommand("gauss", "Gauss sum family over a prime field");
    auto p = std::make_shared<long long>(0);
    sub->add_option("--p", *p, "odd prime")->required();
    bind(sub, "gauss", [=] { return Json{{"p", *p}}; });
  }

  // kloosterman
  {
    auto* sub = app.add_subcommand("kloosterman", "Kloosterman sums and their angles");
    auto p = std::make_shared<long long>(0);
    auto r = std::make_shared<int>(1);
    auto a = std::make_shared<long long>(1);
    auto satotate = std::make_shared<bool>(false);
    sub->add_option("--p", *p, "odd prime")->required();
    sub->add_option("--r", *r, "field extension degree")->capture_default_str();
    sub->add_option("--a", *a, "parameter of a single sum")->capture_default_str();
    sub->add_flag("--satotate", *satotate, "run the full-family angle statistics");
    bind(sub, "kloosterman", [=] {
      Json cfg{{"p", *p}, {"r", *r}, {"satotate", *satotate}};
      if (!*satotate) cfg["a"] = *a;
      return cfg;
    });
  }

  // hk
  {
    auto* sub = app.add_subcommand("hk", "hyper-Kloosterman family over GF(p^r)");
    auto p = std::make_shared<long long>(0);
    auto r = std::make_shared<int>(1);
    auto n = std::make_shared<int>(2);
    sub->add_option("--p", *p, "prime")->required();
    sub->add_option("--r", *r, "field extension degree")->capture_default_str();
    sub->add_option("--n", *n, "number of variables")->required();
    bind(sub, "hk", [=] { return Json{{"p", *p}, {"r", *r}, {"n", *n}}; });
  }

  // nmk
  {
    auto* sub = app.add_subcommand("nmk", "G2 exponential sum family over GF(p)");
    auto p = std::make_shared<long long>(0);
    sub->add_option("--p", *p, "odd prime")->required();
    bind(sub, "nmk", [=] { return Json{{"p", *p}}; });
  }

  // equidist
  {
    auto* sub = app.add_subcommand("equidist", "equidistribution statistics of the G2 family");
    auto p = std::make_shared<long long>(0);
    auto with_det = std::make_shared<bool>(false);
    sub->add_option("--p", *p, "odd prime")->required();
    sub->add_flag("--with-det", *with_det, "also reconstruct L-polynomials and det values");
    bind(sub, "equidist", [=] { return Json{{"p", *p}, {"with_det", *with_det}}; });
  }

  // family
  {
    auto* sub = app.add_subcommand("family", "hyperelliptic family scan and moments");
    auto gnum = std::make_shared<int>(1);
    auto q = std::make_shared<long long>(0);
    auto s = std::make_shared<double>(0.0);
    auto cap = std::make_shared<long long>(16);
    sub->add_option("--g", *gnum, "genus, 1, 2, or 3")->required();
    sub->add_option("--q", *q, "odd prime power")->required();
    auto* sopt = sub->add_option("--s", *s, "also compute the s-th family moment");
    sub->add_option("--sample-cap", *cap, "rows kept in the per-curve CSV")
        ->capture_default_str();
    bind(sub, "family", [=] {
      Json cfg{{"g", *gnum}, {"q", *q}, {"sample_cap", *cap}};
      if (sopt->count()) cfg["s"] = *s;
      return cfg;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : G2RMT_USAGE_ERROR;
  }
  return exit_code;
}
