// Copyright 2026 The dpsum Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>

#include "dpsum/audit.hpp"
#include "dpsum/config.hpp"
#include "dpsum/registry.hpp"
#include "dpsum/specfun.hpp"

namespace dpsum::cli {
namespace {

using nlohmann::json;

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Options {
  std::string id;
  std::string fn;
  std::string side = "both";
  std::string cross;
  std::string grid;
  std::string out;
  std::string format = "json";
  std::string timestamp;
  std::vector<std::string> params;
  std::vector<std::string> filter;
  double x = 0.0;
  double n = 0.0;
  double tol = kDefaultTol;
  std::int64_t budget = kDefaultBudget;
  int parallelism = 1;
  bool strict = false;
  bool json = false;
};

ParamPoint CollectParams(const Options& o, const CLI::App& app) {
  ParamPoint p;
  for (const std::string& s : o.params) {
    const ParamPoint part = ParamPoint::parse(s);
    for (const auto& [name, value] : part.entries()) p.set(name, value);
  }
  if (app.count("--x") > 0) p.set("x", o.x);
  if (app.count("--n") > 0) p.set("n", o.n);
  return p;
}

json ParamsJson(const ParamPoint& p) {
  json j = json::object();
  for (const auto& [name, value] : p.entries()) {
    if (value == std::trunc(value) && std::fabs(value) < 0x1p53) {
      j[name] = static_cast<std::int64_t>(value);
    } else {
      j[name] = value;
    }
  }
  return j;
}

json ResultJson(const VerificationResult& r) {
  json j = {{"id", r.identity_id},
            {"params", ParamsJson(r.params)},
            {"lhs", r.lhs_value},
            {"rhs", r.rhs_value},
            {"abs_diff", r.abs_diff},
            {"rel_diff", r.rel_diff},
            {"tol", r.tol_used},
            {"verdict", r.verdict_label()},
            {"terms_used", r.series.terms_used},
            {"error_estimate", r.series.abs_error_est},
            {"limit_path", r.limit_path}};
  if (r.alt_evaluated) {
    j["alternative"] = {{"lhs", r.alt_lhs_value},
                        {"rhs", r.alt_rhs_value},
                        {"abs_diff", r.alt_abs_diff}};
  }
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

void PrintResult(const VerificationResult& r, std::ostream& out) {
  out << r.identity_id << " [" << r.params.str() << "] " << r.verdict_label()
      << "\n  lhs      " << Num(r.lhs_value) << "\n  rhs      "
      << Num(r.rhs_value) << "\n  abs_diff " << Num(r.abs_diff)
      << "\n  rel_diff " << Num(r.rel_diff) << "\n  tol      "
      << Num(r.tol_used) << '\n';
  if (r.has_series) {
    out << "  series   terms=" << r.series.terms_used
        << " error_estimate=" << Num(r.series.abs_error_est)
        << (r.series.accelerated ? " accelerated" : "") << '\n';
  }
  if (r.limit_path) out << "  limit branch taken\n";
  if (r.alt_evaluated) {
    out << "  alternative lhs " << Num(r.alt_lhs_value) << " rhs "
        << Num(r.alt_rhs_value) << " abs_diff " << Num(r.alt_abs_diff)
        << '\n';
  }
  if (!r.message.empty()) out << "  note     " << r.message << '\n';
}

std::string SchemaText(const Identity& e) {
  std::string s;
  for (const ParamSpec& p : e.schema) {
    if (!s.empty()) s += ' ';
    s += p.name + (p.type == ParamType::kInteger ? ":int" : ":real");
  }
  return s.empty() ? "-" : s;
}

int CmdList(const Options& o, std::ostream& out) {
  if (o.json) {
    json arr = json::array();
    for (const Identity& e : catalog()) {
      if (!matches_filter(o.filter, e.id)) continue;
      json schema = json::array();
      for (const ParamSpec& p : e.schema) {
        schema.push_back({{"name", p.name},
                          {"type", p.type == ParamType::kInteger ? "int" : "real"},
                          {"lo", p.lo},
                          {"hi", p.hi},
                          {"step", p.step}});
      }
      json grid = json::array();
      for (const ParamPoint& p : e.grid) grid.push_back(ParamsJson(p));
      arr.push_back({{"id", e.id},
                     {"title", e.title},
                     {"mode", ModeName(e.mode)},
                     {"schema", schema},
                     {"grid", grid},
                     {"notes", e.notes},
                     {"alt_note", e.alt_note},
                     {"links", e.links},
                     {"baseline_ambiguous", e.baseline_ambiguous}});
    }
    out << arr.dump(2) << '\n';
    return kOk;
  }
  char line[256];
  std::snprintf(line, sizeof line, "%-12s %-17s %-26s %-4s %s\n", "id", "mode",
                "schema", "note", "title");
  out << line;
  for (const Identity& e : catalog()) {
    if (!matches_filter(o.filter, e.id)) continue;
    const bool flagged = !e.notes.empty() || !e.alt_note.empty();
    std::snprintf(line, sizeof line, "%-12s %-17s %-26s %-4s ", e.id.c_str(),
                  ModeName(e.mode), SchemaText(e).c_str(), flagged ? "*" : "");
    out << line << e.title << '\n';
  }
  return kOk;
}

using FnEval = std::function<double(const ParamPoint&)>;

const std::map<std::string, FnEval>& Functions() {
  static const std::map<std::string, FnEval> fns = {
      {"digamma", [](const ParamPoint& p) { return digamma(p["x"]); }},
      {"trigamma", [](const ParamPoint& p) { return polygamma(1, p["x"]); }},
      {"polygamma",
       [](const ParamPoint& p) {
         return polygamma(static_cast<int>(p.integer("n")), p["x"]);
       }},
      {"lgamma",
       [](const ParamPoint& p) { return log_gamma_signed(p["x"]).log_abs; }},
      {"gamma",
       [](const ParamPoint& p) { return log_gamma_signed(p["x"]).value(); }},
      {"zeta",
       [](const ParamPoint& p) {
         return zeta_int(static_cast<int>(p.integer("n")));
       }},
      {"dilog", [](const ParamPoint& p) { return dilog(p["x"]); }},
      {"harmonic",
       [](const ParamPoint& p) { return harmonic(p.integer("k"), p["a"]); }},
      {"harmonic_prime",
       [](const ParamPoint& p) {
         return harmonic_prime(p.integer("k"), p["a"]);
       }},
      {"pochhammer",
       [](const ParamPoint& p) { return pochhammer(p["x"], p.integer("n")); }},
      {"binomial",
       [](const ParamPoint& p) {
         return binomial(p.integer("n"), p.integer("k"));
       }},
      {"rho", [](const ParamPoint& p) { return rho(p["alpha"], p["q"]); }},
  };
  return fns;
}

int CmdEval(const Options& o, const ParamPoint& given, std::ostream& out,
            std::ostream& err) {
  if (o.id.empty() == o.fn.empty()) {
    err << "eval: give exactly one of --fn or --id\n";
    return kUsage;
  }
  if (!o.fn.empty()) {
    const auto it = Functions().find(o.fn);
    if (it == Functions().end()) {
      err << "eval: unknown function " << o.fn << '\n';
      return kUsage;
    }
    const double v = it->second(given);
    if (o.json) {
      out << json{{"fn", o.fn}, {"params", ParamsJson(given)}, {"value", v}}
                 .dump()
          << '\n';
    } else {
      out << Num(v) << '\n';
    }
    return kOk;
  }

  if (o.side != "lhs" && o.side != "rhs" && o.side != "both") {
    err << "eval: --side must be lhs, rhs or both\n";
    return kUsage;
  }
  const Identity& e = identity(o.id);
  const ParamPoint p =
      given.empty() && !e.grid.empty() ? e.grid.front() : given;
  check_schema(e, p);
  json j = {{"id", e.id}, {"params", ParamsJson(p)}};
  const bool want_lhs = o.side != "rhs";
  const bool want_rhs = o.side != "lhs";
  int code = kOk;
  if (want_lhs) {
    if (e.lhs) {
      SumResult s;
      try {
        s = eval_series(e.id, p, o.tol, o.budget);
      } catch (const NonConvergence& ex) {
        s = ex.partial();
        err << "eval: " << ex.what() << '\n';
        code = kNumerical;
      }
      j["lhs"] = s.value;
      j["lhs_error_estimate"] = s.abs_error_est;
      j["lhs_terms"] = s.terms_used;
      if (!o.json) {
        out << "lhs " << Num(s.value) << "  (error_estimate "
            << Num(s.abs_error_est) << ", terms " << s.terms_used << ")\n";
      }
    } else if (e.lhs_closed) {
      const double v = eval_closed_lhs(e.id, p);
      j["lhs"] = v;
      if (!o.json) out << "lhs " << Num(v) << '\n';
    } else if (o.side == "lhs") {
      err << "eval: " << e.id << " has no left-hand side to evaluate\n";
      return kUsage;
    } else if (!o.json) {
      out << "lhs (none: " << ModeName(e.mode) << ")\n";
    }
  }
  if (want_rhs) {
    const double v = eval_closed(e.id, p);
    j["rhs"] = v;
    if (!o.json) out << "rhs " << Num(v) << '\n';
  }
  if (o.json) out << j.dump() << '\n';
  return code;
}

int CmdVerify(const Options& o, const ParamPoint& given, std::ostream& out,
              std::ostream& err) {
  if (o.id.empty()) {
    err << "verify: --id is required\n";
    return kUsage;
  }
  if (find_identity(o.id) == nullptr) {
    err << "verify: unknown identity " << o.id << '\n';
    return kUsage;
  }
  std::vector<ParamPoint> points;
  if (!given.empty() || !o.cross.empty()) {
    points.push_back(given);
  } else {
    points = identity(o.id).grid;
    if (points.empty()) points.emplace_back();
  }
  std::vector<VerificationResult> results;
  for (const ParamPoint& p : points) {
    results.push_back(o.cross.empty()
                          ? verify(o.id, p, o.tol, o.budget)
                          : cross_check(o.id, o.cross, p, o.tol, o.budget));
  }
  bool usage = false, stalled = false, failed = false;
  json arr = json::array();
  for (const VerificationResult& r : results) {
    if (o.json) {
      arr.push_back(ResultJson(r));
    } else {
      PrintResult(r, out);
    }
    if (r.verdict == Verdict::kError) {
      if (r.error == ErrorKind::kSchema) {
        usage = true;
      } else if (r.error == ErrorKind::kNonConvergence) {
        stalled = true;
      } else {
        failed = true;
      }
    }
    if (r.verdict == Verdict::kFail || r.verdict == Verdict::kAmbiguous) {
      failed = true;
    }
  }
  if (o.json) out << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  if (usage) return kUsage;
  if (failed) return kVerificationFailure;
  return stalled ? kNumerical : kOk;
}

int CmdAudit(const Options& o, const CLI::App& app, std::ostream& out,
             std::ostream& err) {
  AuditConfig c;
  if (!o.grid.empty()) c = load_config_file(o.grid);
  if (app.count("--filter") > 0) c.filter = o.filter;
  if (app.count("--tol") > 0) c.tol = o.tol;
  if (app.count("--budget") > 0) c.budget = o.budget;
  if (app.count("--format") > 0) c.format = ParseReportFormat(o.format);
  if (app.count("--parallelism") > 0) c.parallelism = o.parallelism;
  if (app.count("--strict") > 0) c.strict = true;
  if (app.count("--timestamp") > 0) c.timestamp = o.timestamp;
  const AuditReport report = run_audit(c);
  const std::string text = render_report(report, c.format);
  const AuditSummary& s = report.summary;
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "audit: cannot write " << o.out << '\n';
      return kUsage;
    }
    f << text;
    out << "total " << s.total << "  PASS " << s.pass << "  FAIL " << s.fail
        << "  AMBIGUOUS " << s.ambiguous << "  SKIPPED_CONTINUATION "
        << s.skipped << "  ERROR " << s.error << '\n';
  }
  return audit_exit_code(s, c.strict);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Numerical audit of digamma series identities", "dpsum"};
  app.require_subcommand(1);
  app.set_version_flag("--version", library_version());
  Options o;

  auto add_point_opts = [&](CLI::App* cmd) {
    cmd->add_option("--param", o.params, "name=value (repeatable)");
    cmd->add_option("--x", o.x, "shorthand for --param x=...");
    cmd->add_option("--n", o.n, "shorthand for --param n=...");
  };
  auto add_numeric_opts = [&](CLI::App* cmd) {
    cmd->add_option("--tol", o.tol, "verification tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget", o.budget, "maximum series terms")
        ->check(CLI::Range(std::int64_t{1000}, std::int64_t{1} << 40));
  };

  CLI::App* list = app.add_subcommand("list", "list the identity catalog");
  list->add_option("--filter", o.filter, "ids or globs")->delimiter(',');
  list->add_flag("--json", o.json, "JSON output");

  CLI::App* eval = app.add_subcommand("eval", "evaluate a kernel or identity");
  eval->add_option("--fn", o.fn, "kernel function name");
  eval->add_option("--id", o.id, "identity id");
  eval->add_option("--side", o.side, "lhs, rhs or both");
  eval->add_flag("--json", o.json, "JSON output");
  add_point_opts(eval);
  add_numeric_opts(eval);

  CLI::App* ver = app.add_subcommand("verify", "verify one identity");
  ver->add_option("--id", o.id, "identity id");
  ver->add_option("--cross", o.cross, "cross-check against this identity");
  ver->add_flag("--json", o.json, "JSON output");
  add_point_opts(ver);
  add_numeric_opts(ver);

  CLI::App* audit = app.add_subcommand("audit", "verify the catalog grids");
  audit->add_option("--grid", o.grid, "config file");
  audit->add_option("--filter", o.filter, "ids or globs")->delimiter(',');
  audit->add_option("--out", o.out, "report file");
  audit->add_option("--format", o.format, "json, csv or md");
  audit->add_option("--parallelism", o.parallelism, "worker threads")
      ->check(CLI::PositiveNumber);
  audit->add_option("--timestamp", o.timestamp, "fixed report timestamp");
  audit->add_flag("--strict", o.strict, "treat AMBIGUOUS as failure");
  add_numeric_opts(audit);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << library_version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (list->parsed()) return CmdList(o, out);
    if (eval->parsed()) return CmdEval(o, CollectParams(o, *eval), out, err);
    if (ver->parsed()) return CmdVerify(o, CollectParams(o, *ver), out, err);
    if (audit->parsed()) return CmdAudit(o, *audit, out, err);
  } catch (const NonConvergence& e) {
    err << e.what() << '\n';
    return kNumerical;
  } catch (const Error& e) {
    err << ErrorKindName(e.kind()) << ": " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace dpsum::cli
