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


#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "dpsum/audit.hpp"
#include "dpsum/config.hpp"

namespace dpsum {
namespace {

using nlohmann::json;

AuditConfig Fixed() {
  AuditConfig c;
  c.timestamp = "2026-01-01T00:00:00Z";
  return c;
}

TEST(Audit, GlobAndFilter) {
  EXPECT_TRUE(glob_match("EQ_0*", "EQ_030"));
  EXPECT_TRUE(glob_match("APB_?5", "APB_05"));
  EXPECT_FALSE(glob_match("APB_?5", "APB_05B"));
  EXPECT_TRUE(glob_match("*", ""));
  EXPECT_TRUE(matches_filter({}, "EQ_030"));
  EXPECT_TRUE(matches_filter({"all"}, "EQ_030"));
  EXPECT_TRUE(matches_filter({"EQ_017A", "EQ_017B"}, "EQ_017B"));
  EXPECT_FALSE(matches_filter({"EQ_017A"}, "EQ_017B"));
}

TEST(Audit, Validate) {
  AuditConfig c;
  EXPECT_NO_THROW(validate(c));
  c.tol = 0.0;
  EXPECT_THROW(validate(c), SchemaError);
  c = AuditConfig();
  c.budget = 999;
  EXPECT_THROW(validate(c), SchemaError);
  c = AuditConfig();
  c.parallelism = 0;
  EXPECT_THROW(validate(c), SchemaError);
  c = AuditConfig();
  c.grids["NOPE"] = {};
  EXPECT_THROW(validate(c), SchemaError);
  EXPECT_THROW(ParseReportFormat("xml"), SchemaError);
  EXPECT_EQ(ParseReportFormat("md"), ReportFormat::kMarkdown);
}

TEST(Audit, DeterministicAcrossParallelism) {
  AuditConfig c = Fixed();
  c.parallelism = 1;
  const AuditReport a = run_audit(c);
  c.parallelism = 8;
  const AuditReport b = run_audit(c);
  for (ReportFormat f :
       {ReportFormat::kJson, ReportFormat::kCsv, ReportFormat::kMarkdown}) {
    EXPECT_EQ(render_report(a, f), render_report(b, f)) << ReportFormatName(f);
  }
}

TEST(Audit, SummaryMatchesResults) {
  const AuditReport r = run_audit(Fixed());
  const AuditSummary& s = r.summary;
  EXPECT_EQ(s.total, static_cast<std::int64_t>(r.results.size()));
  EXPECT_EQ(s.pass + s.fail + s.ambiguous + s.skipped + s.error, s.total);
  EXPECT_EQ(s.fail, 0);
  EXPECT_EQ(s.error, 0);
  EXPECT_EQ(s.unexpected_ambiguous, 0);
  EXPECT_EQ(audit_exit_code(s, false), 0);
  EXPECT_EQ(audit_exit_code(s, true), 1);
  // Catalog order, then grid order.
  std::size_t i = 0;
  for (const Identity& e : catalog()) {
    for (const ParamPoint& p : e.grid) {
      ASSERT_LT(i, r.results.size());
      EXPECT_EQ(r.results[i].identity_id, e.id);
      EXPECT_EQ(r.results[i].params, p);
      ++i;
    }
  }
  EXPECT_EQ(i, r.results.size());
  for (const AuditNote& n : r.notes) {
    EXPECT_FALSE(n.notes.empty() && n.alt_note.empty()) << n.id;
  }
}

TEST(Audit, ExitCodeMatrix) {
  for (int fail = 0; fail < 2; ++fail) {
    for (int hard = 0; hard < 2; ++hard) {
      for (int stall = 0; stall < 2; ++stall) {
        for (int amb = 0; amb < 2; ++amb) {
          for (int unexpected = 0; unexpected <= amb; ++unexpected) {
            for (int strict = 0; strict < 2; ++strict) {
              AuditSummary s;
              s.fail = fail;
              s.nonconvergence = stall;
              s.error = hard + stall;
              s.ambiguous = amb;
              s.unexpected_ambiguous = unexpected;
              s.pass = 3;
              s.total = s.pass + s.fail + s.error + s.ambiguous;
              int want = 0;
              if (fail || hard || unexpected || (strict && amb)) {
                want = 1;
              } else if (stall) {
                want = 3;
              }
              EXPECT_EQ(audit_exit_code(s, strict), want)
                  << fail << hard << stall << amb << unexpected << strict;
            }
          }
        }
      }
    }
  }
}

TEST(Audit, JsonSchema) {
  const AuditReport r = run_audit(Fixed());
  const json j = json::parse(render_report(r, ReportFormat::kJson));
  ASSERT_TRUE(j.is_object());
  for (const char* key : {"environment", "summary", "results"}) {
    ASSERT_TRUE(j.contains(key)) << key;
  }
  const json& env = j["environment"];
  EXPECT_EQ(env["timestamp"], "2026-01-01T00:00:00Z");
  EXPECT_EQ(env["version"], library_version());
  EXPECT_TRUE(env["tol"].is_number());
  EXPECT_TRUE(env["budget"].is_number_integer());
  EXPECT_EQ(j["summary"]["total"], r.summary.total);
  EXPECT_EQ(j["summary"]["PASS"], r.summary.pass);
  ASSERT_EQ(j["results"].size(), r.results.size());
  for (const json& res : j["results"]) {
    ASSERT_TRUE(res.is_object());
    EXPECT_TRUE(res["id"].is_string());
    EXPECT_TRUE(res["params"].is_object());
    for (const char* key : {"lhs", "rhs", "abs_diff", "rel_diff", "tol"}) {
      EXPECT_TRUE(res[key].is_number() || res[key].is_null())
          << res["id"] << " " << key;
    }
    EXPECT_TRUE(res["verdict"].is_string());
    EXPECT_TRUE(res["terms_used"].is_number_integer());
  }
  // 17 significant digits round-trip.
  EXPECT_EQ(j["results"][0]["lhs"].get<double>(), r.results[0].lhs_value);
}

TEST(Audit, CsvRows) {
  AuditConfig c = Fixed();
  c.filter = {"EQ_017A", "EQ_017B"};
  const AuditReport r = run_audit(c);
  EXPECT_EQ(r.summary.pass, 2);
  EXPECT_EQ(r.summary.total, 2);
  std::istringstream in(render_report(r, ReportFormat::kCsv));
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0].rfind("id,params,verdict,", 0), 0u);
  EXPECT_EQ(lines[1].rfind("EQ_017A,,PASS,", 0), 0u);
  EXPECT_EQ(lines[2].rfind("EQ_017B,,PASS,", 0), 0u);
}

TEST(Audit, GridOverride) {
  AuditConfig c = Fixed();
  c.filter = {"EQ_053"};
  c.grids["EQ_053"] = {ParamPoint::parse("k=7")};
  const AuditReport r = run_audit(c);
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.results[0].params.str(), "k=7");
}

TEST(Audit, Timestamp) {
  EXPECT_EQ(resolve_timestamp(std::string("x")), "x");
  setenv("SOURCE_DATE_EPOCH", "1767225600", 1);
  EXPECT_EQ(resolve_timestamp(std::nullopt), "2026-01-01T00:00:00Z");
  unsetenv("SOURCE_DATE_EPOCH");
  EXPECT_EQ(resolve_timestamp(std::nullopt).size(), 20u);
}

TEST(Config, Parse) {
  const AuditConfig c = parse_config(
      "# comment\n"
      "filter = EQ_03*, APB_01\n"
      "tol = 1e-9   # trailing\n"
      "budget = 20000\n"
      "format = csv\n"
      "parallelism = 3\n"
      "strict = true\n"
      "timestamp = 2026-02-03T04:05:06Z\n"
      "grid.EQ_031 = p=1 q=2; p=3 q=4\n"
      "grid.EQ_031 = p=5 q=6\n"
      "\n");
  EXPECT_EQ(c.filter, (std::vector<std::string>{"EQ_03*", "APB_01"}));
  EXPECT_EQ(c.tol, 1e-9);
  EXPECT_EQ(c.budget, 20000);
  EXPECT_EQ(c.format, ReportFormat::kCsv);
  EXPECT_EQ(c.parallelism, 3);
  EXPECT_TRUE(c.strict);
  EXPECT_EQ(c.timestamp, "2026-02-03T04:05:06Z");
  ASSERT_EQ(c.grids.at("EQ_031").size(), 3u);
  EXPECT_EQ(c.grids.at("EQ_031")[2].str(), "p=5 q=6");
}

TEST(Config, Errors) {
  for (const char* bad : {"tol 1e-8\n", "tol = abc\n", "budget = 1.5\n",
                          "colour = red\n", "strict = maybe\n",
                          "grid.EQ_031 = p\n", "format = xml\n"}) {
    EXPECT_THROW(parse_config(bad), SchemaError) << bad;
  }
  try {
    parse_config("tol = 1e-8\n\nbudget = x\n");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos)
        << e.what();
  }
  EXPECT_THROW(load_config_file("/nonexistent/dpsum.conf"), SchemaError);
}

TEST(Config, ShippedExample) {
  const AuditConfig c =
      load_config_file(DPSUM_SOURCE_DIR "/tools/audit.example.conf");
  EXPECT_NO_THROW(validate(c));
  EXPECT_EQ(c.parallelism, 4);
  EXPECT_EQ(c.grids.at("EQ_053").size(), 5u);
}

}  // namespace
}  // namespace dpsum
