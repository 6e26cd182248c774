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


#include <cmath>
#include <sstream>

#include "dpsum/audit.hpp"
#include "format.hpp"

namespace dpsum {
namespace {

std::string JsonString(std::string_view s) {
  std::string out = "\"";
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string JsonNumber(double v) {
  return std::isfinite(v) ? Format17(v) : "null";
}

const char* JsonBool(bool b) { return b ? "true" : "false"; }

std::string JsonParams(const ParamPoint& p) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : p.entries()) {
    if (!first) out += ", ";
    first = false;
    out += JsonString(name) + ": " + JsonNumber(value);
  }
  return out + "}";
}

std::string RenderJson(const AuditReport& r) {
  std::ostringstream o;
  const AuditSummary& s = r.summary;
  o << "{\n  \"environment\": {"
    << "\"version\": " << JsonString(r.version)
    << ", \"precision\": " << JsonString(r.precision)
    << ", \"timestamp\": " << JsonString(r.timestamp)
    << ", \"tol\": " << JsonNumber(r.tol)
    << ", \"budget\": " << r.budget << "},\n";
  o << "  \"summary\": {\"total\": " << s.total << ", \"PASS\": " << s.pass
    << ", \"FAIL\": " << s.fail << ", \"AMBIGUOUS\": " << s.ambiguous
    << ", \"SKIPPED_CONTINUATION\": " << s.skipped
    << ", \"ERROR\": " << s.error
    << ", \"unexpected_ambiguous\": " << s.unexpected_ambiguous
    << ", \"nonconvergence\": " << s.nonconvergence << "},\n";
  o << "  \"results\": [";
  for (std::size_t i = 0; i < r.results.size(); ++i) {
    const VerificationResult& v = r.results[i];
    o << (i == 0 ? "\n" : ",\n") << "    {\"id\": " << JsonString(v.identity_id)
      << ", \"params\": " << JsonParams(v.params)
      << ", \"lhs\": " << JsonNumber(v.lhs_value)
      << ", \"rhs\": " << JsonNumber(v.rhs_value)
      << ", \"abs_diff\": " << JsonNumber(v.abs_diff)
      << ", \"rel_diff\": " << JsonNumber(v.rel_diff)
      << ", \"tol\": " << JsonNumber(v.tol_used)
      << ", \"verdict\": " << JsonString(v.verdict_label())
      << ", \"terms_used\": " << v.series.terms_used
      << ", \"error_estimate\": " << JsonNumber(v.series.abs_error_est)
      << ", \"series\": " << JsonBool(v.has_series)
      << ", \"limit_path\": " << JsonBool(v.limit_path);
    if (v.alt_evaluated) {
      o << ", \"alternative\": {\"lhs\": " << JsonNumber(v.alt_lhs_value)
        << ", \"rhs\": " << JsonNumber(v.alt_rhs_value)
        << ", \"abs_diff\": " << JsonNumber(v.alt_abs_diff) << "}";
    }
    if (!v.message.empty()) o << ", \"message\": " << JsonString(v.message);
    o << "}";
  }
  o << (r.results.empty() ? "],\n" : "\n  ],\n");
  o << "  \"notes\": [";
  for (std::size_t i = 0; i < r.notes.size(); ++i) {
    const AuditNote& n = r.notes[i];
    o << (i == 0 ? "\n" : ",\n") << "    {\"id\": " << JsonString(n.id)
      << ", \"notes\": " << JsonString(n.notes)
      << ", \"alt_note\": " << JsonString(n.alt_note) << "}";
  }
  o << (r.notes.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return o.str();
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string RenderCsv(const AuditReport& r) {
  std::ostringstream o;
  o << "id,params,verdict,lhs,rhs,abs_diff,rel_diff,tol,terms_used,"
       "error_estimate,limit_path,message\n";
  for (const VerificationResult& v : r.results) {
    o << CsvField(v.identity_id) << ',' << CsvField(v.params.str()) << ','
      << v.verdict_label() << ',' << Format17(v.lhs_value) << ','
      << Format17(v.rhs_value) << ',' << Format17(v.abs_diff) << ','
      << Format17(v.rel_diff) << ',' << Format17(v.tol_used) << ','
      << v.series.terms_used << ',' << Format17(v.series.abs_error_est)
      << ',' << (v.limit_path ? 1 : 0) << ',' << CsvField(v.message) << '\n';
  }
  return o.str();
}

std::string MdCell(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

std::string RenderMarkdown(const AuditReport& r) {
  std::ostringstream o;
  const AuditSummary& s = r.summary;
  o << "# dpsum audit\n\n"
    << "- version: " << r.version << "\n- precision: " << r.precision
    << "\n- timestamp: " << r.timestamp << "\n- tol: " << Format17(r.tol)
    << "\n- budget: " << r.budget << "\n\n";
  o << "| total | PASS | FAIL | AMBIGUOUS | SKIPPED_CONTINUATION | ERROR |\n"
    << "|---|---|---|---|---|---|\n"
    << "| " << s.total << " | " << s.pass << " | " << s.fail << " | "
    << s.ambiguous << " | " << s.skipped << " | " << s.error << " |\n\n";
  o << "| id | params | verdict | lhs | rhs | abs_diff | terms |\n"
    << "|---|---|---|---|---|---|---|\n";
  for (const VerificationResult& v : r.results) {
    o << "| " << v.identity_id << " | " << MdCell(v.params.str()) << " | "
      << v.verdict_label() << " | " << Format17(v.lhs_value) << " | "
      << Format17(v.rhs_value) << " | " << Format17(v.abs_diff) << " | "
      << v.series.terms_used << " |\n";
  }
  if (!r.notes.empty()) {
    o << "\n## Notes\n\n";
    for (const AuditNote& n : r.notes) {
      o << "- **" << n.id << "**: " << MdCell(n.notes);
      if (!n.alt_note.empty()) o << " Alternative: " << MdCell(n.alt_note);
      o << "\n";
    }
  }
  return o.str();
}

}  // namespace

std::string render_report(const AuditReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return RenderJson(report);
    case ReportFormat::kCsv: return RenderCsv(report);
    case ReportFormat::kMarkdown: return RenderMarkdown(report);
  }
  return {};
}

}  // namespace dpsum
