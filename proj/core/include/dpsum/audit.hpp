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


#ifndef DPSUM_AUDIT_HPP_
#define DPSUM_AUDIT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpsum/registry.hpp"

namespace dpsum {

enum class ReportFormat { kJson, kCsv, kMarkdown };

const char* ReportFormatName(ReportFormat f);
// Throws SchemaError for anything but json, csv or md.
ReportFormat ParseReportFormat(std::string_view name);

struct AuditConfig {
  // Ids or glob patterns ('*', '?'); empty or "all" selects everything.
  std::vector<std::string> filter;
  // Replaces the default grid of the named identity.
  std::map<std::string, std::vector<ParamPoint>> grids;
  double tol = kDefaultTol;
  std::int64_t budget = kDefaultBudget;
  ReportFormat format = ReportFormat::kJson;
  int parallelism = 1;
  bool strict = false;
  // Report timestamp. When unset: SOURCE_DATE_EPOCH, else the clock.
  std::optional<std::string> timestamp;
};

// Throws SchemaError when tol <= 0, budget < 1000, parallelism < 1, or a
// grid override names an unknown identity.
void validate(const AuditConfig& config);

bool matches_filter(const std::vector<std::string>& filter,
                    std::string_view id);
bool glob_match(std::string_view pattern, std::string_view text);

struct AuditSummary {
  std::int64_t total = 0;
  std::int64_t pass = 0;
  std::int64_t fail = 0;
  std::int64_t ambiguous = 0;
  std::int64_t skipped = 0;
  std::int64_t error = 0;
  // AMBIGUOUS verdicts on identities outside the shipped baseline.
  std::int64_t unexpected_ambiguous = 0;
  std::int64_t nonconvergence = 0;
};

struct AuditNote {
  std::string id;
  std::string notes;
  std::string alt_note;
};

struct AuditReport {
  std::string version;
  std::string precision;
  std::string timestamp;
  double tol = kDefaultTol;
  std::int64_t budget = kDefaultBudget;
  std::vector<VerificationResult> results;
  AuditSummary summary;
  std::vector<AuditNote> notes;  // every identity with a non-PASS result
};

const char* library_version();

// ISO-8601 UTC; see AuditConfig::timestamp.
std::string resolve_timestamp(const std::optional<std::string>& override);

AuditSummary summarize(const std::vector<VerificationResult>& results);

// Results in catalog order, then grid order, whatever the parallelism.
AuditReport run_audit(const AuditConfig& config);

// 0 clean; 1 any FAIL, any ERROR other than non-convergence, an AMBIGUOUS
// outside the baseline, or any AMBIGUOUS when strict; 3 non-convergence
// only.
int audit_exit_code(const AuditSummary& summary, bool strict);

std::string render_report(const AuditReport& report, ReportFormat format);

}  // namespace dpsum

#endif  // DPSUM_AUDIT_HPP_
