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


#include "dpsum/audit.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <thread>

namespace dpsum {

#ifndef DPSUM_VERSION
#define DPSUM_VERSION "0.0.0"
#endif

const char* library_version() { return DPSUM_VERSION; }

const char* ReportFormatName(ReportFormat f) {
  switch (f) {
    case ReportFormat::kJson: return "json";
    case ReportFormat::kCsv: return "csv";
    case ReportFormat::kMarkdown: return "md";
  }
  return "?";
}

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "md" || name == "markdown") return ReportFormat::kMarkdown;
  throw SchemaError("unknown report format " + std::string(name));
}

void validate(const AuditConfig& config) {
  if (!(config.tol > 0.0)) throw SchemaError("tol must be > 0");
  if (config.budget < 1000) throw SchemaError("budget must be >= 1000");
  if (config.parallelism < 1) throw SchemaError("parallelism must be >= 1");
  for (const auto& [id, points] : config.grids) {
    const Identity& e = identity(id);
    for (const ParamPoint& p : points) check_schema(e, p);
  }
}

bool glob_match(std::string_view pattern, std::string_view text) {
  std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

bool matches_filter(const std::vector<std::string>& filter,
                    std::string_view id) {
  if (filter.empty()) return true;
  for (const std::string& f : filter) {
    if (f == "all" || glob_match(f, id)) return true;
  }
  return false;
}

namespace {

std::string FormatUtc(std::time_t t) {
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string resolve_timestamp(const std::optional<std::string>& override) {
  if (override) return *override;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long v = std::strtoll(epoch, &end, 10);
    if (end != epoch && *end == '\0') return FormatUtc(static_cast<std::time_t>(v));
  }
  return FormatUtc(std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now()));
}

AuditSummary summarize(const std::vector<VerificationResult>& results) {
  AuditSummary s;
  for (const VerificationResult& r : results) {
    ++s.total;
    switch (r.verdict) {
      case Verdict::kPass: ++s.pass; break;
      case Verdict::kFail: ++s.fail; break;
      case Verdict::kAmbiguous: {
        ++s.ambiguous;
        const Identity* e = find_identity(r.identity_id);
        if (e == nullptr || !e->baseline_ambiguous) ++s.unexpected_ambiguous;
        break;
      }
      case Verdict::kSkippedContinuation: ++s.skipped; break;
      case Verdict::kError:
        ++s.error;
        if (r.error == ErrorKind::kNonConvergence) ++s.nonconvergence;
        break;
    }
  }
  return s;
}

int audit_exit_code(const AuditSummary& s, bool strict) {
  const std::int64_t hard_errors = s.error - s.nonconvergence;
  if (s.fail > 0 || hard_errors > 0 || s.unexpected_ambiguous > 0 ||
      (strict && s.ambiguous > 0)) {
    return 1;
  }
  if (s.nonconvergence > 0) return 3;
  return 0;
}

AuditReport run_audit(const AuditConfig& config) {
  validate(config);
  struct Task {
    const Identity* e;
    ParamPoint p;
  };
  std::vector<Task> tasks;
  for (const Identity& e : catalog()) {
    if (!matches_filter(config.filter, e.id)) continue;
    auto it = config.grids.find(e.id);
    const std::vector<ParamPoint>& grid =
        it != config.grids.end() ? it->second : e.grid;
    for (const ParamPoint& p : grid) tasks.push_back({&e, p});
  }

  std::vector<VerificationResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = verify(tasks[i].e->id, tasks[i].p, config.tol,
                          config.budget);
    }
  };
  const std::size_t n_threads = std::min<std::size_t>(
      static_cast<std::size_t>(config.parallelism),
      std::max<std::size_t>(tasks.size(), 1));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  AuditReport report;
  report.version = library_version();
  report.precision = "IEEE-754 binary64";
  report.timestamp = resolve_timestamp(config.timestamp);
  report.tol = config.tol;
  report.budget = config.budget;
  report.summary = summarize(results);
  // Tasks of one identity are contiguous.
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Identity& e = *tasks[i].e;
    if (results[i].verdict == Verdict::kPass) continue;
    if (!report.notes.empty() && report.notes.back().id == e.id) continue;
    report.notes.push_back({e.id, e.notes, e.alt_note});
  }
  report.results = std::move(results);
  return report;
}

}  // namespace dpsum
