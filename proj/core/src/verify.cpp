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


#include <algorithm>
#include <cmath>
#include <string>

#include "dpsum/hyper.hpp"
#include "dpsum/registry.hpp"

namespace dpsum {
namespace {

struct Side {
  double value = 0.0;
  bool has_series = false;
  SumResult series;
};

Side EvalLeft(const Identity& e, const LhsBuilder& builder,
              const ParamPoint& p, double tol, std::int64_t budget) {
  Side s;
  if (builder) {
    const LhsSeries ls = builder(p);
    s.has_series = true;
    s.series = ls.b ? sum_infinite_paired(ls.a, *ls.b, tol, budget)
                    : sum_series(ls.a, tol, budget);
    s.value = s.series.value;
    return s;
  }
  if (e.lhs_closed) {
    s.value = e.lhs_closed(p);
    return s;
  }
  throw UnsupportedShape(e.id + ": no left-hand side");
}

void RequireFinite(double v, const char* side) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(side) + " side is not finite");
  }
}

struct Compare {
  double abs = 0.0;
  double rel = 0.0;
  double tol_used = 0.0;
  bool pass = false;
};

Compare Check(double lhs, double rhs, double tol, double err_est) {
  Compare c;
  c.abs = std::fabs(lhs - rhs);
  const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
  c.rel = scale > 0.0 ? c.abs / scale : 0.0;
  c.tol_used = std::max(tol, 10.0 * err_est);
  c.pass = c.abs <= c.tol_used || c.rel <= c.tol_used;
  return c;
}

// Evaluates the alternative reading; false when it fails or throws.
bool AltPasses(const Identity& e, const ParamPoint& p, const Side& literal,
               double rhs, double tol, std::int64_t budget,
               VerificationResult& r) {
  r.alt_evaluated = true;
  try {
    const Side lhs = e.alt_lhs ? EvalLeft(e, e.alt_lhs, p, tol, budget)
                               : literal;
    const double alt_rhs = e.alt_rhs ? e.alt_rhs(p) : rhs;
    r.alt_lhs_value = lhs.value;
    r.alt_rhs_value = alt_rhs;
    if (!std::isfinite(lhs.value) || !std::isfinite(alt_rhs)) return false;
    const Compare c = Check(lhs.value, alt_rhs, tol,
                            lhs.has_series ? lhs.series.abs_error_est : 0.0);
    r.alt_abs_diff = c.abs;
    return c.pass;
  } catch (const Error& ex) {
    r.message = std::string("alternative: ") + ex.what();
    return false;
  }
}

}  // namespace

VerificationResult verify(std::string_view id, const ParamPoint& p,
                          double tol, std::int64_t budget) {
  VerificationResult r;
  r.identity_id = std::string(id);
  r.params = p;
  take_limit_mark();
  try {
    const Identity& e = identity(id);
    check_schema(e, p);
    if (e.mode == Mode::kContinuationOnly) {
      r.verdict = Verdict::kSkippedContinuation;
      r.message = "checked by cross_check only";
      if (!e.notes.empty()) r.message += "; " + e.notes;
      return r;
    }
    Side lhs;
    try {
      lhs = EvalLeft(e, e.lhs, p, tol, budget);
    } catch (const NonConvergence& ex) {
      r.has_series = true;
      r.series = ex.partial();
      r.lhs_value = ex.partial().value;
      throw;
    }
    r.has_series = lhs.has_series;
    r.series = lhs.series;
    r.lhs_value = lhs.value;
    r.rhs_value = e.rhs(p);
    r.limit_path = take_limit_mark();
    RequireFinite(r.lhs_value, "left");
    RequireFinite(r.rhs_value, "right");

    const Compare c = Check(r.lhs_value, r.rhs_value, tol,
                            lhs.has_series ? lhs.series.abs_error_est : 0.0);
    r.abs_diff = c.abs;
    r.rel_diff = c.rel;
    r.tol_used = c.tol_used;
    if (c.pass) {
      r.verdict = Verdict::kPass;
    } else if (e.alt_lhs || e.alt_rhs) {
      r.verdict = AltPasses(e, p, lhs, r.rhs_value, tol, budget, r)
                      ? Verdict::kAmbiguous
                      : Verdict::kFail;
      if (r.verdict == Verdict::kAmbiguous) r.message = e.alt_note;
    } else {
      r.verdict = Verdict::kFail;
    }
  } catch (const Error& ex) {
    r.verdict = Verdict::kError;
    r.error = ex.kind();
    r.message = ex.what();
    r.limit_path = take_limit_mark() || r.limit_path;
  } catch (const std::exception& ex) {
    r.verdict = Verdict::kError;
    r.error = ErrorKind::kDomain;
    r.message = ex.what();
  }
  return r;
}

namespace {

ParamPoint Project(const Identity& e, const ParamPoint& p) {
  ParamPoint out;
  for (const ParamSpec& s : e.schema) {
    if (p.has(s.name)) out.set(s.name, p.get(s.name));
  }
  return out;
}

}  // namespace

VerificationResult cross_check(std::string_view id_a, std::string_view id_b,
                               const ParamPoint& p, double tol,
                               std::int64_t budget) {
  for (const Identity& e : catalog()) {
    if (e.mode != Mode::kCrossCheck || e.links.size() != 2) continue;
    if ((e.links[0] == id_a && e.links[1] == id_b) ||
        (e.links[0] == id_b && e.links[1] == id_a)) {
      return verify(e.id, Project(e, p), tol, budget);
    }
  }
  VerificationResult r;
  r.identity_id = std::string(id_a) + "~" + std::string(id_b);
  r.params = p;
  take_limit_mark();
  try {
    const Identity& a = identity(id_a);
    const Identity& b = identity(id_b);
    r.lhs_value = eval_closed(a.id, Project(a, p));
    r.rhs_value = eval_closed(b.id, Project(b, p));
    r.limit_path = take_limit_mark();
    RequireFinite(r.lhs_value, "first");
    RequireFinite(r.rhs_value, "second");
    const Compare c = Check(r.lhs_value, r.rhs_value, tol, 0.0);
    r.abs_diff = c.abs;
    r.rel_diff = c.rel;
    r.tol_used = c.tol_used;
    r.verdict = c.pass ? Verdict::kPass : Verdict::kFail;
  } catch (const Error& ex) {
    r.verdict = Verdict::kError;
    r.error = ex.kind();
    r.message = ex.what();
  }
  return r;
}

}  // namespace dpsum
