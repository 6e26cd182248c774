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


#include "dpsum/registry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "catalog/catalog.hpp"

namespace dpsum {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kPole: return "PoleError";
    case ErrorKind::kUnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::kDomain: return "DomainError";
    case ErrorKind::kNonConvergence: return "NonConvergence";
    case ErrorKind::kDivergent: return "Divergent";
    case ErrorKind::kUnsupportedShape: return "UnsupportedShape";
    case ErrorKind::kSchema: return "SchemaError";
  }
  return "Error";
}

const char* ModeName(Mode mode) {
  switch (mode) {
    case Mode::kConvergent: return "Convergent";
    case Mode::kPairedDivergent: return "PairedDivergent";
    case Mode::kFiniteSum: return "FiniteSum";
    case Mode::kContinuationOnly: return "ContinuationOnly";
    case Mode::kCrossCheck: return "CrossCheck";
  }
  return "?";
}

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kAmbiguous: return "AMBIGUOUS";
    case Verdict::kSkippedContinuation: return "SKIPPED_CONTINUATION";
    case Verdict::kError: return "ERROR";
  }
  return "?";
}

std::string VerificationResult::verdict_label() const {
  std::string s = VerdictName(verdict);
  if (verdict == Verdict::kError && error) {
    s += '(';
    s += ErrorKindName(*error);
    s += ')';
  }
  return s;
}

const std::vector<Identity>& catalog() {
  static const std::vector<Identity> entries = [] {
    std::vector<Identity> out;
    catalog_detail::AddHypergeometric(out);
    catalog_detail::AddFinite(out);
    catalog_detail::AddInfinite(out);
    catalog_detail::AddEuler(out);
    catalog_detail::AddAppendix(out);
    catalog_detail::AddCross(out);
    return out;
  }();
  return entries;
}

const Identity* find_identity(std::string_view id) {
  for (const Identity& e : catalog()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const Identity& identity(std::string_view id) {
  const Identity* e = find_identity(id);
  if (e == nullptr) throw SchemaError("unknown identity " + std::string(id));
  return *e;
}

void check_schema(const Identity& e, const ParamPoint& p) {
  for (const ParamSpec& s : e.schema) {
    if (!p.has(s.name)) {
      throw SchemaError(e.id + ": missing parameter " + s.name);
    }
    if (s.type == ParamType::kInteger) p.integer(s.name);
  }
  for (const auto& [name, value] : p.entries()) {
    const bool known =
        std::any_of(e.schema.begin(), e.schema.end(),
                    [&](const ParamSpec& s) { return s.name == name; });
    if (!known) throw SchemaError(e.id + ": unexpected parameter " + name);
  }
}

bool in_domain(const Identity& e, const ParamPoint& p) {
  try {
    check_schema(e, p);
  } catch (const SchemaError&) {
    return false;
  }
  for (const ParamSpec& s : e.schema) {
    const double v = p.get(s.name);
    if (!(v >= s.lo && v <= s.hi)) return false;
    if (s.step > 0.0) {
      const double k = (v - s.lo) / s.step;
      if (std::fabs(k - std::nearbyint(k)) > 1e-9) return false;
    }
  }
  return !e.in_domain || e.in_domain(p);
}

std::vector<ParamPoint> sample_points(const Identity& e, int count,
                                      std::uint64_t seed) {
  std::vector<ParamPoint> out;
  if (count <= 0) return out;
  std::mt19937_64 rng(seed);
  const long max_tries = 1000L * count;
  for (long tries = 0; tries < max_tries && static_cast<int>(out.size()) < count;
       ++tries) {
    ParamPoint p;
    for (const ParamSpec& s : e.schema) {
      double v;
      if (s.type == ParamType::kInteger) {
        std::uniform_int_distribution<std::int64_t> d(
            static_cast<std::int64_t>(s.lo), static_cast<std::int64_t>(s.hi));
        v = static_cast<double>(d(rng));
      } else if (s.step > 0.0) {
        const auto n = static_cast<std::int64_t>(
            std::floor((s.hi - s.lo) / s.step + 1e-9));
        std::uniform_int_distribution<std::int64_t> d(0, n);
        v = s.lo + s.step * static_cast<double>(d(rng));
      } else {
        std::uniform_real_distribution<double> d(s.lo, s.hi);
        v = d(rng);
      }
      p.set(s.name, v);
    }
    if (in_domain(e, p)) out.push_back(std::move(p));
  }
  return out;
}

double eval_closed(std::string_view id, const ParamPoint& p) {
  const Identity& e = identity(id);
  check_schema(e, p);
  if (!e.rhs) throw UnsupportedShape(e.id + ": no closed form");
  return e.rhs(p);
}

double eval_closed_lhs(std::string_view id, const ParamPoint& p) {
  const Identity& e = identity(id);
  check_schema(e, p);
  if (!e.lhs_closed) {
    throw UnsupportedShape(e.id + ": left-hand side is not a closed form");
  }
  return e.lhs_closed(p);
}

SumResult eval_series(std::string_view id, const ParamPoint& p, double tol,
                      std::int64_t budget) {
  const Identity& e = identity(id);
  check_schema(e, p);
  if (!e.lhs) throw UnsupportedShape(e.id + ": no series form");
  const LhsSeries s = e.lhs(p);
  if (s.b) return sum_infinite_paired(s.a, *s.b, tol, budget);
  return sum_series(s.a, tol, budget);
}

}  // namespace dpsum
