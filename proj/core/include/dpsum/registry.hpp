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


#ifndef DPSUM_REGISTRY_HPP_
#define DPSUM_REGISTRY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dpsum/errors.hpp"
#include "dpsum/series.hpp"

namespace dpsum {

enum class Mode {
  kConvergent,
  kPairedDivergent,
  kFiniteSum,
  kContinuationOnly,
  kCrossCheck,
};

const char* ModeName(Mode mode);

enum class ParamType { kReal, kInteger };

// One schema entry. [lo, hi] is the sampling range; step > 0 restricts
// sampling to lo + step * i (integer parameters always use step 1).
struct ParamSpec {
  std::string name;
  ParamType type = ParamType::kReal;
  double lo = 0.0;
  double hi = 1.0;
  double step = 0.0;
};

ParamSpec RealParam(std::string name, double lo, double hi, double step = 0);
ParamSpec IntParam(std::string name, std::int64_t lo, std::int64_t hi);

// Named parameter values in insertion order.
class ParamPoint {
 public:
  ParamPoint() = default;

  ParamPoint& set(std::string_view name, double value);
  bool has(std::string_view name) const;
  // Throws SchemaError when the name is missing.
  double get(std::string_view name) const;
  double operator[](std::string_view name) const { return get(name); }
  // Throws SchemaError when the value is not an integer.
  std::int64_t integer(std::string_view name) const;

  const std::vector<std::pair<std::string, double>>& entries() const {
    return values_;
  }
  bool empty() const { return values_.empty(); }

  // "b=0.7 c=1.9", shortest round-trip formatting.
  std::string str() const;

  // Accepts name=value pairs separated by spaces, commas or semicolons.
  static ParamPoint parse(std::string_view text);

  bool operator==(const ParamPoint& other) const {
    return values_ == other.values_;
  }

 private:
  std::vector<std::pair<std::string, double>> values_;
};

// Left-hand side as a series; `b` is set for paired-divergent sums and is
// subtracted term by term from `a`.
struct LhsSeries {
  SeriesSpec a;
  std::optional<SeriesSpec> b;
};

using LhsBuilder = std::function<LhsSeries(const ParamPoint&)>;
using ClosedForm = std::function<double(const ParamPoint&)>;
using DomainCheck = std::function<bool(const ParamPoint&)>;

struct Identity {
  std::string id;
  std::string title;
  Mode mode = Mode::kConvergent;
  std::vector<ParamSpec> schema;

  // Exactly one of lhs / lhs_closed is set, except for ContinuationOnly
  // entries which have neither.
  LhsBuilder lhs;
  ClosedForm lhs_closed;
  ClosedForm rhs;

  // Alternative reading of a suspected misprint. Either side may be
  // replaced; unset members fall back to the literal reading.
  LhsBuilder alt_lhs;
  ClosedForm alt_rhs;
  std::string alt_note;

  std::string notes;
  std::vector<ParamPoint> grid;
  DomainCheck in_domain;  // beyond the schema ranges; may be empty

  // CrossCheck entries: the pair of identities this entry links.
  std::vector<std::string> links;

  // Listed AMBIGUOUS in the shipped baseline.
  bool baseline_ambiguous = false;
};

const std::vector<Identity>& catalog();

// nullptr when absent.
const Identity* find_identity(std::string_view id);
// Throws SchemaError when absent.
const Identity& identity(std::string_view id);

// Throws SchemaError on a missing name, a non-integer value for an integer
// name, or a name outside the schema.
void check_schema(const Identity& e, const ParamPoint& p);

// Schema ranges plus the identity's own domain check.
bool in_domain(const Identity& e, const ParamPoint& p);

// count points drawn uniformly from the schema ranges (rejecting points
// outside the domain), reproducible for a given seed.
std::vector<ParamPoint> sample_points(const Identity& e, int count,
                                      std::uint64_t seed);

// rho(alpha, q) = sum_l [psi(alpha+q+l) - psi(alpha+l)] / (l+1).
double rho(double alpha, double q);

double eval_closed(std::string_view id, const ParamPoint& p);
// Value of a closed-form left-hand side (CrossCheck entries only).
double eval_closed_lhs(std::string_view id, const ParamPoint& p);
SumResult eval_series(std::string_view id, const ParamPoint& p,
                      double tol = kDefaultTol,
                      std::int64_t budget = kDefaultBudget);

enum class Verdict { kPass, kFail, kAmbiguous, kSkippedContinuation, kError };

const char* VerdictName(Verdict v);

struct VerificationResult {
  std::string identity_id;
  ParamPoint params;
  double lhs_value = 0.0;
  double rhs_value = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  double tol_used = 0.0;
  Verdict verdict = Verdict::kError;
  std::optional<ErrorKind> error;
  std::string message;

  bool has_series = false;
  SumResult series;
  bool limit_path = false;

  // Filled when the literal reading failed and an alternative exists.
  bool alt_evaluated = false;
  double alt_lhs_value = 0.0;
  double alt_rhs_value = 0.0;
  double alt_abs_diff = 0.0;

  // "PASS", "ERROR(PoleError)", ...
  std::string verdict_label() const;
};

// Never throws for catalog ids; errors become Verdict::kError.
VerificationResult verify(std::string_view id, const ParamPoint& p,
                          double tol = kDefaultTol,
                          std::int64_t budget = kDefaultBudget);

// Compares two closed forms. A CrossCheck entry linking the pair takes
// precedence; otherwise both right-hand sides are evaluated at the
// parameters each schema names.
VerificationResult cross_check(std::string_view id_a, std::string_view id_b,
                               const ParamPoint& p, double tol = kDefaultTol,
                               std::int64_t budget = kDefaultBudget);

}  // namespace dpsum

#endif  // DPSUM_REGISTRY_HPP_
