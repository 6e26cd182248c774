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

#ifndef DPSUM_SERIES_HPP_
#define DPSUM_SERIES_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dpsum/errors.hpp"

namespace dpsum {

inline constexpr double kDefaultTol = 1e-8;
inline constexpr std::int64_t kDefaultBudget = 1000000;
inline constexpr std::int64_t kMinBudget = 1000;

// Terms are always requested in ascending order starting at start_index,
// each index exactly once per summation pass, so a term may carry state
// (see RecurrenceTerm below). A fresh pass restarts from start_index.
using TermFn = std::function<double(std::int64_t)>;

enum class TailKind { kPowerLog, kGeometric, kTerminating, kUnknown };

// Asserted large-index behaviour of the terms. For kPowerLog the terms
// behave like C (ln l)^p / l^q; q is real and must exceed 1.
struct TailClass {
  TailKind kind = TailKind::kUnknown;
  int p = 0;
  double q = 2.0;

  static TailClass PowerLog(int p, double q) {
    return {TailKind::kPowerLog, p, q};
  }
  static TailClass Geometric() { return {TailKind::kGeometric, 0, 0.0}; }
  static TailClass Terminating() { return {TailKind::kTerminating, 0, 0.0}; }
  static TailClass Unknown() { return {TailKind::kUnknown, 0, 0.0}; }
};

struct SeriesSpec {
  TermFn term;
  std::int64_t start_index = 0;
  bool infinite = true;
  std::int64_t upper = 0;  // inclusive, finite kind only
  TailClass tail;

  static SeriesSpec Finite(TermFn term, std::int64_t start,
                           std::int64_t upper);
  static SeriesSpec Infinite(TermFn term, std::int64_t start,
                             TailClass tail);
};

struct SumResult {
  double value = 0.0;
  double abs_error_est = 0.0;
  std::int64_t terms_used = 0;
  bool accelerated = false;
  bool converged = false;
};

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, const SumResult& partial)
      : Error(ErrorKind::kNonConvergence, what), partial_(partial) {}
  const SumResult& partial() const noexcept { return partial_; }

 private:
  SumResult partial_;
};

SumResult sum_finite(const SeriesSpec& spec);

// Throws NonConvergence (carrying the best estimate) when the error
// estimate still exceeds tol once the budget is exhausted.
SumResult sum_infinite(const SeriesSpec& spec, double tol = kDefaultTol,
                       std::int64_t budget = kDefaultBudget);

// Sums term_a(l) - term_b(l) under a single index. The tail class of
// spec_a describes the difference.
SumResult sum_infinite_paired(const SeriesSpec& spec_a,
                              const SeriesSpec& spec_b,
                              double tol = kDefaultTol,
                              std::int64_t budget = kDefaultBudget);

// Dispatches on spec.infinite.
SumResult sum_series(const SeriesSpec& spec, double tol = kDefaultTol,
                     std::int64_t budget = kDefaultBudget);

// Term defined by t(start) = first and t(l+1) = t(l) * ratio(l).
// Non-sequential access recomputes from the start.
TermFn RecurrenceTerm(std::int64_t start, double first,
                      std::function<double(std::int64_t)> ratio);

// (n + shift)^power in a denominator.
struct LinearFactor {
  double shift = 0.0;
  int power = 1;
};

// coef / prod_i (n + shift_i)^power_i.
struct RationalTerm {
  double coef = 1.0;
  std::vector<LinearFactor> factors;

  double operator()(double n) const;
  int degree() const;
};

// R(n) = sum_i sum_{m=1}^{power_i} c[i][m-1] / (n + shift_i)^m, with the
// shifts merged so that they are pairwise distinct.
struct PartialFractions {
  std::vector<double> shifts;
  std::vector<std::vector<double>> c;
};

PartialFractions partial_fractions(const RationalTerm& r);

// sum_{l>=0} R(n0 + l) in closed form; requires degree >= 2.
double rational_tail_sum(const RationalTerm& r, double n0);

// sum_{n=0}^{upper} R(n) in closed form; empty when upper < 0.
double rational_finite_sum(const RationalTerm& r, std::int64_t upper);

// One summation level of
//   sum_{n1,...,nk >= 0} prod_i R_i(n1 + ... + ni).
using SumLevel = RationalTerm;

// Rewrites the nested sum as a single-index series whose term embeds the
// closed forms of the inner sums. The innermost level must have degree
// >= 2 (otherwise UnsupportedShape). A single level maps to itself.
SeriesSpec collapse_multisum(const std::vector<SumLevel>& levels);

}  // namespace dpsum

#endif  // DPSUM_SERIES_HPP_
