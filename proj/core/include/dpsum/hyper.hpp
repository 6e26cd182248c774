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


#ifndef DPSUM_HYPER_HPP_
#define DPSUM_HYPER_HPP_

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "dpsum/series.hpp"

namespace dpsum {

// Parameters of pFq(a_1..a_p; b_1..b_q | 1).
struct PFQParams {
  std::vector<double> numerator;
  std::vector<double> denominator;
};

enum class PFQClass { kTerminating, kConvergent, kDivergent };

struct PFQShape {
  PFQClass cls = PFQClass::kDivergent;
  std::int64_t last_index = -1;  // terminating only
  double decay = 0.0;            // 1 + sum(b) - sum(a), convergent only
};

PFQShape classify(const PFQParams& p);

// Series whose terms are the pFq(1) terms times scale. Throws Divergent
// when the classifier rejects the parameters and PoleError when a
// denominator parameter is hit before the series terminates.
SeriesSpec pfq_series(const PFQParams& p, double scale = 1.0);

SumResult pfq_unit_bruteforce(const PFQParams& p, double tol = kDefaultTol,
                              std::int64_t budget = kDefaultBudget);

// prod Gamma(num) / prod Gamma(den), combined in signed-log space. A
// denominator argument at a pole contributes a zero factor.
double gamma_product(std::initializer_list<double> num,
                     std::initializer_list<double> den);

// Limit of f at a removable singularity x0 from the symmetric means
// m(e) = (f(x0 + e) + f(x0 - e)) / 2 at e = eps, 2 eps, 4 eps, Richardson
// extrapolated to O(eps^6). The offsets must stay clear of neighbouring
// singularities. Marks the calling thread's limit flag.
double symmetric_limit(const std::function<double(double)>& f, double x0,
                       double eps = 1e-3);

// Per-thread record of whether a removable-singularity branch was taken.
void mark_limit_path();
bool take_limit_mark();

// 3F2(1, n+1, beta; n+2, alpha | 1).
double f32_shifted_unit(std::int64_t n, double alpha, double beta);

// 3F2(a, b, c; n+b, c+1 | 1), n >= 1. Integer a and integer b - c are
// removable singularities of the closed form and go through limits.
double f32_lemma22(double a, double b, double c, std::int64_t n);

// The a = 1 case of f32_lemma22 in explicit digamma form.
double f32_lemma22_a1(double b, double c, std::int64_t n);

// 4F3(1, 1, 1, -k; 2, 2, 1+c | 1) in its two digamma forms.
struct TerminatingForms {
  double form_a = 0.0;
  double form_b = 0.0;
};
TerminatingForms f43_terminating(std::int64_t k, double c);

// 4F3(1, 1, 1, 1; 2, 2, 1+m | 1) / m for integer m >= 2.
double f43_integer(std::int64_t m);

enum class HalfBranch { kPlus, kMinus };

// 4F3(1, 1, 1, 1; 2, 2, 3/2 +- n | 1) / (1/2 +- n). The minus branch is
// an analytic continuation for n >= 2.
double f43_half(std::int64_t n, HalfBranch branch);

// 4F3(1, 1, 1, 1; 2, 2, q+1 | 1) / q through the convergent series
//   sum psi'(l+1)/(q+l) - gamma psi'(q) - psi(q) psi'(q) + psi''(q)/2,
// which stays meaningful for q < 0 where the 4F3 series diverges.
SumResult f43_continuation(double q, double tol = kDefaultTol,
                           std::int64_t budget = kDefaultBudget);

}  // namespace dpsum

#endif  // DPSUM_HYPER_HPP_
