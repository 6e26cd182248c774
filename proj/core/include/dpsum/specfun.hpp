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

#ifndef DPSUM_SPECFUN_HPP_
#define DPSUM_SPECFUN_HPP_

#include <cstdint>

#include "dpsum/errors.hpp"

namespace dpsum {

// Arguments closer than this to a non-positive integer raise PoleError.
inline constexpr double kPoleGuard = 1e-8;

// Highest supported polygamma order.
inline constexpr int kMaxPolygammaOrder = 8;

struct SignedLogValue {
  double log_abs;
  int sign;  // -1, 0 or +1; 0 only for an exact zero

  double value() const;
};

double digamma(double x);
// n = 0 delegates to digamma.
double polygamma(int n, double x);

SignedLogValue log_gamma_signed(double x);
double gamma_ratio(double num, double den);
double pochhammer(double x, std::int64_t n);

// H_k(a) = sum_{l=1}^{k} 1/(l+a-1).
double harmonic(std::int64_t k, double a);
// H'_k(a) = -sum_{l=1}^{k} 1/(l+a-1)^2.
double harmonic_prime(std::int64_t k, double a);

double zeta_int(int n);
double dilog(double x);
double binomial(std::int64_t n, std::int64_t k);

// Throws PoleError when x lies within kPoleGuard of a non-positive integer.
void check_pole(double x, const char* where);

}  // namespace dpsum

#endif  // DPSUM_SPECFUN_HPP_
