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


#ifndef DPSUM_SRC_CATALOG_CATALOG_HPP_
#define DPSUM_SRC_CATALOG_CATALOG_HPP_

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dpsum/constants.hpp"
#include "dpsum/hyper.hpp"
#include "dpsum/registry.hpp"
#include "dpsum/specfun.hpp"

namespace dpsum::catalog_detail {

inline double Psi(double x) { return digamma(x); }
inline double Psi1(double x) { return polygamma(1, x); }
inline double Psi2(double x) { return polygamma(2, x); }
inline double D(std::int64_t n) { return static_cast<double>(n); }
inline const ConstantPool& K() { return constants(); }

// Distance from x to the nearest integer is at least gap.
inline bool OffInt(double x, double gap = 0.05) {
  return std::fabs(x - std::nearbyint(x)) >= gap;
}

// Either clear of the removable point by gap or sitting on it exactly,
// where a limit branch takes over.
inline bool ClearOrOn(double distance, double gap = 0.05) {
  return std::fabs(distance) >= gap || std::fabs(distance) < 1e-6;
}

// OffInt, but also admitting exact integers.
inline bool ClearOfInt(double x, double gap = 0.05) {
  return ClearOrOn(x - std::nearbyint(x), gap);
}

inline std::vector<ParamPoint> Points(std::initializer_list<const char*> s) {
  std::vector<ParamPoint> out;
  for (const char* t : s) out.push_back(ParamPoint::parse(t));
  return out;
}

inline SeriesSpec Inf(TermFn term, TailClass tail, std::int64_t start = 0) {
  return SeriesSpec::Infinite(std::move(term), start, tail);
}

inline SeriesSpec Fin(TermFn term, std::int64_t upper,
                      std::int64_t start = 0) {
  return SeriesSpec::Finite(std::move(term), start, upper);
}

inline LhsSeries One(SeriesSpec s) { return {std::move(s), std::nullopt}; }
inline LhsSeries Pair(SeriesSpec a, SeriesSpec b) {
  return {std::move(a), std::move(b)};
}

// Gamma(x + l) / Gamma(y + l) by recurrence from l = start.
inline TermFn GammaRatioTerm(double x, double y, std::int64_t start = 0) {
  return RecurrenceTerm(start, gamma_ratio(x + D(start), y + D(start)),
                        [x, y](std::int64_t l) {
                          return (x + D(l)) / (y + D(l));
                        });
}

// Appends a default-constructed entry; fill it before the next call.
inline Identity& Add(std::vector<Identity>& out, std::string id,
                     std::string title, Mode mode) {
  out.emplace_back();
  Identity& e = out.back();
  e.id = std::move(id);
  e.title = std::move(title);
  e.mode = mode;
  return e;
}

// V_k - V_{k-1} for the EQ_053 recursion.
double Eq053Increment(std::int64_t k);

void AddHypergeometric(std::vector<Identity>& out);
void AddFinite(std::vector<Identity>& out);
void AddInfinite(std::vector<Identity>& out);
void AddEuler(std::vector<Identity>& out);
void AddAppendix(std::vector<Identity>& out);
void AddCross(std::vector<Identity>& out);

}  // namespace dpsum::catalog_detail

#endif  // DPSUM_SRC_CATALOG_CATALOG_HPP_
