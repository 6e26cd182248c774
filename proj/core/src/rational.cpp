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
#include <cstdlib>

#include "dpsum/errors.hpp"
#include "dpsum/series.hpp"
#include "dpsum/specfun.hpp"
#include "neumaier.hpp"

namespace dpsum {

double RationalTerm::operator()(double n) const {
  double v = coef;
  for (const LinearFactor& f : factors) v /= std::pow(n + f.shift, f.power);
  return v;
}

int RationalTerm::degree() const {
  int d = 0;
  for (const LinearFactor& f : factors) d += f.power;
  return d;
}

PartialFractions partial_fractions(const RationalTerm& r) {
  PartialFractions pf;
  std::vector<int> powers;
  for (const LinearFactor& f : r.factors) {
    if (f.power < 1) throw UnsupportedShape("partial_fractions: power < 1");
    bool merged = false;
    for (std::size_t i = 0; i < pf.shifts.size(); ++i) {
      if (pf.shifts[i] == f.shift) {
        powers[i] += f.power;
        merged = true;
      }
    }
    if (!merged) {
      pf.shifts.push_back(f.shift);
      powers.push_back(f.power);
    }
  }
  const std::size_t nf = pf.shifts.size();
  pf.c.resize(nf);
  for (std::size_t i = 0; i < nf; ++i) {
    // g(n) = coef * prod_{j != i} (n + a_j)^{-p_j}; c_{i,m} is
    // g^{(p_i - m)}(-a_i) / (p_i - m)!. Derivatives of g follow from its
    // log-derivative L through g^{(r+1)} = sum_s C(r,s) g^{(s)} L^{(r-s)}.
    const double n = -pf.shifts[i];
    const int pi = powers[i];
    std::vector<double> dl(pi, 0.0);  // L^{(r)}(n)
    for (std::size_t j = 0; j < nf; ++j) {
      if (j == i) continue;
      const double d = n + pf.shifts[j];
      double fact = 1.0;
      for (int k = 0; k < pi; ++k) {
        if (k > 0) fact *= k;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        dl[k] += -powers[j] * sign * fact / std::pow(d, k + 1);
      }
    }
    std::vector<double> g(pi, 0.0);
    g[0] = r.coef;
    for (std::size_t j = 0; j < nf; ++j) {
      if (j != i) g[0] /= std::pow(n + pf.shifts[j], powers[j]);
    }
    for (int k = 0; k + 1 < pi; ++k) {
      double s = 0.0;
      double binom = 1.0;
      for (int m = 0; m <= k; ++m) {
        s += binom * g[m] * dl[k - m];
        binom = binom * (k - m) / (m + 1);
      }
      g[k + 1] = s;
    }
    pf.c[i].assign(pi, 0.0);
    double fact = 1.0;
    for (int k = 0; k < pi; ++k) {
      if (k > 0) fact *= k;
      pf.c[i][pi - 1 - k] = g[k] / fact;
    }
  }
  return pf;
}

namespace {

// F(n0) with sum_{n=n0}^{inf} R(n) = F(n0) when the simple-pole residues
// cancel; F differences are valid for any degree.
double Antidifference(const PartialFractions& pf, double n0) {
  Neumaier s;
  for (std::size_t i = 0; i < pf.shifts.size(); ++i) {
    const double x = n0 + pf.shifts[i];
    double fact = 1.0;
    for (std::size_t m = 1; m <= pf.c[i].size(); ++m) {
      const double c = pf.c[i][m - 1];
      if (m > 1) fact *= static_cast<double>(m - 1);
      if (c == 0.0) continue;
      if (m == 1) {
        s.Add(-c * digamma(x));
      } else {
        // sum_{l>=0} (l+x)^{-m} = (-1)^m psi^{(m-1)}(x) / (m-1)!
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        s.Add(c * sign * polygamma(static_cast<int>(m - 1), x) / fact);
      }
    }
  }
  return s.Sum();
}

}  // namespace

double rational_tail_sum(const RationalTerm& r, double n0) {
  if (r.degree() < 2) {
    throw UnsupportedShape("rational_tail_sum: degree below 2 diverges");
  }
  return Antidifference(partial_fractions(r), n0);
}

double rational_finite_sum(const RationalTerm& r, std::int64_t upper) {
  if (upper < 0) return 0.0;
  if (r.degree() < 1) return r.coef * static_cast<double>(upper + 1);
  const PartialFractions pf = partial_fractions(r);
  return Antidifference(pf, 0.0) -
         Antidifference(pf, static_cast<double>(upper + 1));
}

}  // namespace dpsum
