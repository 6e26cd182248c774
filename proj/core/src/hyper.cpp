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


#include "dpsum/hyper.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "dpsum/constants.hpp"
#include "dpsum/errors.hpp"
#include "dpsum/specfun.hpp"

namespace dpsum {
namespace {

// Parameter gaps below this are treated as removable singularities.
constexpr double kLimitGap = 1e-6;

thread_local bool g_limit_mark = false;

bool AtPole(double x) {
  return x <= kPoleGuard && std::fabs(x - std::nearbyint(x)) <= kPoleGuard;
}

bool NearInteger(double x, double gap = kLimitGap) {
  return std::fabs(x - std::nearbyint(x)) < gap;
}

double Psi(double x) { return digamma(x); }
double Psi1(double x) { return polygamma(1, x); }
double Psi2(double x) { return polygamma(2, x); }

}  // namespace

void mark_limit_path() { g_limit_mark = true; }

bool take_limit_mark() {
  const bool was = g_limit_mark;
  g_limit_mark = false;
  return was;
}

PFQShape classify(const PFQParams& p) {
  PFQShape shape;
  std::int64_t last = -1;
  for (double a : p.numerator) {
    const double r = std::nearbyint(a);
    if (r <= 0 && std::fabs(a - r) <= 1e-12) {
      const auto k = static_cast<std::int64_t>(-r);
      if (last < 0 || k < last) last = k;
    }
  }
  if (last >= 0) {
    shape.cls = PFQClass::kTerminating;
    shape.last_index = last;
    return shape;
  }
  double excess = 0.0;
  for (double b : p.denominator) excess += b;
  for (double a : p.numerator) excess -= a;
  if (excess > 0.0) {
    shape.cls = PFQClass::kConvergent;
    shape.decay = 1.0 + excess;
  }
  return shape;
}

SeriesSpec pfq_series(const PFQParams& p, double scale) {
  const PFQShape shape = classify(p);
  if (shape.cls == PFQClass::kDivergent) {
    throw Divergent("pfq: sum(b) - sum(a) <= 0 and no terminating parameter");
  }
  for (double b : p.denominator) {
    if (shape.cls == PFQClass::kTerminating) {
      for (std::int64_t l = 0; l < shape.last_index; ++l) {
        if (std::fabs(b + static_cast<double>(l)) <= kPoleGuard) {
          throw PoleError("pfq: denominator parameter " + std::to_string(b) +
                          " reached before termination");
        }
      }
    } else if (AtPole(b)) {
      throw PoleError("pfq: denominator parameter " + std::to_string(b) +
                      " is a non-positive integer");
    }
  }
  auto ratio = [a = p.numerator, b = p.denominator](std::int64_t l) {
    const double x = static_cast<double>(l);
    double r = 1.0 / (1.0 + x);
    for (double ai : a) r *= ai + x;
    for (double bj : b) r /= bj + x;
    return r;
  };
  TermFn term = RecurrenceTerm(0, scale, ratio);
  if (shape.cls == PFQClass::kTerminating) {
    return SeriesSpec::Finite(std::move(term), 0, shape.last_index);
  }
  return SeriesSpec::Infinite(std::move(term), 0,
                              TailClass::PowerLog(0, shape.decay));
}

SumResult pfq_unit_bruteforce(const PFQParams& p, double tol,
                              std::int64_t budget) {
  return sum_series(pfq_series(p), tol, budget);
}

double gamma_product(std::initializer_list<double> num,
                     std::initializer_list<double> den) {
  double log_abs = 0.0;
  int sign = 1;
  for (double x : den) {
    if (AtPole(x)) return 0.0;
    const SignedLogValue g = log_gamma_signed(x);
    log_abs -= g.log_abs;
    sign *= g.sign;
  }
  for (double x : num) {
    const SignedLogValue g = log_gamma_signed(x);
    log_abs += g.log_abs;
    sign *= g.sign;
  }
  return sign * std::exp(log_abs);
}

double symmetric_limit(const std::function<double(double)>& f, double x0,
                       double eps) {
  mark_limit_path();
  auto mid = [&](double e) { return 0.5 * (f(x0 + e) + f(x0 - e)); };
  const double m1 = mid(eps);
  const double m2 = mid(2.0 * eps);
  const double m4 = mid(4.0 * eps);
  const double r1 = (4.0 * m1 - m2) / 3.0;
  const double r2 = (4.0 * m2 - m4) / 3.0;
  return (16.0 * r1 - r2) / 15.0;
}

double f32_shifted_unit(std::int64_t n, double alpha, double beta) {
  if (n < 0) throw DomainError("f32_shifted_unit: n must be >= 0");
  const double np1 = static_cast<double>(n + 1);
  if (AtPole(alpha - np1)) {
    return symmetric_limit(
        [&](double a) { return f32_shifted_unit(n, a, beta); }, alpha);
  }
  const double lead = gamma_product({alpha, beta - np1}, {beta, alpha - np1}) *
                      (Psi(alpha - np1) - Psi(alpha - beta));
  double corr = 0.0;
  for (std::int64_t l = 0; l < n; ++l) {
    const double s = static_cast<double>(l - n);
    corr += gamma_product({alpha, beta + s}, {beta, alpha + s}) /
            static_cast<double>(l + 1);
  }
  return np1 * (lead - corr);
}

double f32_lemma22(double a, double b, double c, std::int64_t n) {
  if (n < 1) throw DomainError("f32_lemma22: n must be >= 1");
  if (std::fabs(a - 1.0) < kLimitGap) {
    mark_limit_path();
    return f32_lemma22_a1(b, c, n);
  }
  if (NearInteger(a)) {
    const double a0 = std::nearbyint(a);
    return symmetric_limit([&](double x) { return f32_lemma22(x, b, c, n); },
                           a0);
  }
  if (NearInteger(b - c)) {
    const double b0 = c + std::nearbyint(b - c);
    return symmetric_limit([&](double x) { return f32_lemma22(a, x, c, n); },
                           b0);
  }
  const double lead = pochhammer(b, n) / pochhammer(b - c, n) *
                      gamma_product({c + 1.0, 1.0 - a}, {c + 1.0 - a});
  const double base = c - b + 1.0 - static_cast<double>(n);
  double corr = 0.0;
  for (std::int64_t l = 0; l < n; ++l) {
    const double nl = static_cast<double>(n - l);
    const double t = gamma_product({b + static_cast<double>(n), nl - a},
                                   {b + nl - a, nl}) /
                     pochhammer(base, l + 1);
    corr += (l % 2 == 0) ? t : -t;
  }
  return lead + c * corr;
}

double f32_lemma22_a1(double b, double c, std::int64_t n) {
  if (n < 1) throw DomainError("f32_lemma22_a1: n must be >= 1");
  if (NearInteger(b - c)) {
    const double b0 = c + std::nearbyint(b - c);
    return symmetric_limit([&](double x) { return f32_lemma22_a1(x, c, n); },
                           b0);
  }
  const double lead =
      c * (Psi(b) - Psi(c)) * pochhammer(b, n) / pochhammer(b - c, n);
  const double base = c - b + 1.0 - static_cast<double>(n);
  double corr = 0.0;
  for (std::int64_t l = 0; l + 2 <= n; ++l) {
    const double t =
        pochhammer(b + static_cast<double>(n - 1 - l), l + 1) /
        (static_cast<double>(n - l - 1) * pochhammer(base, l + 1));
    corr += (l % 2 == 0) ? t : -t;
  }
  return lead + c * corr;
}

TerminatingForms f43_terminating(std::int64_t k, double c) {
  if (k < 0) throw DomainError("f43_terminating: k must be >= 0");
  const double kp1 = static_cast<double>(k + 1);
  double sa = 0.0;
  double sb = 0.0;
  for (std::int64_t l = 0; l <= k; ++l) {
    const double x = static_cast<double>(l);
    sa += Psi(c + x + 1.0) / (1.0 + x);
    sb += Psi(x + 1.0) / (c + x);
  }
  TerminatingForms out;
  out.form_a = c / kp1 * (sa - Psi(c) * harmonic(k + 1, 1.0));
  out.form_b = c / kp1 * (Psi(kp1 + 1.0) * (Psi(c + kp1) - Psi(c)) - sb);
  return out;
}

double f43_integer(std::int64_t m) {
  if (m < 2) throw DomainError("f43_integer: m must be >= 2");
  const ConstantPool& k = constants();
  const double x = static_cast<double>(m);
  double corr = 0.0;
  for (std::int64_t l = 0; l <= m - 2; ++l) {
    const double t = Psi1(static_cast<double>(l + 2)) * binomial(m - 1, l + 1) /
                     static_cast<double>(l + 1);
    corr += (l % 2 == 0) ? t : -t;
  }
  return 0.5 * Psi2(x) - (Psi1(x) + k.pi_sq / 6.0) * (k.gamma_em + Psi(x)) +
         2.0 * k.zeta3 + corr;
}

double f43_half(std::int64_t n, HalfBranch branch) {
  if (n < 0) throw DomainError("f43_half: n must be >= 0");
  const ConstantPool& k = constants();
  const double q = 0.5 + static_cast<double>(n);
  double corr = 0.0;
  for (std::int64_t l = 0; l < n; ++l) {
    const double x = static_cast<double>(l);
    const double d = x - static_cast<double>(n) + 0.5;
    const double tail = Psi1(1.0 + x) * (1.0 / (x + 0.5) + 1.0 / d);
    if (branch == HalfBranch::kPlus) {
      corr += Psi(1.0 + x) / (d * d) - tail;
    } else {
      corr -= Psi(1.0 + x) / ((x + 0.5) * (x + 0.5)) - tail;
    }
  }
  const double base = 3.5 * k.zeta3 + 0.5 * Psi2(q);
  if (branch == HalfBranch::kPlus) {
    return base - 0.5 * k.pi_sq * Psi(q) - k.gamma_em * Psi1(q) + corr;
  }
  return base - k.pi_sq * (Psi(q) + 1.5 * k.gamma_em + k.ln2) +
         Psi1(q) * (2.0 * k.gamma_em + 2.0 * k.ln2 + Psi(q)) + corr;
}

SumResult f43_continuation(double q, double tol, std::int64_t budget) {
  check_pole(q, "f43_continuation");
  auto term = [q](std::int64_t l) {
    const double x = static_cast<double>(l);
    return Psi1(x + 1.0) / (q + x);
  };
  SumResult r = sum_infinite(
      SeriesSpec::Infinite(term, 0, TailClass::PowerLog(0, 2.0)), tol, budget);
  r.value += -constants().gamma_em * Psi1(q) - Psi(q) * Psi1(q) + 0.5 * Psi2(q);
  return r;
}

}  // namespace dpsum
