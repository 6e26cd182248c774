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

#include "dpsum/specfun.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "dpsum/constants.hpp"
#include "dpsum/errors.hpp"
#include "neumaier.hpp"

namespace dpsum {
namespace {

// B_{2k}, k = 1..15.
constexpr std::array<double, 15> kBernoulli2k = {
    1.0 / 6,          -1.0 / 30,        1.0 / 42,
    -1.0 / 30,        5.0 / 66,         -691.0 / 2730,
    7.0 / 6,          -3617.0 / 510,    43867.0 / 798,
    -174611.0 / 330,  854513.0 / 138,   -236364091.0 / 2730,
    8553103.0 / 6,    -23749461029.0 / 870, 8615841276005.0 / 14322};

constexpr double kDigammaShift = 10.0;
// Below this, reflection replaces the upward recurrence.
constexpr double kReflectBelow = -20.0;

std::string Fmt(const char* where, double x) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s: pole at x = %.17g", where, x);
  return buf;
}

void CheckFinite(double x, const char* where) {
  if (!std::isfinite(x)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s: non-finite argument", where);
    throw DomainError(buf);
  }
}

// pi * cot(pi x), evaluated on the reduced argument.
double PiCotPi(double x) {
  const double r = x - std::nearbyint(x);
  const double pi = constants().pi;
  return pi * std::cos(pi * r) / std::sin(pi * r);
}

double DigammaAsymptotic(double x) {
  const double inv2 = 1.0 / (x * x);
  double pw = inv2;
  double s = 0.0;
  for (int k = 1; k <= 8; ++k) {
    s += kBernoulli2k[k - 1] / (2.0 * k) * pw;
    pw *= inv2;
  }
  return std::log(x) - 0.5 / x - s;
}

double DigammaShifted(double x) {
  Neumaier shift;
  while (x < kDigammaShift) {
    shift.Add(-1.0 / x);
    x += 1.0;
  }
  shift.Add(DigammaAsymptotic(x));
  return shift.Sum();
}

// Asymptotic psi^(n)(x) for n >= 1 and large x.
double PolygammaAsymptotic(int n, double x) {
  // (n-1)!/x^n + n!/(2 x^{n+1}) + sum_k B_{2k} (2k+n-1)!/((2k)! x^{2k+n})
  double fact_nm1 = 1.0;
  for (int i = 2; i < n; ++i) fact_nm1 *= i;
  const double xn = std::pow(x, n);
  double s = fact_nm1 / xn + fact_nm1 * n / (2.0 * xn * x);
  // coef_k = (2k+n-1)!/(2k)!
  double coef = fact_nm1;  // k = 0 value, (n-1)!/0!
  double pw = 1.0 / xn;
  const double inv2 = 1.0 / (x * x);
  for (int k = 1; k <= 15; ++k) {
    coef *= static_cast<double>((2 * k + n - 2) * (2 * k + n - 1)) /
            static_cast<double>((2 * k - 1) * (2 * k));
    pw *= inv2;
    const double term = kBernoulli2k[k - 1] * coef * pw;
    s += term;
    if (std::fabs(term) < 1e-18 * std::fabs(s)) break;
  }
  return (n % 2 == 1) ? s : -s;
}

double PolygammaShifted(int n, double x) {
  double fact_n = 1.0;
  for (int i = 2; i <= n; ++i) fact_n *= i;
  const double sgn = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^{n+1}
  const double xmin = kDigammaShift + 2.0 * n;
  Neumaier s;
  while (x < xmin) {
    s.Add(sgn * fact_n / std::pow(x, n + 1));
    x += 1.0;
  }
  s.Add(PolygammaAsymptotic(n, x));
  return s.Sum();
}

// d^n/dx^n cot(pi x) = pi^n P_n(cot(pi x)), P_0(c) = c,
// P_{n+1}(c) = -(1 + c^2) P_n'(c).
double CotDerivative(int n, double x) {
  const double r = x - std::nearbyint(x);
  const double pi = constants().pi;
  const double c = std::cos(pi * r) / std::sin(pi * r);
  std::vector<double> p = {0.0, 1.0};
  for (int k = 0; k < n; ++k) {
    std::vector<double> dp(p.size() > 1 ? p.size() - 1 : 1, 0.0);
    for (std::size_t i = 1; i < p.size(); ++i) dp[i - 1] = i * p[i];
    std::vector<double> next(dp.size() + 2, 0.0);
    for (std::size_t i = 0; i < dp.size(); ++i) {
      next[i] -= dp[i];
      next[i + 2] -= dp[i];
    }
    p.swap(next);
  }
  double v = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * c + p[i];
  return std::pow(pi, n) * v;
}

// ln Gamma(a) - ln Gamma(b) for a, b >= 10 without forming either term.
double LogGammaRatioLarge(double a, double b) {
  const double d = a - b;
  double r = d * std::log(b) + (a - 0.5) * std::log1p(d / b) - d;
  double pa = 1.0 / a, pb = 1.0 / b;
  const double ia2 = pa * pa, ib2 = pb * pb;
  for (int k = 1; k <= 8; ++k) {
    r += kBernoulli2k[k - 1] / (2.0 * k * (2 * k - 1)) * (pa - pb);
    pa *= ia2;
    pb *= ib2;
  }
  return r;
}

}  // namespace

void check_pole(double x, const char* where) {
  CheckFinite(x, where);
  if (x <= kPoleGuard && std::fabs(x - std::nearbyint(x)) <= kPoleGuard) {
    throw PoleError(Fmt(where, x));
  }
}

double SignedLogValue::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

double digamma(double x) {
  check_pole(x, "digamma");
  if (x < kReflectBelow) return DigammaShifted(1.0 - x) - PiCotPi(x);
  return DigammaShifted(x);
}

double polygamma(int n, double x) {
  if (n < 0 || n > kMaxPolygammaOrder) {
    throw UnsupportedOrder("polygamma: order " + std::to_string(n) +
                           " outside 0.." +
                           std::to_string(kMaxPolygammaOrder));
  }
  if (n == 0) return digamma(x);
  check_pole(x, "polygamma");
  if (x < kReflectBelow) {
    // psi^(n)(x) = (-1)^n psi^(n)(1-x) - pi d^n/dx^n cot(pi x)
    const double refl = PolygammaShifted(n, 1.0 - x);
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    return sgn * refl - constants().pi * CotDerivative(n, x);
  }
  return PolygammaShifted(n, x);
}

SignedLogValue log_gamma_signed(double x) {
  check_pole(x, "log_gamma_signed");
  int sign = 1;
  const double la = ::lgamma_r(x, &sign);
  return {la, sign < 0 ? -1 : 1};
}

double gamma_ratio(double num, double den) {
  check_pole(num, "gamma_ratio");
  check_pole(den, "gamma_ratio");
  if (num == den) return 1.0;
  const double d = num - den;
  if (d == std::nearbyint(d) && std::fabs(d) <= 64.0) {
    const auto n = static_cast<std::int64_t>(std::fabs(d));
    return d > 0 ? pochhammer(den, n) : 1.0 / pochhammer(num, n);
  }
  if (num >= 10.0 && den >= 10.0) {
    return std::exp(LogGammaRatioLarge(num, den));
  }
  if (std::fabs(num) <= 170.0 && std::fabs(den) <= 170.0) {
    const double gn = std::tgamma(num);
    const double gd = std::tgamma(den);
    const double r = gn / gd;
    if (std::isnormal(gn) && std::isnormal(gd) && std::isfinite(r)) return r;
  }
  const SignedLogValue a = log_gamma_signed(num);
  const SignedLogValue b = log_gamma_signed(den);
  return a.sign * b.sign * std::exp(a.log_abs - b.log_abs);
}

double pochhammer(double x, std::int64_t n) {
  double p = 1.0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double f = x + static_cast<double>(i);
    if (f == 0.0) return 0.0;
    p *= f;
  }
  return p;
}

namespace {

void CheckHarmonicPoles(std::int64_t k, double a, const char* where) {
  CheckFinite(a, where);
  const double r = std::nearbyint(a);
  if (std::fabs(a - r) <= kPoleGuard && r <= 0.0 &&
      -r <= static_cast<double>(k) - 1.0) {
    throw PoleError(Fmt(where, a));
  }
}

constexpr std::int64_t kDirectHarmonic = 256;

}  // namespace

double harmonic(std::int64_t k, double a) {
  CheckHarmonicPoles(k, a, "harmonic");
  if (k <= 0) return 0.0;
  Neumaier s;
  if (k <= kDirectHarmonic) {
    for (std::int64_t l = 0; l < k; ++l) s.Add(1.0 / (a + l));
    return s.Sum();
  }
  // psi(a+k) - psi(a) with a shifted past the asymptotic threshold.
  double y = a;
  while (y < kDigammaShift) {
    s.Add(1.0 / y);
    y += 1.0;
  }
  const double x = a + static_cast<double>(k);
  const double inv_x2 = 1.0 / (x * x), inv_y2 = 1.0 / (y * y);
  double px = inv_x2, py = inv_y2;
  s.Add(std::log1p((x - y) / y));
  s.Add(-0.5 / x + 0.5 / y);
  for (int j = 1; j <= 8; ++j) {
    s.Add(-kBernoulli2k[j - 1] / (2.0 * j) * (px - py));
    px *= inv_x2;
    py *= inv_y2;
  }
  return s.Sum();
}

double harmonic_prime(std::int64_t k, double a) {
  CheckHarmonicPoles(k, a, "harmonic_prime");
  if (k <= 0) return 0.0;
  Neumaier s;
  if (k <= kDirectHarmonic) {
    for (std::int64_t l = 0; l < k; ++l) {
      const double t = a + static_cast<double>(l);
      s.Add(-1.0 / (t * t));
    }
    return s.Sum();
  }
  double y = a;
  while (y < kDigammaShift) {
    s.Add(-1.0 / (y * y));
    y += 1.0;
  }
  s.Add(polygamma(1, a + static_cast<double>(k)));
  s.Add(-polygamma(1, y));
  return s.Sum();
}

double zeta_int(int n) {
  if (n < 2) {
    throw UnsupportedOrder("zeta_int: order " + std::to_string(n) +
                           " below 2");
  }
  const ConstantPool& c = constants();
  switch (n) {
    case 2: return c.pi_sq / 6.0;
    case 3: return c.zeta3;
    case 4: return c.pi_4 / 90.0;
    case 5: return c.zeta5;
    default: break;
  }
  // Euler-Maclaurin with N = 10.
  constexpr int kN = 10;
  double head = 0.0;
  for (int k = kN - 1; k >= 1; --k) head += std::pow(k, -n);
  const double N = kN;
  double tail = std::pow(N, 1 - n) / (n - 1) + 0.5 * std::pow(N, -n);
  // B_{2j}/(2j)! * n (n+1) ... (n+2j-2) * N^{-n-2j+1}
  double rising = n;
  double fact = 2.0;
  double pw = std::pow(N, -n - 1);
  for (int j = 1; j <= 10; ++j) {
    const double t = kBernoulli2k[j - 1] / fact * rising * pw;
    tail += t;
    if (std::fabs(t) < 1e-18) break;
    rising *= (n + 2 * j - 1) * (n + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
    pw /= N * N;
  }
  return head + tail;
}

namespace {

double DilogSeries(double x) {
  double s = 0.0;
  double pw = x;
  for (int k = 1; k < 200; ++k) {
    const double t = pw / (static_cast<double>(k) * k);
    s += t;
    if (std::fabs(t) < 1e-18 * std::fabs(s)) break;
    pw *= x;
  }
  return s;
}

double DilogUnitInterval(double x) {
  if (x <= 0.5) return DilogSeries(x);
  if (x == 1.0) return constants().pi_sq / 6.0;
  return constants().pi_sq / 6.0 - std::log(x) * std::log1p(-x) -
         DilogSeries(1.0 - x);
}

}  // namespace

double dilog(double x) {
  CheckFinite(x, "dilog");
  if (x > 1.0) throw DomainError("dilog: argument above 1");
  if (x >= -0.5) {
    if (x <= 0.5) return DilogSeries(x);
    return DilogUnitInterval(x);
  }
  // Landen: Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2, with x/(x-1) in (1/3, 1).
  const double y = x / (x - 1.0);
  const double l = std::log1p(-x);
  return -DilogUnitInterval(y) - 0.5 * l * l;
}

double binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("binomial: require 0 <= k <= n");
  }
  k = std::min(k, n - k);
  if (n <= 60) {
    std::uint64_t c = 1;
    for (std::int64_t i = 0; i < k; ++i) {
      c = c * static_cast<std::uint64_t>(n - i) /
          static_cast<std::uint64_t>(i + 1);
    }
    return static_cast<double>(c);
  }
  double c = 1.0;
  for (std::int64_t i = 0; i < k; ++i) {
    c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return c;
}

}  // namespace dpsum
