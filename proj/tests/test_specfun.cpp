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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dpsum/constants.hpp"
#include "dpsum/specfun.hpp"
#include "oracles.hpp"

namespace dpsum {
namespace {

double Rel(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

TEST(Specfun, DigammaMatchesOracle) {
  for (const auto& [x, y] : oracle::kDigamma) {
    EXPECT_LE(Rel(digamma(x), y), 1e-14) << "x=" << x;
  }
}

TEST(Specfun, PolygammaMatchesOracle) {
  for (const auto& [n, x, y] : oracle::kPolygamma) {
    EXPECT_LE(Rel(polygamma(n, x), y), 1e-13) << "n=" << n << " x=" << x;
  }
}

TEST(Specfun, LogGammaSigned) {
  for (const auto& [x, log_abs, sign] : oracle::kLogGamma) {
    const SignedLogValue g = log_gamma_signed(x);
    EXPECT_NEAR(g.log_abs, log_abs, 1e-13 * std::max(1.0, std::fabs(log_abs)))
        << "x=" << x;
    EXPECT_EQ(g.sign, sign) << "x=" << x;
  }
  EXPECT_NEAR(log_gamma_signed(5.0).value(), 24.0, 1e-12);
}

TEST(Specfun, ZetaAndDilog) {
  for (const auto& [n, unused, y] : oracle::kZeta) {
    EXPECT_LE(Rel(zeta_int(n), y), 1e-15) << "n=" << n;
  }
  for (const auto& [x, y] : oracle::kDilog) {
    EXPECT_NEAR(dilog(x), y, 1e-14) << "x=" << x;
  }
}

TEST(Specfun, ConstantPool) {
  const ConstantPool& k = constants();
  EXPECT_EQ(k.gamma_em, oracle::kEulerGamma);
  EXPECT_EQ(k.pi, oracle::kPi);
  EXPECT_EQ(k.zeta3, oracle::kZeta3);
  EXPECT_EQ(k.zeta5, oracle::kZeta5);
  EXPECT_EQ(k.ln2, oracle::kLn2);
  EXPECT_NEAR(k.pi_sq, oracle::kPi * oracle::kPi, 1e-14);
}

TEST(Specfun, Poles) {
  EXPECT_THROW(digamma(0.0), PoleError);
  EXPECT_THROW(digamma(-3.0), PoleError);
  EXPECT_THROW(digamma(-2.0 + 1e-9), PoleError);
  EXPECT_NO_THROW(digamma(-2.0 + 1e-6));
  EXPECT_THROW(polygamma(2, -1.0), PoleError);
  EXPECT_THROW(polygamma(kMaxPolygammaOrder + 1, 1.0), UnsupportedOrder);
  EXPECT_THROW(polygamma(-1, 1.0), UnsupportedOrder);
}

TEST(Specfun, DigammaRecurrence) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 100.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng);
    EXPECT_NEAR(digamma(x + 1.0) - digamma(x), 1.0 / x, 1e-12) << "x=" << x;
  }
}

TEST(Specfun, DigammaReflection) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng);
    if (std::fabs(x - std::nearbyint(x)) < 1e-3) continue;
    const double pi = oracle::kPi;
    const double want = pi / std::tan(pi * x);
    EXPECT_NEAR(digamma(1.0 - x) - digamma(x), want,
                1e-11 * std::max(1.0, std::fabs(want)))
        << "x=" << x;
  }
}

TEST(Specfun, DigammaDuplication) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.01, 50.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng);
    EXPECT_NEAR(digamma(2.0 * x),
                0.5 * digamma(x) + 0.5 * digamma(x + 0.5) + oracle::kLn2,
                1e-12 * std::max(1.0, std::fabs(digamma(2.0 * x))))
        << "x=" << x;
  }
}

TEST(Specfun, PolygammaFiniteDifference) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.5, 20.0);
  const double h = 1e-5;
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 100; ++i) {
      const double x = u(rng);
      const double fd =
          (polygamma(n - 1, x + h) - polygamma(n - 1, x - h)) / (2.0 * h);
      EXPECT_LE(Rel(fd, polygamma(n, x)), 1e-6) << "n=" << n << " x=" << x;
    }
  }
}

TEST(Specfun, HarmonicMatchesCompensatedSum) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.1, 5.0);
  for (std::int64_t k : {0, 1, 2, 10, 137, 1000, 10000}) {
    const double a = u(rng);
    long double s = 0.0L, s2 = 0.0L;
    for (std::int64_t l = 1; l <= k; ++l) {
      const long double t = 1.0L / (static_cast<long double>(l) + a - 1.0L);
      s += t;
      s2 += t * t;
    }
    EXPECT_NEAR(harmonic(k, a), static_cast<double>(s), 1e-12)
        << "k=" << k << " a=" << a;
    EXPECT_NEAR(harmonic_prime(k, a), -static_cast<double>(s2), 1e-12)
        << "k=" << k << " a=" << a;
  }
}

TEST(Specfun, PochhammerAndBinomial) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.1, 12.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    const std::int64_t n = static_cast<std::int64_t>(i % 15);
    EXPECT_LE(Rel(pochhammer(x, n), gamma_ratio(x + static_cast<double>(n), x)),
              1e-12)
        << "x=" << x << " n=" << n;
  }
  EXPECT_EQ(pochhammer(-3.0, 5), 0.0);
  EXPECT_DOUBLE_EQ(binomial(10, 3), 120.0);
  EXPECT_DOUBLE_EQ(binomial(50, 25), 126410606437752.0);
  EXPECT_THROW(binomial(3, 5), DomainError);
}

}  // namespace
}  // namespace dpsum
