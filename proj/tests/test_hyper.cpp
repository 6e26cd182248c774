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

#include "dpsum/hyper.hpp"
#include "dpsum/specfun.hpp"
#include "oracles.hpp"

namespace dpsum {
namespace {

double D(std::int64_t l) { return static_cast<double>(l); }

double Brute(const PFQParams& p, double scale = 1.0) {
  return sum_series(pfq_series(p, scale), 1e-12).value;
}

TEST(Hyper, Classify) {
  EXPECT_EQ(classify({{1, 1, -3}, {2, 2}}).cls, PFQClass::kTerminating);
  EXPECT_EQ(classify({{1, 1, -3}, {2, 2}}).last_index, 3);
  const PFQShape c = classify({{1, 1, 1, 1}, {2, 2, 1.5}});
  EXPECT_EQ(c.cls, PFQClass::kConvergent);
  EXPECT_DOUBLE_EQ(c.decay, 2.5);
  EXPECT_EQ(classify({{1, 1, 1, 1}, {2, 2, 1}}).cls, PFQClass::kConvergent);
  EXPECT_EQ(classify({{1, 1, 1, 1}, {1, 1, 1}}).cls, PFQClass::kDivergent);
  // Zero excess is rejected.
  EXPECT_EQ(classify({{1, 1}, {2}}).cls, PFQClass::kDivergent);
  EXPECT_THROW(pfq_series({{1, 1, 1, 1}, {2, 2, -0.5}}), Divergent);
  EXPECT_THROW(pfq_series({{1, -5}, {-2}}), PoleError);
}

TEST(Hyper, TerminatingBruteForceIsExact) {
  EXPECT_NEAR(Brute({{1, 1, 1, -5}, {2, 2, 3.3}}), oracle::kF43Terminating,
              1e-12);
  // 2F1(-n, b; c | 1) = (c-b)_n / (c)_n. With b < -n + 1 every term has
  // the same sign, so nothing cancels.
  for (std::int64_t n = 0; n <= 50; n += 7) {
    const double b = -D(n) - 0.5, c = 2.9;
    const double want = pochhammer(c - b, n) / pochhammer(c, n);
    EXPECT_NEAR(Brute({{-D(n), b}, {c}}), want, 1e-12 * want) << "n=" << n;
  }
}

TEST(Hyper, ClosedFormsMatchOracle) {
  EXPECT_NEAR(f32_shifted_unit(2, 3.7, 1.2), oracle::kF32Shifted, 1e-12);
  EXPECT_NEAR(f32_lemma22(0.3, 1.7, 2.2, 2), oracle::kF32Lemma, 1e-12);
  const TerminatingForms t = f43_terminating(5, 2.3);
  EXPECT_NEAR(t.form_a, oracle::kF43Terminating, 1e-12);
  EXPECT_NEAR(t.form_b, oracle::kF43Terminating, 1e-12);
  EXPECT_NEAR(f43_integer(3), oracle::kF43OverQ[0].y, 1e-12);
  EXPECT_NEAR(f43_half(2, HalfBranch::kPlus), oracle::kF43OverQ[1].y, 1e-12);
  EXPECT_NEAR(f43_half(0, HalfBranch::kPlus), oracle::kF43OverQ[2].y, 1e-12);
}

TEST(Hyper, HalfBranchConstants) {
  const double pi2 = oracle::kPi * oracle::kPi, z3 = oracle::kZeta3,
               ln2 = oracle::kLn2;
  // 4F3(...; 3/2) and 4F3(...; 1/2) from the two branches.
  EXPECT_NEAR(0.5 * f43_half(0, HalfBranch::kPlus),
              -1.75 * z3 + 0.5 * pi2 * ln2, 1e-12);
  EXPECT_NEAR(-0.5 * f43_half(1, HalfBranch::kMinus),
              1.75 * z3 + 0.5 * pi2 * (1.0 - ln2), 1e-12);
  EXPECT_NEAR(Brute({{1, 1, 1, 1}, {2, 2, 0.5}}),
              1.75 * z3 + 0.5 * pi2 * (1.0 - ln2), 1e-8);
}

TEST(Hyper, ShiftedUnitRandom) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> beta(0.1, 5.0), gap(1.2, 4.0);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t n = i % 11;
    const double b = beta(rng), a = b + gap(rng);
    if (std::fabs(a - std::nearbyint(a)) < 0.05) continue;
    const SumResult s =
        sum_series(pfq_series({{1.0, D(n) + 1.0, b}, {D(n) + 2.0, a}}));
    EXPECT_NEAR(f32_shifted_unit(n, a, b), s.value,
                std::max(1e-8, 10.0 * s.abs_error_est))
        << "n=" << n << " alpha=" << a << " beta=" << b;
  }
}

TEST(Hyper, TerminatingFormsAgree) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> cd(0.1, 10.0);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t k = i % 21;
    const double c = cd(rng);
    const TerminatingForms t = f43_terminating(k, c);
    EXPECT_NEAR(t.form_a, t.form_b, 1e-11) << "k=" << k << " c=" << c;
    EXPECT_NEAR(t.form_a, Brute({{1, 1, 1, -D(k)}, {2, 2, 1.0 + c}}), 1e-11)
        << "k=" << k << " c=" << c;
  }
}

TEST(Hyper, ContinuationAgreesWithClosedForms) {
  for (std::int64_t m = 2; m <= 10; ++m) {
    EXPECT_NEAR(f43_continuation(D(m)).value, f43_integer(m), 1e-9)
        << "m=" << m;
  }
  for (std::int64_t n = 0; n <= 10; ++n) {
    EXPECT_NEAR(f43_continuation(0.5 + D(n)).value,
                f43_half(n, HalfBranch::kPlus), 1e-9)
        << "n=" << n;
    EXPECT_NEAR(f43_continuation(0.5 - D(n)).value,
                f43_half(n, HalfBranch::kMinus), 1e-9)
        << "n=" << n;
  }
}

TEST(Hyper, GammaProduct) {
  EXPECT_NEAR(gamma_product({5.0, 0.5}, {3.0}), 12.0 * std::sqrt(oracle::kPi),
              1e-13);
  EXPECT_NEAR(gamma_product({-0.5}, {1.0}), -2.0 * std::sqrt(oracle::kPi),
              1e-13);
  EXPECT_EQ(gamma_product({2.5}, {-3.0}), 0.0);
  EXPECT_NEAR(gamma_product({171.5}, {170.5}), 170.5, 1e-9);
}

TEST(Hyper, SymmetricLimit) {
  take_limit_mark();
  const double v =
      symmetric_limit([](double x) { return std::sin(x) / x; }, 0.0);
  EXPECT_NEAR(v, 1.0, 1e-12);
  EXPECT_TRUE(take_limit_mark());
  EXPECT_FALSE(take_limit_mark());
  // (psi(x) - psi(1)) / (x - 1) -> psi'(1) at x = 1.
  const double w = symmetric_limit(
      [](double x) { return (digamma(x) - digamma(1.0)) / (x - 1.0); }, 1.0);
  EXPECT_NEAR(w, polygamma(1, 1.0), 1e-10);
}

TEST(Hyper, RemovableSingularities) {
  // Integer b - c and integer a go through the limit path.
  take_limit_mark();
  const double at = f32_lemma22(0.3, 2.2, 2.2, 2);
  EXPECT_TRUE(take_limit_mark());
  const double brute = Brute({{0.3, 2.2, 2.2}, {4.2, 3.2}});
  EXPECT_NEAR(at, brute, 1e-8);
  EXPECT_NEAR(f32_lemma22(1.0, 1.7, 2.2, 2), f32_lemma22_a1(1.7, 2.2, 2),
              1e-10);
}

}  // namespace
}  // namespace dpsum
