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
#include <map>

#include "dpsum/series.hpp"
#include "dpsum/specfun.hpp"
#include "oracles.hpp"

namespace dpsum {
namespace {

double D(std::int64_t l) { return static_cast<double>(l); }

TEST(Series, CompensatedFiniteSum) {
  const SumResult r = sum_finite(SeriesSpec::Finite(
      [](std::int64_t l) { return 1.0 / (D(l) * D(l)); }, 1, 1000000));
  EXPECT_LE(std::fabs(r.value - oracle::kInverseSquares1e6) /
                oracle::kInverseSquares1e6,
            1e-13);
  EXPECT_EQ(r.terms_used, 1000000);
  EXPECT_TRUE(r.converged);
}

TEST(Series, EmptyFiniteSum) {
  const SumResult r =
      sum_finite(SeriesSpec::Finite([](std::int64_t) { return 1.0; }, 0, -1));
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.terms_used, 0);
}

TEST(Series, CubicTailWithSmallBudget) {
  const SumResult r = sum_infinite(
      SeriesSpec::Infinite(
          [](std::int64_t l) { return 1.0 / std::pow(D(l) + 1.0, 3); }, 0,
          TailClass::PowerLog(0, 3)),
      1e-12, 10000);
  EXPECT_NEAR(r.value, oracle::kZeta3, 1e-10);
  EXPECT_TRUE(r.accelerated);
}

TEST(Series, LogTailReachesDefaultTolerance) {
  const SumResult r = sum_infinite(SeriesSpec::Infinite(
      [](std::int64_t l) {
        return digamma(D(l) + 1.0) / ((D(l) + 1.0) * (D(l) + 1.0));
      },
      0, TailClass::PowerLog(1, 2)));
  const double pi = oracle::kPi;
  EXPECT_NEAR(r.value, oracle::kZeta3 - pi * pi * oracle::kEulerGamma / 6.0,
              1e-8);
  EXPECT_LE(r.abs_error_est, 1e-8);
}

TEST(Series, ErrorEstimateShrinksWithBudget) {
  const SeriesSpec spec = SeriesSpec::Infinite(
      [](std::int64_t l) {
        return digamma(D(l) + 1.0) / std::pow(D(l) + 1.0, 1.5);
      },
      0, TailClass::PowerLog(1, 1.5));
  double last = INFINITY;
  for (std::int64_t budget : {2000, 4000, 8000, 16000, 32000, 64000}) {
    SumResult r;
    try {
      r = sum_infinite(spec, 1e-300, budget);
    } catch (const NonConvergence& e) {
      r = e.partial();
    }
    EXPECT_LE(r.abs_error_est, last) << "budget=" << budget;
    last = r.abs_error_est;
  }
}

TEST(Series, NonConvergenceCarriesPartial) {
  const SeriesSpec spec = SeriesSpec::Infinite(
      [](std::int64_t l) { return 1.0 / std::pow(D(l) + 1.0, 1.05); }, 0,
      TailClass::Unknown());
  try {
    sum_infinite(spec, 1e-12, 4000);
    FAIL() << "expected NonConvergence";
  } catch (const NonConvergence& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNonConvergence);
    EXPECT_GT(e.partial().terms_used, 0);
    EXPECT_LE(e.partial().terms_used, 4000);
    EXPECT_FALSE(e.partial().converged);
  }
}

TEST(Series, GeometricTail) {
  const SumResult r = sum_infinite(SeriesSpec::Infinite(
      [](std::int64_t l) { return std::pow(0.9, D(l)) / (D(l) + 1.0); }, 0,
      TailClass::Geometric()), 1e-14);
  EXPECT_NEAR(r.value, -std::log(0.1) / 0.9, 1e-12);
}

TEST(Series, PairedInvariantUnderCommonDivergentPart) {
  auto a = [](double c) {
    return SeriesSpec::Infinite(
        [c](std::int64_t l) {
          return digamma(D(l) + 1.5) / (D(l) + 1.0) + c / (D(l) + 1.0);
        },
        0, TailClass::PowerLog(1, 2));
  };
  auto b = [](double c) {
    return SeriesSpec::Infinite(
        [c](std::int64_t l) {
          return digamma(D(l) + 1.0) / (D(l) + 1.5) + c / (D(l) + 1.0);
        },
        0, TailClass::PowerLog(1, 2));
  };
  const double base = sum_infinite_paired(a(0.0), b(0.0), 1e-11).value;
  for (double c : {1.0, -3.7, 25.0}) {
    EXPECT_NEAR(sum_infinite_paired(a(c), b(c), 1e-11).value, base, 1e-12)
        << "c=" << c;
  }
}

TEST(Series, RecurrenceTerm) {
  TermFn t = RecurrenceTerm(0, 1.0, [](std::int64_t l) {
    return 0.5 / (D(l) + 1.0);
  });
  // t(l) = 0.5^l / l!
  double f = 1.0;
  for (std::int64_t l = 0; l < 20; ++l) {
    EXPECT_NEAR(t(l), f, 1e-16);
    f *= 0.5 / (D(l) + 1.0);
  }
  EXPECT_NEAR(t(3), 0.125 / 6.0, 1e-16);
}

TEST(Series, PartialFractionsReconstruct) {
  const RationalTerm r{2.5, {{0.5, 2}, {1.0, 1}, {0.5, 1}, {3.25, 3}}};
  EXPECT_EQ(r.degree(), 7);
  const PartialFractions pf = partial_fractions(r);
  ASSERT_EQ(pf.shifts.size(), 3u);
  for (double n : {0.0, 0.7, 4.0, 19.3}) {
    // The expansion cancels heavily for large n; compare against the
    // magnitude of the individual terms.
    double s = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < pf.shifts.size(); ++i) {
      for (std::size_t m = 0; m < pf.c[i].size(); ++m) {
        const double t =
            pf.c[i][m] / std::pow(n + pf.shifts[i], static_cast<int>(m) + 1);
        s += t;
        scale += std::fabs(t);
      }
    }
    EXPECT_NEAR(s, r(n), 1e-14 * scale) << "n=" << n;
  }
}

TEST(Series, RationalSumsAgainstDirect) {
  const RationalTerm r{1.0, {{1.0, 1}, {1.5, 1}}};
  long double direct = 0.0L;
  for (std::int64_t n = 0; n <= 40; ++n) direct += r(D(n));
  EXPECT_NEAR(rational_finite_sum(r, 40), static_cast<double>(direct), 1e-13);
  EXPECT_EQ(rational_finite_sum(r, -1), 0.0);
  // sum_{n>=0} 1/((n+1)(n+3/2)) = 2 (psi(3/2) - psi(1)) = 4 - 4 ln 2.
  EXPECT_NEAR(rational_tail_sum(r, 0.0), 4.0 - 4.0 * oracle::kLn2, 1e-14);
  EXPECT_NEAR(rational_tail_sum(r, 41.0),
              rational_tail_sum(r, 0.0) - static_cast<double>(direct), 1e-13);
  EXPECT_THROW(rational_tail_sum(RationalTerm{1.0, {{1.0, 1}}}, 0.0),
               UnsupportedShape);
}

// Inner sums computed by brute-force summation, independent of the
// partial-fraction closed forms used by the collapsed series.
double InnerTail(const RationalTerm& r, std::int64_t j) {
  return sum_infinite(SeriesSpec::Infinite(
                          [&r, j](std::int64_t l) { return r(D(j + l)); }, 0,
                          TailClass::PowerLog(0, r.degree())),
                      1e-11)
      .value;
}

double Truncated(const SeriesSpec& s, std::int64_t upper) {
  return sum_finite(SeriesSpec::Finite(s.term, s.start_index, upper)).value;
}

TEST(Series, CollapseTwoLevels) {
  const RationalTerm r1{1.0, {{0.5, 1}}};
  const RationalTerm r2{1.0, {{1.0, 1}, {1.5, 1}}};
  const std::int64_t n = 200;
  double nested = 0.0;
  for (std::int64_t n1 = 0; n1 <= n; ++n1) {
    nested += r1(D(n1)) * InnerTail(r2, n1);
  }
  EXPECT_NEAR(Truncated(collapse_multisum({r1, r2}), n), nested, 1e-9);
}

TEST(Series, CollapseThreeLevels) {
  const RationalTerm r1{1.0, {{0.5, 1}}};
  const RationalTerm r2{1.0, {{1.0, 1}}};
  const RationalTerm r3{0.5, {{2.5, 1}, {3.0, 1}}};
  const std::int64_t n = 200;
  std::map<std::int64_t, double> tails;
  double nested = 0.0;
  for (std::int64_t n1 = 0; n1 <= n; ++n1) {
    for (std::int64_t n2 = 0; n1 + n2 <= n; ++n2) {
      const std::int64_t j = n1 + n2;
      if (!tails.count(j)) tails[j] = InnerTail(r3, j);
      nested += r1(D(n1)) * r2(D(j)) * tails[j];
    }
  }
  EXPECT_NEAR(Truncated(collapse_multisum({r1, r2, r3}), n), nested, 1e-9);
}

TEST(Series, CollapseSingleLevelIsIdentity) {
  const RationalTerm r{1.0, {{1.0, 2}}};
  const SeriesSpec s = collapse_multisum({r});
  for (std::int64_t l = 0; l < 10; ++l) EXPECT_EQ(s.term(l), r(D(l)));
  EXPECT_THROW(collapse_multisum({r, RationalTerm{1.0, {{1.0, 1}}}}),
               UnsupportedShape);
}

TEST(Series, CollapsedTotals) {
  const double pi2 = oracle::kPi * oracle::kPi;
  const SumResult b1 = sum_infinite(collapse_multisum(
      {RationalTerm{1.0, {{0.5, 1}}}, RationalTerm{1.0, {{1.0, 1}, {1.5, 1}}}}));
  EXPECT_NEAR(b1.value, pi2 / 3.0, 1e-8);
  const SumResult b5 = sum_infinite(collapse_multisum(
      {RationalTerm{1.0, {{0.5, 1}}}, RationalTerm{1.0, {{1.0, 1}}},
       RationalTerm{0.5, {{2.5, 1}, {3.0, 1}}}}));
  EXPECT_NEAR(b5.value, 4.0 * oracle::kLn2 + 1.5 * oracle::kZeta3 - pi2 / 3.0,
              1e-8);
}

}  // namespace
}  // namespace dpsum
