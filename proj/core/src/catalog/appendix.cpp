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


#include <functional>

#include "catalog/catalog.hpp"

namespace dpsum::catalog_detail {
namespace {

constexpr double kHalf = 0.5;

RationalTerm Rat(std::initializer_list<LinearFactor> f, double coef = 1.0) {
  return RationalTerm{coef, std::vector<LinearFactor>(f)};
}

// P(l) = sum_{m=0}^{l} inc(m); restarts on backward access.
std::function<double(std::int64_t)> RunningSum(
    std::function<double(std::int64_t)> inc) {
  auto st = std::make_shared<std::pair<std::int64_t, double>>(0, 0.0);
  return [st, inc = std::move(inc)](std::int64_t l) {
    if (l < st->first - 1) *st = {0, 0.0};
    for (; st->first <= l; ++st->first) st->second += inc(st->first);
    return st->second;
  };
}

double HalfHarmonicTo(std::int64_t l) {
  double s = 0.0;
  for (std::int64_t m = 0; m <= l; ++m) s += 1.0 / (D(m) + kHalf);
  return s;
}

double UnitHarmonicTo(std::int64_t l) {
  double s = 0.0;
  for (std::int64_t m = 0; m <= l; ++m) s += 1.0 / (D(m) + 1.0);
  return s;
}

double B08Half(double a, std::int64_t n) {
  double s = 0.0;
  for (std::int64_t l = 0; l + 2 <= n; ++l) s += Psi(a + D(l) + 1.0) / (D(l) + 1.0);
  return 0.5 * (Psi1(a) - Psi(a) * Psi(a)) - Psi(a) * (Psi(D(n)) - Psi(1.0)) + s;
}

// Finite-offset sum of EQ_011/EQ_012 style with upper limit N.
LhsSeries ShiftedDiffSum(double x, double y, std::int64_t n, bool infinite) {
  TermFn t = [x, y, n](std::int64_t l) {
    return (Psi(D(l) + x + D(n) + 1.0) - Psi(D(l) + x + 1.0)) / (D(l) + y);
  };
  if (infinite) return One(Inf(std::move(t), TailClass::PowerLog(0, 2.0)));
  return One(Fin(std::move(t), n));
}

double F43Unit(double q) {
  try {
    return pfq_unit_bruteforce({{1, 1, 1, 1}, {2, 2, q + 1.0}}, 1e-12).value;
  } catch (const NonConvergence& e) {
    return e.partial().value;
  }
}

// sum_l (1-q)_{l+1}/(l+1)! psi'(l+2)/(l+1).
double Apb23Series(double q) {
  TermFn c = RecurrenceTerm(0, 1.0 - q, [q](std::int64_t l) {
    return (2.0 - q + D(l)) / (D(l) + 2.0);
  });
  SeriesSpec s = Inf([c](std::int64_t l) {
    return c(l) * Psi1(D(l) + 2.0) / (D(l) + 1.0);
  }, TailClass::PowerLog(0, q + 2.0));
  try {
    return sum_infinite(s, 1e-12).value;
  } catch (const NonConvergence& e) {
    return e.partial().value;
  }
}

}  // namespace

void AddAppendix(std::vector<Identity>& out) {
  {
    Identity& e = Add(out, "APB_01",
                      "double sum 1/(n1+1/2) 1/((n+1)(n+3/2))",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      return One(collapse_multisum(
          {Rat({{kHalf, 1}}), Rat({{1.0, 1}, {1.5, 1}})}));
    };
    e.rhs = [](const ParamPoint&) { return K().pi_sq / 3.0; };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Add(out, "APB_02",
                      "double sum 1/(n1+1/2) 1/((n+3/2)(n+1)^2)",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      return One(collapse_multisum(
          {Rat({{kHalf, 1}}), Rat({{1.5, 1}, {1.0, 2}})}));
    };
    e.rhs = [](const ParamPoint&) {
      return 7.0 * K().zeta3 - 2.0 * K().pi_sq / 3.0;
    };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Add(out, "APB_03",
                      "double sum 1/(n1+1/2) 1/((m+1)(n+m+5/2))",
                      Mode::kConvergent);
    e.schema = {IntParam("n", 0, 10)};
    e.lhs = [](const ParamPoint& p) {
      const double n = D(p.integer("n"));
      return One(collapse_multisum(
          {Rat({{kHalf, 1}}), Rat({{1.0, 1}, {n + 2.5, 1}})}));
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t n = p.integer("n");
      double s = 0.0;
      for (std::int64_t l = 0; l <= n; ++l) {
        s += (Psi(1.5 + D(l)) - Psi(kHalf)) / (D(l) + 1.0);
      }
      return (s + K().pi_sq / 6.0) / (D(n) + 1.5);
    };
    e.grid = Points({"n=0", "n=1", "n=2", "n=3", "n=5", "n=10"});
  }
  {
    Identity& e = Add(out, "APB_04",
                      "sum_l [psi(l+1/2)^2 - psi(l+1)^2 + psi'(l+1/2) - "
                      "psi'(l+1)]/(l+1/2)",
                      Mode::kPairedDivergent);
    e.lhs = [](const ParamPoint&) {
      return Pair(Inf([](std::int64_t l) {
                    const double x = D(l) + kHalf;
                    return (Psi(x) * Psi(x) + Psi1(x)) / x;
                  }, TailClass::PowerLog(1, 2.0)),
                  Inf([](std::int64_t l) {
                    const double x = D(l) + 1.0;
                    return (Psi(x) * Psi(x) + Psi1(x)) / (D(l) + kHalf);
                  }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint&) {
      return -2.0 * K().pi_sq / 3.0 * Psi(kHalf);
    };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Add(out, "APB_05",
                      "triple sum 1/(n1+1/2) 1/(n+1) 1/((n+5/2)(n+3))",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      return One(collapse_multisum({Rat({{kHalf, 1}}), Rat({{1.0, 1}}),
                                    Rat({{2.5, 1}, {3.0, 1}}, 0.5)}));
    };
    e.rhs = [](const ParamPoint&) {
      return 4.0 * K().ln2 + 1.5 * K().zeta3 - K().pi_sq / 3.0;
    };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Add(out, "APB_05B",
                      "sum_j [psi(3+j) - psi(5/2+j)] [psi(j+3/2) - "
                      "psi(1/2)]/(j+1)",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      return One(Inf([](std::int64_t j) {
        const double x = D(j);
        return (Psi(3.0 + x) - Psi(2.5 + x)) / (x + 1.0) *
               (Psi(x + 1.5) - Psi(kHalf));
      }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint&) {
      return 4.0 * K().ln2 + 1.5 * K().zeta3 - K().pi_sq / 3.0;
    };
    e.notes = "Single-sum form of APB_05 after exchanging the outer sums.";
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Add(out, "APB_06", "sum_l psi(l+m+1)/(l+q)^2",
                      Mode::kConvergent);
    e.schema = {RealParam("q", 0.1, 8.0), IntParam("m", 0, 10)};
    e.in_domain = [](const ParamPoint& p) { return OffInt(p["q"]); };
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"], m = D(p.integer("m"));
      return One(Inf([q, m](std::int64_t l) {
        const double x = D(l) + q;
        return Psi(D(l) + m + 1.0) / (x * x);
      }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"];
      const std::int64_t m = p.integer("m");
      double s = 0.0;
      for (std::int64_t l = 0; l < m; ++l) {
        const double d = q - D(l) - 1.0;
        s += Psi(D(l) + 1.0) / (d * d);
      }
      const double r = q - D(m);
      return Psi(q) * Psi1(r) + Psi1(q) * Psi(r) - 0.5 * Psi2(q) -
             Psi(q) * Psi1(q) - s;
    };
    e.grid = Points({"q=1.5 m=2", "q=2.7 m=0", "q=0.4 m=3", "q=0.5 m=1",
                     "q=3.25 m=5", "q=7.5 m=10"});
  }
  {
    Identity& e = Add(out, "APB_07", "sum_l psi(l+m+1)/(l+m)^2",
                      Mode::kConvergent);
    e.schema = {IntParam("m", 1, 10)};
    e.lhs = [](const ParamPoint& p) {
      const double m = D(p.integer("m"));
      return One(Inf([m](std::int64_t l) {
        const double x = D(l) + m;
        return Psi(x + 1.0) / (x * x);
      }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t m = p.integer("m");
      const double md = D(m);
      double s = 0.0;
      for (std::int64_t l = 0; l + 2 <= m; ++l) {
        const double d = D(l) - md + 1.0;
        s += Psi(D(l) + 1.0) / (d * d);
      }
      return Psi(md) * (K().pi_sq / 6.0 - Psi1(md)) - Psi2(md) -
             K().gamma_em * Psi1(md) - s;
    };
    e.grid = Points({"m=1", "m=2", "m=3", "m=5", "m=10"});
  }
  {
    Identity& e = Add(out, "APB_08",
                      "sum_l [psi(a+l+n)/(a+l) - psi(a+l+q+n)/(a+l+q)]",
                      Mode::kPairedDivergent);
    e.schema = {RealParam("a", 0.1, 6.0), RealParam("q", 0.0, 5.0),
                IntParam("n", 1, 10)};
    e.lhs = [](const ParamPoint& p) {
      const double a = p["a"], q = p["q"], n = D(p.integer("n"));
      return Pair(Inf([a, n](std::int64_t l) {
                    return Psi(a + D(l) + n) / (a + D(l));
                  }, TailClass::PowerLog(1, 2.0)),
                  Inf([a, q, n](std::int64_t l) {
                    return Psi(a + D(l) + q + n) / (a + D(l) + q);
                  }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double a = p["a"], q = p["q"];
      const std::int64_t n = p.integer("n");
      return B08Half(a, n) - B08Half(a + q, n);
    };
    e.grid = Points({"a=0.7 q=1.6 n=1", "a=1.3 q=0.5 n=3", "a=1 q=1 n=2",
                     "a=2.5 q=0.25 n=5", "a=0.5 q=3 n=10"});
  }
  {
    Identity& e = Add(out, "APB_09",
                      "sum_l [psi(l+k+j+1/2) - psi(l+k+1)]/(l+k+1/2)",
                      Mode::kPairedDivergent);
    e.schema = {IntParam("k", 1, 10), IntParam("j", 0, 10)};
    e.lhs = [](const ParamPoint& p) {
      const double k = D(p.integer("k")), j = D(p.integer("j"));
      return Pair(Inf([k, j](std::int64_t l) {
                    return Psi(D(l) + k + j + kHalf) / (D(l) + k + kHalf);
                  }, TailClass::PowerLog(1, 2.0)),
                  Inf([k](std::int64_t l) {
                    return Psi(D(l) + k + 1.0) / (D(l) + k + kHalf);
                  }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t k = p.integer("k"), j = p.integer("j");
      const double kd = D(k), h = Psi(kHalf), pk = Psi(kd + kHalf);
      double s1 = 0.0, s2 = 0.0;
      for (std::int64_t l = 0; l < k; ++l) s1 += Psi(D(l) + 1.0) / (D(l) + kHalf);
      for (std::int64_t l = 0; l + 2 <= j; ++l) {
        s2 += (Psi(kd + D(l) + 1.5) - pk) / (D(l) + 1.0);
      }
      const double delta = j == 0 ? 1.0 : 0.0;
      return 0.5 * h * h - K().pi_sq / 12.0 + Psi1(kd + kHalf) * (kHalf - delta) -
             0.5 * pk * pk + s1 + s2;
    };
    e.grid = Points({"k=1 j=0", "k=2 j=1", "k=3 j=2", "k=2 j=4", "k=5 j=0",
                     "k=10 j=3", "k=1 j=10"});
  }
  {
    Identity& e = Add(out, "APB_10", "sum_l [psi(l+N+1) - psi(l+j+1)]/(l+y)",
                      Mode::kPairedDivergent);
    e.schema = {IntParam("N", 1, 10), IntParam("j", 0, 9),
                RealParam("y", 0.1, 8.0)};
    e.in_domain = [](const ParamPoint& p) {
      return p.integer("N") > p.integer("j") && OffInt(p["y"]);
    };
    e.lhs = [](const ParamPoint& p) {
      const double n = D(p.integer("N")), j = D(p.integer("j")), y = p["y"];
      return Pair(Inf([n, y](std::int64_t l) {
                    return Psi(D(l) + n + 1.0) / (D(l) + y);
                  }, TailClass::PowerLog(0, 2.0)),
                  Inf([j, y](std::int64_t l) {
                    return Psi(D(l) + j + 1.0) / (D(l) + y);
                  }, TailClass::PowerLog(0, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t n = p.integer("N"), j = p.integer("j");
      const double y = p["y"];
      double s = 0.0;
      for (std::int64_t k = 0; k < n - j; ++k) {
        const double x = D(j) + 1.0 + D(k);
        s += Psi(x) / (x - y);
      }
      return s - Psi(y) * (Psi(D(n) + 1.0 - y) - Psi(D(j) + 1.0 - y));
    };
    e.grid = Points({"N=3 j=1 y=0.7", "N=5 j=2 y=2.3", "N=1 j=0 y=0.5",
                     "N=10 j=3 y=4.25", "N=2 j=0 y=1.5"});
  }
  {
    Identity& e = Add(out, "APB_11",
                      "sum_{l<=N} [psi(l+x+N+1) - psi(l+x+1)]/(l+y)",
                      Mode::kFiniteSum);
    e.schema = {IntParam("N", 1, 10), RealParam("x", 0.1, 5.0),
                RealParam("y", 0.1, 5.0)};
    e.in_domain = [](const ParamPoint& p) {
      const std::int64_t n = p.integer("N");
      for (std::int64_t k = 0; k < n; ++k) {
        if (std::fabs(p["x"] + D(k) + 1.0 - p["y"]) < 0.05) return false;
      }
      return true;
    };
    e.lhs = [](const ParamPoint& p) {
      return ShiftedDiffSum(p["x"], p["y"], p.integer("N"), false);
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t n = p.integer("N");
      const double x = p["x"], y = p["y"];
      double s = 0.0;
      for (std::int64_t k = 0; k < n; ++k) {
        s += (Psi(x + D(k) + 1.0) - Psi(x)) / (x + D(k) + 1.0 - y);
      }
      return s;
    };
    e.alt_lhs = [](const ParamPoint& p) {
      return ShiftedDiffSum(p["x"], p["y"], p.integer("N"), true);
    };
    e.alt_rhs = [](const ParamPoint& p) {
      const std::int64_t n = p.integer("N");
      const double x = p["x"], y = p["y"];
      double s = 0.0;
      for (std::int64_t k = 0; k < n; ++k) {
        s += (Psi(x + D(k) + 1.0) - Psi(y)) / (x + D(k) + 1.0 - y);
      }
      return s;
    };
    e.alt_note = "Sum over l taken to infinity, and psi(x) in the summand on "
                 "the right read as psi(y).";
    e.notes = "The finite upper limit N on the left fails at every sampled "
              "point.";
    e.baseline_ambiguous = true;
    e.grid = Points({"N=3 x=0.7 y=1.9", "N=4 x=2.2 y=0.4", "N=1 x=0.5 y=0.5",
                     "N=2 x=1 y=2.5", "N=5 x=0.3 y=4.2"});
  }
  {
    Identity& e = Add(out, "APB_12",
                      "sum_{l<=N} [psi(l+x+N+1) - psi(l+x+1)]/(l+x)",
                      Mode::kFiniteSum);
    e.schema = {IntParam("N", 1, 10), RealParam("x", 0.1, 5.0)};
    e.lhs = [](const ParamPoint& p) {
      return ShiftedDiffSum(p["x"], p["x"], p.integer("N"), false);
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t n = p.integer("N");
      const double x = p["x"];
      double s = 0.0;
      for (std::int64_t k = 0; k < n; ++k) {
        s += (Psi(x + D(k) + 1.0) - Psi(x)) / (D(k) + 1.0);
      }
      return s;
    };
    e.alt_lhs = [](const ParamPoint& p) {
      return ShiftedDiffSum(p["x"], p["x"], p.integer("N"), true);
    };
    e.alt_note = "Sum over l taken to infinity.";
    e.notes = "The finite upper limit N on the left fails at every sampled "
              "point.";
    e.baseline_ambiguous = true;
    e.grid = Points({"N=3 x=0.7", "N=4 x=2.2", "N=1 x=0.5", "N=2 x=1",
                     "N=10 x=3.75"});
  }
  {
    Identity& e = Add(out, "APB_12B",
                      "sum_{k<N} [psi(x+k+1) - psi(x)]/(k+1) as a double sum",
                      Mode::kFiniteSum);
    e.schema = {IntParam("N", 0, 30), RealParam("x", 0.1, 5.0)};
    e.lhs = [](const ParamPoint& p) {
      const double x = p["x"];
      return One(Fin([x](std::int64_t k) {
        return (Psi(x + D(k) + 1.0) - Psi(x)) / (D(k) + 1.0);
      }, p.integer("N") - 1));
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t n = p.integer("N");
      const double x = p["x"];
      double s = 0.0, inner = 0.0;
      for (std::int64_t k = 0; k < n; ++k) {
        inner += 1.0 / (x + D(k));
        s += inner / (D(k) + 1.0);
      }
      return s;
    };
    e.grid = Points({"N=3 x=0.7", "N=4 x=2.2", "N=0 x=1", "N=1 x=0.5",
                     "N=10 x=1.25", "N=30 x=4.5"});
  }
  {
    Identity& e = Add(out, "APB_13", "sum_l psi'(1/2+l)/(1/2+l)",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      return One(Inf([](std::int64_t l) {
        const double x = D(l) + kHalf;
        return Psi1(x) / x;
      }, TailClass::PowerLog(0, 2.0)));
    };
    e.rhs = [](const ParamPoint&) {
      return 3.5 * K().zeta3 + K().pi_sq * K().ln2;
    };
    e.notes = "Upper limit stated as k, read as an infinite sum.";
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Add(out, "APB_14", "sum_{l=1}^{k} psi(l+1/2)/(k-l+1/2)",
                      Mode::kFiniteSum);
    e.schema = {IntParam("k", 1, 30)};
    e.lhs = [](const ParamPoint& p) {
      const std::int64_t k = p.integer("k");
      return One(Fin([k](std::int64_t l) {
        return Psi(D(l) + kHalf) / (D(k) - D(l) + kHalf);
      }, k, 1));
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t k = p.integer("k");
      double s = 0.0;
      for (std::int64_t l = 1; l <= k; ++l) s += Psi(D(l) + kHalf) / D(l);
      return 2.0 * s +
             Psi(kHalf) * (harmonic(k, kHalf) - 2.0 * harmonic(k, 1.0));
    };
    e.grid = Points({"k=1", "k=2", "k=3", "k=5", "k=10", "k=30"});
  }
  {
    Identity& e = Add(out, "APB_15", "sum_{l<=k} psi(l+1)/(k-l+1/2)",
                      Mode::kFiniteSum);
    e.schema = {IntParam("k", 0, 30)};
    e.lhs = [](const ParamPoint& p) {
      const std::int64_t k = p.integer("k");
      return One(Fin([k](std::int64_t l) {
        return Psi(D(l) + 1.0) / (D(k) - D(l) + kHalf);
      }, k));
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t k = p.integer("k");
      double s = 0.0;
      for (std::int64_t l = 0; l <= k; ++l) s += Psi(D(l) + kHalf) / (D(l) + 1.0);
      const double hh = harmonic(k + 1, kHalf);
      return -s + 0.5 * (hh * hh + harmonic_prime(k + 1, kHalf)) +
             harmonic(k + 1, 1.0) * (Psi(D(k) + 1.5) + 2.0) -
             (K().gamma_em + 2.0) * hh;
    };
    e.grid = Points({"k=0", "k=1", "k=2", "k=3", "k=5", "k=10", "k=30"});
  }
  {
    Identity& e = Add(out, "APB_16", "sum_{l<=k} psi(l+1)/(k-l+1)",
                      Mode::kFiniteSum);
    e.schema = {IntParam("k", 0, 30)};
    e.lhs = [](const ParamPoint& p) {
      const std::int64_t k = p.integer("k");
      return One(Fin([k](std::int64_t l) {
        return Psi(D(l) + 1.0) / (D(k) - D(l) + 1.0);
      }, k));
    };
    e.rhs = [](const ParamPoint& p) {
      const double x = D(p.integer("k")) + 2.0;
      return K().gamma_em * Psi(x) + Psi1(x) + Psi(x) * Psi(x) -
             K().pi_sq / 6.0;
    };
    e.grid = Points({"k=0", "k=1", "k=2", "k=3", "k=5", "k=10", "k=30"});
  }
  {
    Identity& e = Add(out, "APB_17",
                      "sum_{l<=k} H_{l+1}(1)/(k-l+1/2)", Mode::kFiniteSum);
    e.schema = {IntParam("k", 0, 30)};
    e.lhs = [](const ParamPoint& p) {
      const std::int64_t k = p.integer("k");
      return One(Fin([k](std::int64_t l) {
        return UnitHarmonicTo(l) / (D(k) - D(l) + kHalf);
      }, k));
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t k = p.integer("k");
      double s = 0.0;
      for (std::int64_t l = 0; l <= k; ++l) s += HalfHarmonicTo(l) / (D(l) + 1.0);
      const double hh = harmonic(k + 2, kHalf);
      return -s + 0.5 * (hh * hh + harmonic_prime(k + 2, kHalf)) +
             harmonic(k + 1, 1.0) * hh;
    };
    e.grid = Points({"k=0", "k=1", "k=2", "k=3", "k=5", "k=10", "k=30"});
  }
  {
    Identity& e = Add(out, "APB_18",
                      "sum_{l<=k} H_{l+1}(1/2)/(k-l+1/2)", Mode::kFiniteSum);
    e.schema = {IntParam("k", 0, 30)};
    e.lhs = [](const ParamPoint& p) {
      const std::int64_t k = p.integer("k");
      return One(Fin([k](std::int64_t l) {
        return HalfHarmonicTo(l) / (D(k) - D(l) + kHalf);
      }, k));
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t k = p.integer("k");
      double s = 0.0;
      for (std::int64_t l = 0; l <= k; ++l) s += HalfHarmonicTo(l) / (D(l) + 1.0);
      return 2.0 * s;
    };
    e.grid = Points({"k=0", "k=1", "k=2", "k=3", "k=5", "k=10", "k=30"});
  }
  {
    Identity& e = Add(out, "APB_19", "sum_l t_l(1)/((l+1)(l+3/2)(l+2))",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      return One(Inf([](std::int64_t l) {
        const double x = D(l);
        return (Psi(x + 1.5) - Psi(kHalf)) /
               ((x + 1.0) * (x + 1.5) * (x + 2.0));
      }, TailClass::PowerLog(1, 3.0)));
    };
    e.rhs = [](const ParamPoint&) {
      return 2.0 * K().pi_sq / 3.0 - 8.0 * K().ln2;
    };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Add(out, "APB_20", "sum_l t_l(2)/((l+3/2)(l+5/2)(l+3))",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      auto t2 = RunningSum([](std::int64_t k) {
        return (Psi(D(k) + 1.5) - Psi(kHalf)) / (D(k) + 1.0);
      });
      return One(Inf([t2](std::int64_t l) {
        const double x = D(l);
        return t2(l) / ((x + 1.5) * (x + 2.5) * (x + 3.0));
      }, TailClass::PowerLog(2, 3.0)));
    };
    e.rhs = [](const ParamPoint&) {
      return 2.0 * K().pi_sq / 3.0 - 16.0 / 3.0 * K().ln2 - 2.0 * K().zeta3;
    };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Add(out, "APB_21", "sum_{m<=l} 1/(m+1/2)",
                      Mode::kFiniteSum);
    e.schema = {IntParam("l", 0, 50)};
    e.lhs = [](const ParamPoint& p) {
      return One(Fin([](std::int64_t m) { return 1.0 / (D(m) + kHalf); },
                     p.integer("l")));
    };
    e.rhs = [](const ParamPoint& p) {
      return Psi(D(p.integer("l")) + 1.5) - Psi(kHalf);
    };
    e.grid = Points({"l=0", "l=1", "l=2", "l=3", "l=5", "l=10", "l=50"});
  }
  {
    Identity& e = Add(out, "APB_22",
                      "sum_l [psi'(l+1)/(q+l) - psi(q+1+l)/(l+1)^2]",
                      Mode::kConvergent);
    e.schema = {RealParam("q", -0.95, 6.0)};
    e.in_domain = [](const ParamPoint& p) {
      return p["q"] >= 0.05 || OffInt(p["q"]);
    };
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"];
      return One(Inf([q](std::int64_t l) {
        const double x = D(l) + 1.0;
        return Psi1(x) / (q + D(l)) - Psi(q + x) / (x * x);
      }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) { return -K().pi_sq / 6.0 * Psi(p["q"]); };
    e.grid = Points({"q=0.3", "q=1.7", "q=-0.6", "q=0.5", "q=1", "q=4.25"});
  }
  auto apb23_lhs = [](const ParamPoint& p) {
    const double q = p["q"];
    return One(Inf([q](std::int64_t l) {
      return Psi1(D(l) + 1.0) / (q + D(l));
    }, TailClass::PowerLog(0, 2.0)));
  };
  auto apb23_grid = Points({"q=0.5", "q=0.75", "q=1", "q=1.7", "q=2.5",
                          "q=3", "q=5.25"});
  {
    Identity& e = Add(out, "APB_23", "sum_l psi'(l+1)/(q+l), 4F3 form",
                      Mode::kConvergent);
    e.schema = {RealParam("q", 0.5, 6.0)};
    e.lhs = apb23_lhs;
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"];
      return K().gamma_em * Psi1(q) + Psi(q) * Psi1(q) - 0.5 * Psi2(q) +
             F43Unit(q) / q;
    };
    e.notes = "The 4F3 on the right is summed by its convergent series.";
    e.grid = apb23_grid;
  }
  {
    Identity& e = Add(out, "APB_23B", "sum_l psi'(l+1)/(q+l), Gamma-series form",
                      Mode::kConvergent);
    e.schema = {RealParam("q", 0.5, 6.0)};
    e.lhs = apb23_lhs;
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"];
      return 2.0 * K().zeta3 - K().pi_sq / 6.0 * (K().gamma_em + Psi(q)) -
             Apb23Series(q);
    };
    e.notes = "The Gamma-ratio series on the right is summed numerically; "
              "it terminates for integer q.";
    e.grid = apb23_grid;
  }
  {
    Identity& e = Add(out, "APB_24",
                      "sum_l [psi'(l+1)/(q+l) - psi(q+l)/(q+l)^2]",
                      Mode::kConvergent);
    e.schema = {RealParam("q", 0.1, 6.0)};
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"];
      return One(Inf([q](std::int64_t l) {
        const double x = q + D(l);
        return Psi1(D(l) + 1.0) / x - Psi(x) / (x * x);
      }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"];
      return K().gamma_em * Psi1(q) - 0.5 * Psi2(q);
    };
    e.grid = Points({"q=0.3", "q=1.7", "q=0.5", "q=1", "q=2", "q=5.5"});
  }
  {
    Identity& e = Add(out, "APB_25", "sum_l [psi'(l+1) - psi'(l+q)]/(q+l)",
                      Mode::kConvergent);
    e.schema = {RealParam("q", 0.1, 6.0)};
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"];
      return One(Inf([q](std::int64_t l) {
        return (Psi1(D(l) + 1.0) - Psi1(D(l) + q)) / (q + D(l));
      }, TailClass::PowerLog(0, 3.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"];
      return K().gamma_em * Psi1(q) + Psi(q) * Psi1(q);
    };
    e.grid = Points({"q=0.3", "q=1.7", "q=0.5", "q=1", "q=2", "q=5.5"});
  }
  {
    Identity& e = Add(out, "APB_26",
                      "sum_l [psi'(l+1)/(q+l) + psi(2-q+l)/(l+1)^2]",
                      Mode::kConvergent);
    e.schema = {RealParam("q", 0.1, 6.0)};
    e.in_domain = [](const ParamPoint& p) { return OffInt(p["q"]); };
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"];
      return One(Inf([q](std::int64_t l) {
        const double x = D(l) + 1.0;
        return Psi1(x) / (q + D(l)) + Psi(2.0 - q + D(l)) / (x * x);
      }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"], pi = K().pi;
      return K().pi_sq / 6.0 * Psi(q) +
             pi * std::cos(pi * q) / std::sin(pi * q) *
                 (K().pi_sq / 6.0 - Psi1(q)) -
             0.5 * Psi2(q);
    };
    e.grid = Points({"q=0.3", "q=1.7", "q=2.5", "q=0.5", "q=3.25", "q=5.75"});
  }
  {
    Identity& e = Add(out, "APB_27", "sum_l psi(1/2+l+n)/(1/2+l)^2",
                      Mode::kConvergent);
    e.schema = {IntParam("n", 1, 10)};
    e.lhs = [](const ParamPoint& p) {
      const double n = D(p.integer("n"));
      return One(Inf([n](std::int64_t l) {
        const double x = D(l) + kHalf;
        return Psi(x + n) / (x * x);
      }, TailClass::PowerLog(1, 2.0)));
    };
    e.alt_lhs = [](const ParamPoint& p) {
      const double n = D(p.integer("n"));
      return One(Inf([n](std::int64_t l) {
        const double x = D(l) + 1.0;
        return Psi(D(l) + kHalf + n) / (x * x);
      }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t n = p.integer("n");
      const double x = D(n) - kHalf;
      double s = 0.0;
      for (std::int64_t l = 0; l < n; ++l) {
        const double y = D(l) + kHalf;
        s += Psi(y) / (y * y);
      }
      const double g = K().gamma_em;
      return (K().pi_sq / 6.0 + 1.0 / (x * x)) * Psi(x) + g * Psi1(x) -
             0.5 * Psi2(x) - 0.5 * K().pi_sq * g - 3.5 * K().zeta3 - s;
    };
    e.alt_note = "Denominator (1+l)^2 in place of (1/2+l)^2.";
    e.notes = "Literal reading fails at every sampled point.";
    e.baseline_ambiguous = true;
    e.grid = Points({"n=1", "n=2", "n=3", "n=5", "n=10"});
  }
  {
    Identity& e = Add(out, "APB_28", "sum_l psi'(1+l)/(1/2+l)",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      return One(Inf([](std::int64_t l) {
        return Psi1(D(l) + 1.0) / (D(l) + kHalf);
      }, TailClass::PowerLog(0, 2.0)));
    };
    e.rhs = [](const ParamPoint&) { return 3.5 * K().zeta3; };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Add(out, "APB_29",
                      "sum_l x^(2l+1) [psi(1+l) - psi(1)]/(l+1/2)",
                      Mode::kConvergent);
    e.schema = {RealParam("x", -0.95, 0.95)};
    e.lhs = [](const ParamPoint& p) {
      const double x = p["x"];
      return One(Inf([x](std::int64_t l) {
        return std::pow(x, 2.0 * D(l) + 1.0) * (Psi(D(l) + 1.0) - Psi(1.0)) /
               (D(l) + kHalf);
      }, TailClass::Geometric()));
    };
    e.rhs = [](const ParamPoint& p) {
      const double x = p["x"];
      const double a = std::log((1.0 + x) / 2.0);
      const double r = std::log((1.0 + x) / (1.0 - x));
      return K().pi_sq / 6.0 - a * a - 2.0 * dilog((1.0 - x) / 2.0) +
             0.5 * r * r - r * 2.0 * K().ln2;
    };
    e.grid = Points({"x=0.5", "x=-0.3", "x=0.9", "x=0", "x=0.25", "x=-0.75"});
  }
}

}  // namespace dpsum::catalog_detail
