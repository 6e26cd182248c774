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


#include "catalog/catalog.hpp"

namespace dpsum::catalog_detail {
namespace {

// The 4F3 on the right of EQ_069/EQ_070, by its convergent series.
double F43Tail(double c, double m) {
  try {
    return pfq_unit_bruteforce({{1, 1, 1, m - c}, {2, 2, m}}, 1e-12).value;
  } catch (const NonConvergence& e) {
    return e.partial().value;
  }
}

double Eq066(double q) {
  const double a = Psi(q), b = Psi(q - 1.0);
  return (K().pi_sq / 6.0 * (a + b) + a * b * (a + K().gamma_em) +
          2.0 * K().zeta3 - b * Psi1(q)) / (q - 1.0);
}

// Closed increment of the k-recursion: V_k - V_{k-1}.
double Eq053Step(std::int64_t k) {
  const double x = D(k);
  const double lead = (Psi(0.5) - Psi(x)) / (x - 0.5);
  const double tail =
      k == 1 ? -Psi1(0.5) : (Psi(0.5) - Psi(x - 0.5)) / (x - 1.0);
  return lead - tail;
}

}  // namespace

double Eq053Increment(std::int64_t k) { return Eq053Step(k); }

void AddEuler(std::vector<Identity>& out) {
  {
    Identity& e = Add(out, "EQ_051", "sum_l [psi(l+1/2) - psi(l+1)]/(l+1/2)",
                      Mode::kPairedDivergent);
    e.lhs = [](const ParamPoint&) {
      return Pair(Inf([](std::int64_t l) {
                    return Psi(D(l) + 0.5) / (D(l) + 0.5);
                  }, TailClass::PowerLog(0, 2.0)),
                  Inf([](std::int64_t l) {
                    return Psi(D(l) + 1.0) / (D(l) + 0.5);
                  }, TailClass::PowerLog(0, 2.0)));
    };
    e.rhs = [](const ParamPoint&) { return -K().pi_sq / 3.0; };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Add(out, "EQ_053",
                      "sum_l [psi(l+k+1/2) - psi(l+k+1)]/(l+1/2)",
                      Mode::kPairedDivergent);
    e.schema = {IntParam("k", 1, 10)};
    e.lhs = [](const ParamPoint& p) {
      const double k = D(p.integer("k"));
      return Pair(Inf([k](std::int64_t l) {
                    return Psi(D(l) + k + 0.5) / (D(l) + 0.5);
                  }, TailClass::PowerLog(0, 2.0)),
                  Inf([k](std::int64_t l) {
                    return Psi(D(l) + k + 1.0) / (D(l) + 0.5);
                  }, TailClass::PowerLog(0, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t k = p.integer("k");
      const double x = D(k), h = Psi(0.5);
      double s = 0.0;
      for (std::int64_t l = 1; l < k; ++l) s += Psi(D(l)) / (D(l) + 0.5);
      return Psi(x) * Psi(x + 0.5) - (h + 4.0) * (Psi(x) - Psi(x + 0.5)) +
             K().pi_sq / 6.0 - h * h - 8.0 - 4.0 * h - 2.0 * s;
    };
    e.alt_rhs = [](const ParamPoint& p) {
      const std::int64_t k = p.integer("k");
      double v = -K().pi_sq / 3.0;
      for (std::int64_t l = 1; l <= k; ++l) v += Eq053Step(l);
      return v;
    };
    e.alt_note = "Value built from EQ_051 by the k-recursion, with the l = 1 "
                 "bracket taken as its limit +psi'(1/2).";
    e.notes = "The literal constants (-8, -4 psi(1/2)) pass. The recursion "
              "as stated gives pi^2/2 for l = 1 and fails by pi^2; its limit "
              "value is used in the alternative.";
    e.grid = Points({"k=1", "k=2", "k=3", "k=5", "k=10"});
  }
  {
    Identity& e = Add(out, "EQ_057",
                      "sum_l [psi(a+l)/(a+l) - psi(a+l+q)/(a+l+q)]",
                      Mode::kPairedDivergent);
    e.schema = {RealParam("a", 0.1, 6.0), RealParam("q", 0.0, 5.0)};
    e.lhs = [](const ParamPoint& p) {
      const double a = p["a"], q = p["q"];
      return Pair(Inf([a](std::int64_t l) {
                    return Psi(a + D(l)) / (a + D(l));
                  }, TailClass::PowerLog(1, 2.0)),
                  Inf([a, q](std::int64_t l) {
                    const double x = a + D(l) + q;
                    return Psi(x) / x;
                  }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double a = p["a"], q = p["q"];
      const double u = Psi(a + q), v = Psi(a);
      return 0.5 * ((u * u + Psi1(a + q)) - (v * v + Psi1(a)));
    };
    e.grid = Points({"a=1 q=1", "a=0.7 q=1.6", "a=2.3 q=0.4", "a=0.5 q=0.5",
                     "a=3 q=2", "a=5.5 q=4.25"});
  }
  {
    Identity& e = Add(out, "EQ_059",
                      "sum_l [psi'(q+l)/(q+l) - psi(q+l)/(q+l)^2]",
                      Mode::kPairedDivergent);
    e.schema = {RealParam("q", 0.1, 8.0)};
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"];
      return Pair(Inf([q](std::int64_t l) {
                    return Psi1(q + D(l)) / (q + D(l));
                  }, TailClass::PowerLog(1, 2.0)),
                  Inf([q](std::int64_t l) {
                    const double x = q + D(l);
                    return Psi(x) / (x * x);
                  }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"];
      return -0.5 * Psi2(q) - Psi(q) * Psi1(q);
    };
    e.grid = Points({"q=0.7", "q=2.5", "q=1", "q=0.5", "q=3", "q=6.25"});
  }
  auto mixed_lhs = [](const ParamPoint& p) {
    const double c = p["c"], n = D(p.integer("n"));
    return Pair(Inf([c, n](std::int64_t l) {
                  return Psi(c + D(l)) / (n + D(l) + 1.0);
                }, TailClass::PowerLog(1, 2.0)),
                Inf([c, n](std::int64_t l) {
                  return Psi(n + D(l) + 1.0) / (c + D(l));
                }, TailClass::PowerLog(1, 2.0)));
  };
  auto mixed_grid = Points({"c=2.7 n=1", "c=0.4 n=0", "c=3.3 n=2", "c=5.5 n=3",
                            "c=1.5 n=5", "c=0.25 n=10"});
  {
    Identity& e = Add(out, "EQ_060",
                      "sum_l [psi(c+l)/(n+l+1) - psi(n+l+1)/(c+l)]",
                      Mode::kPairedDivergent);
    e.schema = {RealParam("c", 0.1, 10.0), IntParam("n", 0, 10)};
    e.in_domain = [](const ParamPoint& p) { return OffInt(p["c"]); };
    e.lhs = mixed_lhs;
    e.rhs = [](const ParamPoint& p) {
      const double c = p["c"];
      const std::int64_t n = p.integer("n");
      const double nd = D(n), g = c - nd - 1.0;
      double s = 0.0;
      for (std::int64_t l = 0; l <= n; ++l) s += Psi(D(l) + 1.0) / (c + D(l) - nd - 1.0);
      return K().pi_sq / 3.0 - Psi(nd + 1.0) * (Psi(c) + 1.0 / g) - Psi1(g) +
             Psi(g) * Psi(g) + Psi(c) / g + 2.0 * s;
    };
    e.grid = mixed_grid;
  }
  {
    Identity& e = Add(out, "EQ_062",
                      "sum_l [psi(c+l)/(n+l+1) - psi(n+l+1)/(c+l)], 4F3 form",
                      Mode::kPairedDivergent);
    e.schema = {RealParam("c", 0.1, 10.0), IntParam("n", 0, 10)};
    e.in_domain = [](const ParamPoint& p) { return OffInt(p["c"]); };
    e.lhs = mixed_lhs;
    auto rhs = [](const ParamPoint& p, bool trigamma) {
      const double c = p["c"];
      const std::int64_t n = p.integer("n");
      const double nd = D(n), d = c - nd;
      double s = 0.0;
      for (std::int64_t l = 0; l < n; ++l) s += Psi(c + D(l) - nd) / (D(l) + 1.0);
      double f = 0.0;
      if (n > 0) {
        f = nd / d *
            sum_finite(pfq_series({{1.0 - nd, 1, 1, 1}, {c + 1.0 - nd, 2, 2}}))
                .value;
      }
      const double second = trigamma ? Psi1(d) : Psi(1.0) * Psi(d);
      return K().pi_sq / 3.0 + K().gamma_em * Psi(d - 1.0) +
             Psi(nd + 1.0) * (Psi(c) - Psi(d)) - second + Psi(d) * Psi(d) -
             Psi(d) / (d - 1.0) - s - f;
    };
    e.rhs = [rhs](const ParamPoint& p) { return rhs(p, true); };
    e.alt_rhs = [rhs](const ParamPoint& p) { return rhs(p, false); };
    e.alt_note = "psi(1, c-n) read as the product psi(1) psi(c-n) instead of "
                 "the trigamma psi'(c-n).";
    e.notes = "psi(1, c-n) is read as psi'(c-n); that reading passes.";
    e.grid = mixed_grid;
  }
  {
    Identity& e = Add(out, "EQ_063", "sum_l psi(l+1)/(l+q)^n",
                      Mode::kConvergent);
    e.schema = {RealParam("q", 0.1, 8.0), IntParam("n", 3, 8)};
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"];
      const std::int64_t n = p.integer("n");
      return One(Inf([q, n](std::int64_t l) {
        return Psi(D(l) + 1.0) / std::pow(D(l) + q, D(n));
      }, TailClass::PowerLog(1, D(n))));
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"];
      const std::int64_t n = p.integer("n");
      double s = 0.0;
      for (std::int64_t k = 0; k <= n - 2; ++k) {
        s += polygamma(static_cast<int>(1 + k), q) *
             polygamma(static_cast<int>(n - k - 2), q) * binomial(n - 2, k);
      }
      double fact = 1.0;
      for (std::int64_t i = 2; i < n; ++i) fact *= D(i);
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      return sign / fact * (s - 0.5 * polygamma(static_cast<int>(n), q));
    };
    e.grid = Points({"q=1.5 n=3", "q=0.7 n=4", "q=2.2 n=5", "q=1 n=3",
                     "q=0.5 n=8", "q=5.25 n=6"});
  }
  {
    Identity& e = Add(out, "EQ_064", "sum_l [psi(l+2) - psi(1)]/(l+1)^n",
                      Mode::kConvergent);
    e.schema = {IntParam("n", 2, 7)};
    e.lhs = [](const ParamPoint& p) {
      const std::int64_t n = p.integer("n");
      const double base = Psi(1.0);
      return One(Inf([n, base](std::int64_t l) {
        return (Psi(D(l) + 2.0) - base) / std::pow(D(l) + 1.0, D(n));
      }, TailClass::PowerLog(1, D(n))));
    };
    e.rhs = [](const ParamPoint& p) {
      const int n = static_cast<int>(p.integer("n"));
      double s = 0.0;
      for (int k = 1; k <= n - 2; ++k) s += k * zeta_int(k + 1) * zeta_int(n - k);
      return (1.0 + 0.5 * n) * zeta_int(n + 1) - s / (n - 1);
    };
    e.grid = Points({"n=2", "n=3", "n=4", "n=5", "n=7"});
  }
  {
    Identity& e = Add(out, "EQ_065", "sum_l [psi(l+1) - psi(1)]/(l+1)^3",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      const double base = Psi(1.0);
      return One(Inf([base](std::int64_t l) {
        const double x = D(l) + 1.0;
        return (Psi(x) - base) / (x * x * x);
      }, TailClass::PowerLog(1, 3.0)));
    };
    e.rhs = [](const ParamPoint&) { return K().pi_4 / 360.0; };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Add(out, "EQ_066",
                      "sum_l psi(q+l) psi(q+l+1)/((q+l)(1+l))",
                      Mode::kConvergent);
    e.schema = {RealParam("q", 0.2, 6.0)};
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"];
      return One(Inf([q](std::int64_t l) {
        const double x = q + D(l);
        return Psi(x) * Psi(x + 1.0) / (x * (D(l) + 1.0));
      }, TailClass::PowerLog(2, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"];
      if (std::fabs(q - 1.0) < 1e-6) return symmetric_limit(Eq066, 1.0);
      return Eq066(q);
    };
    e.grid = Points({"q=1.5", "q=2.7", "q=0.6", "q=1", "q=2", "q=4.25"});
    e.notes = "Upper limit stated as q, read as an infinite sum. q = 1 goes "
              "through the symmetric limit.";
  }
  {
    Identity& e = Add(out, "EQ_067", "sum_l [psi(1+l) - psi(1)]^2/(1+l)^2",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      const double base = Psi(1.0);
      return One(Inf([base](std::int64_t l) {
        const double x = D(l) + 1.0;
        const double h = Psi(x) - base;
        return h * h / (x * x);
      }, TailClass::PowerLog(2, 2.0)));
    };
    e.rhs = [](const ParamPoint&) { return 11.0 * K().pi_4 / 360.0; };
    e.notes = "Upper limit stated as 1, read as an infinite sum.";
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Add(out, "EQ_068", "sum_l psi(2+l) psi(1+l)^2/(1+l)^2",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      return One(Inf([](std::int64_t l) {
        const double x = D(l) + 1.0;
        const double a = Psi(x);
        return Psi(x + 1.0) * a * a / (x * x);
      }, TailClass::PowerLog(3, 2.0)));
    };
    e.rhs = [](const ParamPoint&) {
      const ConstantPool& k = K();
      const double g = k.gamma_em;
      return -g * g * g * k.pi_sq / 6.0 + 4.0 * k.zeta3 * g * g -
             7.0 * k.pi_4 * g / 72.0 + k.zeta3 * k.pi_sq / 3.0 +
             6.0 * k.zeta5;
    };
    e.notes = "Upper limit stated as 1, read as an infinite sum.";
    e.grid = {ParamPoint()};
  }
  auto tail43_schema = [] {
    return std::vector<ParamSpec>{RealParam("c", 0.2, 3.0),
                                  RealParam("m", 1.5, 8.0)};
  };
  auto tail43_domain = [](const ParamPoint& p) {
    const double gap = p["m"] - p["c"];
    return gap >= 1.5 && gap <= 5.0;
  };
  auto tail43_grid = Points({"c=0.4 m=3.1", "c=1.3 m=4", "c=0.7 m=2.6",
                             "c=0.5 m=3", "c=2 m=4.5", "c=2.75 m=6"});
  {
    Identity& e = Add(out, "EQ_069",
                      "sum_l Gamma(c+l) psi(1+l)^2/Gamma(m+l)",
                      Mode::kConvergent);
    e.schema = tail43_schema();
    e.in_domain = tail43_domain;
    e.lhs = [](const ParamPoint& p) {
      const double c = p["c"], m = p["m"];
      TermFn g = GammaRatioTerm(c, m);
      return One(Inf([g](std::int64_t l) {
        const double a = Psi(D(l) + 1.0);
        return g(l) * a * a;
      }, TailClass::PowerLog(2, m - c)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double c = p["c"], m = p["m"], g = K().gamma_em;
      const double r = m - 1.0 - c;
      const double pr = Psi(r), pm = Psi(m - 1.0), pc = Psi(c);
      return -gamma_product({c}, {m}) * F43Tail(c, m) +
             gamma_product({c}, {m - 1.0}) / r *
                 (K().pi_sq / 6.0 + g * g + pr * (2.0 * g - pm - pc) +
                  Psi1(r) + pr * pr - pm * (2.0 * g - pc));
    };
    e.notes = "The 4F3 on the right is summed by its convergent series.";
    e.grid = tail43_grid;
  }
  {
    Identity& e = Add(out, "EQ_070", "sum_l Gamma(c+l) psi'(1+l)/Gamma(m+l)",
                      Mode::kConvergent);
    e.schema = tail43_schema();
    e.in_domain = tail43_domain;
    e.lhs = [](const ParamPoint& p) {
      const double c = p["c"], m = p["m"];
      TermFn g = GammaRatioTerm(c, m);
      return One(Inf([g](std::int64_t l) { return g(l) * Psi1(D(l) + 1.0); },
                     TailClass::PowerLog(0, 1.0 + m - c)));
    };
    auto rhs = [](const ParamPoint& p, double factor) {
      const double c = p["c"], m = p["m"];
      const double r = m - 1.0 - c;
      const double pm = Psi(m - 1.0);
      return gamma_product({c}, {m}) * F43Tail(c, m) -
             factor * gamma_product({c}, {m - 1.0}) / r *
                 (Psi1(m - 1.0) - (pm - Psi(r)) * (pm - Psi(c)));
    };
    e.rhs = [rhs](const ParamPoint& p) { return rhs(p, 2.0); };
    e.alt_rhs = [rhs](const ParamPoint& p) { return rhs(p, 1.0); };
    e.alt_note = "Second term without the factor 2.";
    e.notes = "Literal reading fails at every sampled point. The 4F3 on the "
              "right is summed by its convergent series.";
    e.baseline_ambiguous = true;
    e.grid = tail43_grid;
  }
  {
    Identity& e = Add(out, "FN8", "sum_l psi(l+1/2)/(l+1/2)^2",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      return One(Inf([](std::int64_t l) {
        const double x = D(l) + 0.5;
        return Psi(x) / (x * x);
      }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint&) {
      return -(7.0 * K().zeta3 + K().gamma_em * K().pi_sq) / 2.0;
    };
    e.notes = "Upper limit stated as k, read as an infinite sum.";
    e.grid = {ParamPoint()};
  }
}

}  // namespace dpsum::catalog_detail
