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

constexpr double kGap = 1e-6;

// sum_{l=0}^{k} psi(b+l)/(b+l).
double SelfRatioSum(double b, std::int64_t k) {
  const double top = b + 1.0 + D(k);
  return 0.5 * (Psi1(top) - Psi1(b) + Psi(top) * Psi(top) - Psi(b) * Psi(b));
}

}  // namespace

void AddFinite(std::vector<Identity>& out) {
  {
    Identity& e = Add(out, "EQ_005", "sum_{l<=k} 1/((l+a)(l+b))",
                      Mode::kFiniteSum);
    e.schema = {RealParam("a", 0.1, 5.0), RealParam("b", 0.1, 5.0),
                IntParam("k", 0, 30)};
    e.lhs = [](const ParamPoint& p) {
      const double a = p["a"], b = p["b"];
      return One(Fin([a, b](std::int64_t l) {
        return 1.0 / ((D(l) + a) * (D(l) + b));
      }, p.integer("k")));
    };
    e.rhs = [](const ParamPoint& p) {
      const double a = p["a"], b = p["b"], k = D(p.integer("k"));
      if (std::fabs(b - a) < kGap) {
        mark_limit_path();
        return Psi1(a) - Psi1(a + k + 1.0);
      }
      return (Psi(k + a + 1.0) - Psi(a) - Psi(k + b + 1.0) + Psi(b)) / (b - a);
    };
    e.grid = Points({"a=0.3 b=1.7 k=7", "a=0.5 b=1.5 k=0", "a=1 b=1 k=5",
                     "a=2.5 b=0.25 k=10", "a=1.2 b=3.2 k=3",
                     "a=0.7 b=0.7 k=1", "a=4.5 b=0.1 k=30"});
    e.notes = "a = b uses the trigamma form.";
  }
  {
    Identity& e = Add(out, "EQ_006", "sum_l 1/((l+a)(l+b))",
                      Mode::kConvergent);
    e.schema = {RealParam("a", 0.1, 5.0), RealParam("b", 0.1, 5.0)};
    e.lhs = [](const ParamPoint& p) {
      const double a = p["a"], b = p["b"];
      return One(Inf([a, b](std::int64_t l) {
        return 1.0 / ((D(l) + a) * (D(l) + b));
      }, TailClass::PowerLog(0, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double a = p["a"], b = p["b"];
      if (std::fabs(b - a) < kGap) {
        mark_limit_path();
        return Psi1(a);
      }
      return (Psi(a) - Psi(b)) / (a - b);
    };
    e.grid = Points({"a=0.3 b=1.7", "a=0.5 b=1.5", "a=1 b=1", "a=2.5 b=0.25",
                     "a=1.2 b=3.2", "a=4.75 b=4.5"});
    e.notes = "a = b uses the trigamma form.";
  }
  {
    Identity& e = Add(out, "EQ_018", "sum_{l<=k} psi(b+l)/(c+l)",
                      Mode::kFiniteSum);
    e.schema = {RealParam("b", 0.1, 10.0), RealParam("c", 0.1, 10.0),
                IntParam("k", 0, 30)};
    e.lhs = [](const ParamPoint& p) {
      const double b = p["b"], c = p["c"];
      return One(Fin([b, c](std::int64_t l) {
        return Psi(b + D(l)) / (c + D(l));
      }, p.integer("k")));
    };
    e.rhs = [](const ParamPoint& p) {
      const double b = p["b"], c = p["c"];
      const std::int64_t k = p.integer("k");
      double dual = 0.0;
      for (std::int64_t l = 0; l <= k; ++l) {
        dual += Psi(c + D(l) + 1.0) / (b + D(l));
      }
      return Psi(c + D(k) + 1.0) * Psi(b + D(k) + 1.0) - Psi(b) * Psi(c) - dual;
    };
    e.grid = Points({"b=0.7 c=1.9 k=12", "b=1 c=2 k=5", "b=0.5 c=0.5 k=3",
                     "b=2.5 c=0.25 k=0", "b=9.5 c=3.3 k=30", "b=1.5 c=1 k=10"});
  }
  {
    Identity& e = Add(out, "EQ_020",
                      "sum_{l<=k} [psi(b+l)/(c+l) + psi(c+l)/(b+l)]",
                      Mode::kFiniteSum);
    e.schema = {RealParam("b", 0.1, 10.0), RealParam("c", 0.1, 10.0),
                IntParam("k", 0, 30)};
    e.lhs = [](const ParamPoint& p) {
      const double b = p["b"], c = p["c"];
      return One(Fin([b, c](std::int64_t l) {
        const double x = D(l);
        return Psi(b + x) / (c + x) + Psi(c + x) / (b + x);
      }, p.integer("k")));
    };
    e.rhs = [](const ParamPoint& p) {
      const double b = p["b"], c = p["c"], k1 = D(p.integer("k")) + 1.0;
      if (std::fabs(b - c) < kGap) {
        mark_limit_path();
        const double t = Psi(b + k1);
        return t * t - Psi(b) * Psi(b) + Psi1(b + k1) - Psi1(b);
      }
      return Psi(c + k1) * Psi(b + k1) - Psi(b) * Psi(c) +
             (Psi(b + k1) - Psi(c + k1) - Psi(b) + Psi(c)) / (b - c);
    };
    e.grid = Points({"b=0.7 c=1.9 k=12", "b=1 c=2 k=5", "b=0.5 c=0.5 k=3",
                     "b=2.5 c=0.25 k=0", "b=9.5 c=3.3 k=30", "b=1.5 c=1 k=10"});
    e.notes = "b = c uses the trigamma form.";
  }
  {
    Identity& e = Add(out, "EQ_021", "sum_{l<=k} psi(l+1/2)/(l+1)",
                      Mode::kFiniteSum);
    e.schema = {IntParam("k", 0, 50)};
    e.lhs = [](const ParamPoint& p) {
      return One(Fin([](std::int64_t l) {
        return Psi(D(l) + 0.5) / (D(l) + 1.0);
      }, p.integer("k")));
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t k = p.integer("k");
      double s = 0.0;
      for (std::int64_t l = 1; l <= k; ++l) s += Psi(D(l) + 1.0) / (D(l) - 0.5);
      return Psi(D(k) + 0.5) * Psi(D(k) + 2.0) - Psi(1.0) * Psi(0.5) - s;
    };
    e.grid = Points({"k=0", "k=1", "k=2", "k=3", "k=5", "k=10", "k=50"});
  }
  {
    Identity& e = Add(out, "EQ_022",
                      "sum_{l<=k} [H_l(1/2)/(l+1) + H_l(1)/(l-1/2)]",
                      Mode::kFiniteSum);
    e.schema = {IntParam("k", 0, 100)};
    e.lhs = [](const ParamPoint& p) {
      // Running direct harmonic sums, independent of the digamma kernel.
      struct State {
        std::int64_t next = 0;
        double h_half = 0.0;
        double h_one = 0.0;
      };
      auto st = std::make_shared<State>();
      return One(Fin([st](std::int64_t l) {
        if (l < st->next) *st = State();
        for (; st->next < l; ++st->next) {
          st->h_half += 1.0 / (D(st->next) + 0.5);
          st->h_one += 1.0 / (D(st->next) + 1.0);
        }
        return st->h_half / (D(l) + 1.0) + st->h_one / (D(l) - 0.5);
      }, p.integer("k")));
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t k = p.integer("k");
      return harmonic(k, 0.5) * harmonic(k + 1, 1.0);
    };
    e.grid = Points({"k=0", "k=1", "k=2", "k=3", "k=5", "k=10", "k=100"});
  }
  {
    Identity& e = Add(out, "EQ_023", "sum_{l<=k} psi(b+l)/(b+l)",
                      Mode::kFiniteSum);
    e.schema = {RealParam("b", 0.1, 10.0), IntParam("k", 0, 50)};
    e.lhs = [](const ParamPoint& p) {
      const double b = p["b"];
      return One(Fin([b](std::int64_t l) {
        return Psi(b + D(l)) / (b + D(l));
      }, p.integer("k")));
    };
    e.rhs = [](const ParamPoint& p) {
      return SelfRatioSum(p["b"], p.integer("k"));
    };
    e.grid = Points({"b=0.7 k=5", "b=1 k=4", "b=1 k=50", "b=0.5 k=0",
                     "b=2.25 k=10", "b=9.9 k=3"});
  }
  {
    Identity& e = Add(out, "EQ_024", "sum_{l<=k} Gamma(b+l)/Gamma(a+l)",
                      Mode::kFiniteSum);
    e.schema = {RealParam("a", 0.1, 6.0), RealParam("b", 0.1, 6.0),
                IntParam("k", 0, 30)};
    e.in_domain = [](const ParamPoint& p) {
      return ClearOrOn(p["a"] - p["b"] - 1.0);
    };
    e.lhs = [](const ParamPoint& p) {
      return One(Fin(GammaRatioTerm(p["b"], p["a"]), p.integer("k")));
    };
    e.rhs = [](const ParamPoint& p) {
      const double a = p["a"], b = p["b"], k = D(p.integer("k"));
      const double d = b - a + 1.0;
      if (std::fabs(d) < kGap) {
        mark_limit_path();
        return Psi(b + k + 1.0) - Psi(b);
      }
      return (gamma_product({b + 1.0 + k}, {a + k}) -
              gamma_product({b}, {a - 1.0})) / d;
    };
    e.grid = Points({"a=2.3 b=0.6 k=5", "a=1.6 b=0.6 k=3", "a=3.5 b=1.5 k=10",
                     "a=1 b=2.5 k=2", "a=4.2 b=0.3 k=0", "a=0.5 b=5.5 k=30"});
    e.notes = "a = b + 1 uses the digamma form; a = 1 has a vanishing "
              "1/Gamma(a-1) term.";
  }
  {
    Identity& e = Add(out, "EQ_025",
                      "sum_{l<=k} Gamma(b+l) psi(b+l)/Gamma(a+l)",
                      Mode::kFiniteSum);
    e.schema = {RealParam("a", 0.1, 6.0), RealParam("b", 0.1, 6.0),
                IntParam("k", 0, 30)};
    e.in_domain = [](const ParamPoint& p) {
      return ClearOrOn(p["a"] - p["b"] - 1.0);
    };
    e.lhs = [](const ParamPoint& p) {
      const double b = p["b"];
      TermFn g = GammaRatioTerm(b, p["a"]);
      return One(Fin([g, b](std::int64_t l) {
        return g(l) * Psi(b + D(l));
      }, p.integer("k")));
    };
    e.rhs = [](const ParamPoint& p) {
      const double a = p["a"], b = p["b"];
      const std::int64_t k = p.integer("k");
      const double d = b - a + 1.0;
      if (std::fabs(d) < kGap) {
        mark_limit_path();
        return SelfRatioSum(b, k);
      }
      const double top = gamma_product({b + 1.0 + D(k)}, {a + D(k)});
      const double bottom = gamma_product({b}, {a - 1.0});
      return (top * Psi(b + 1.0 + D(k)) - bottom * Psi(b)) / d -
             (top - bottom) / (d * d);
    };
    e.grid = Points({"a=2.3 b=0.6 k=5", "a=1.6 b=0.6 k=3", "a=3.5 b=1.5 k=10",
                     "a=1 b=2.5 k=2", "a=4.2 b=0.3 k=0", "a=0.5 b=5.5 k=30"});
    e.notes = "a = b + 1 reduces to EQ_023.";
  }
  {
    Identity& e = Add(out, "EQ_026", "sum_{l=1}^{k} H_l / l",
                      Mode::kFiniteSum);
    e.schema = {IntParam("k", 0, 50)};
    e.lhs = [](const ParamPoint& p) {
      auto h = std::make_shared<std::pair<std::int64_t, double>>(1, 0.0);
      return One(Fin([h](std::int64_t l) {
        if (l < h->first) *h = {1, 0.0};
        for (; h->first <= l; ++h->first) h->second += 1.0 / D(h->first);
        return h->second / D(l);
      }, p.integer("k"), 1));
    };
    e.rhs = [](const ParamPoint& p) {
      const double k = D(p.integer("k"));
      const double h = Psi(1.0 + k) - Psi(1.0);
      return 0.5 * (h * h + Psi1(1.0) - Psi1(1.0 + k));
    };
    e.grid = Points({"k=0", "k=1", "k=2", "k=3", "k=5", "k=10", "k=50"});
    e.notes = "The log-singular integral forms of this sum are not evaluated; "
              "the double harmonic sum is checked instead.";
  }
}

}  // namespace dpsum::catalog_detail
