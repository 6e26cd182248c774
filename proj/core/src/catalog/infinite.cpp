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

// Common right-hand side of the p, q pair of denominators.
double PairedDenominators(double p, double q) {
  if (std::fabs(p - q) < kGap) {
    mark_limit_path();
    return Psi1(q) * Psi(q) - 0.5 * Psi2(q);
  }
  return (Psi1(p) - Psi(p) * Psi(p) - Psi1(q) + Psi(q) * Psi(q)) /
         (2.0 * (q - p));
}

double Eq034(double p, double q, std::int64_t m) {
  const double md = D(m);
  const double head =
      (0.5 * (Psi1(p) - Psi(p) * Psi(p) - Psi1(q) + Psi(q) * Psi(q)) +
       Psi(p) * Psi(p) - Psi(q) * Psi(q) - Psi(p) * Psi(p - md) +
       Psi(q) * Psi(q - md)) / (q - p);
  double corr = 0.0;
  for (std::int64_t l = 0; l < m; ++l) {
    corr += Psi(D(l) + 1.0) / ((p - D(l) - 1.0) * (q - D(l) - 1.0));
  }
  return head - corr;
}

// Gamma(q+l)/Gamma(m+l) series shared by several entries.
bool GammaTailDomain(const ParamPoint& p, double lo, double hi) {
  const double gap = p["m"] - p["q"];
  return gap >= lo && gap <= hi;
}

}  // namespace
}  // namespace dpsum::catalog_detail

namespace dpsum {

double rho(double alpha, double q) {
  using catalog_detail::Psi;
  using catalog_detail::Psi1;
  const double a = Psi(alpha + q - 1.0), b = Psi(alpha - 1.0);
  return 0.5 * (a * a - b * b - Psi1(alpha + q - 1.0) + Psi1(alpha - 1.0)) -
         Psi(1.0) * (a - b);
}

}  // namespace dpsum

namespace dpsum::catalog_detail {

void AddInfinite(std::vector<Identity>& out) {
  {
    Identity& e = Add(
        out, "EQ_028",
        "sum_{l>=1} Gamma(b+l)/Gamma(c+l) [psi(b+l) - psi(b+1)] / l",
        Mode::kConvergent);
    e.schema = {RealParam("b", 0.1, 4.0), RealParam("c", 0.5, 8.0)};
    e.in_domain = [](const ParamPoint& p) {
      const double gap = p["c"] - p["b"];
      return gap >= 1.0 && gap <= 5.0;
    };
    e.lhs = [](const ParamPoint& p) {
      const double b = p["b"], c = p["c"];
      TermFn g = GammaRatioTerm(b, c, 1);
      const double base = Psi(b + 1.0);
      return One(Inf([g, b, base](std::int64_t l) {
        return g(l) * (Psi(b + D(l)) - base) / D(l);
      }, TailClass::PowerLog(1, 1.0 + c - b), 1));
    };
    e.rhs = [](const ParamPoint& p) {
      const double b = p["b"], c = p["c"];
      return gamma_product({b}, {c}) *
             (Psi1(c - b) - (Psi(c) - Psi(c - b)) / b);
    };
    e.grid = Points({"b=0.6 c=3.1", "b=1.5 c=2.5", "b=2 c=4.5", "b=0.25 c=2",
                     "b=3.3 c=7", "b=1 c=3"});
  }
  {
    Identity& e = Add(out, "EQ_029", "sum_l psi(b+l+1)/((l+1)(b+l+1))",
                      Mode::kConvergent);
    e.schema = {RealParam("b", 0.1, 8.0)};
    e.lhs = [](const ParamPoint& p) {
      const double b = p["b"];
      return One(Inf([b](std::int64_t l) {
        const double x = D(l);
        return Psi(b + x + 1.0) / ((x + 1.0) * (b + x + 1.0));
      }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double b = p["b"];
      const double h = Psi(b + 1.0) - Psi(1.0);
      return (K().pi_sq / 6.0 - h / b + Psi(b + 1.0) / b * h) / b;
    };
    e.alt_rhs = [](const ParamPoint& p) {
      const double b = p["b"];
      const double h = Psi(b + 1.0) - Psi(1.0);
      return (K().pi_sq / 6.0 - h / b + Psi(b + 1.0) * h) / b;
    };
    e.alt_note = "Last brace term without the extra 1/b: "
                 "psi(b+1) (psi(b+1) - psi(1)).";
    e.notes = "Literal reading fails except at b = 1, where both readings "
              "coincide.";
    e.baseline_ambiguous = true;
    e.grid = Points({"b=0.6", "b=2.5", "b=1", "b=0.5", "b=3.7", "b=7.25"});
  }
  {
    Identity& e = Add(out, "EQ_030", "sum_l psi(l+1)/(l+1)^2",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      return One(Inf([](std::int64_t l) {
        const double x = D(l) + 1.0;
        return Psi(x) / (x * x);
      }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint&) {
      return K().zeta3 - K().pi_sq * K().gamma_em / 6.0;
    };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Add(out, "EQ_031", "sum_l psi(l+1)/((l+p)(l+q))",
                      Mode::kConvergent);
    e.schema = {RealParam("p", 0.1, 6.0), RealParam("q", 0.1, 6.0)};
    e.in_domain = [](const ParamPoint& p) {
      return ClearOrOn(p["p"] - p["q"]);
    };
    e.lhs = [](const ParamPoint& pp) {
      const double p = pp["p"], q = pp["q"];
      return One(Inf([p, q](std::int64_t l) {
        const double x = D(l);
        return Psi(x + 1.0) / ((x + p) * (x + q));
      }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      return PairedDenominators(p["p"], p["q"]);
    };
    e.grid = Points({"p=1.5 q=2.25", "p=2 q=2", "p=0.5 q=3.5", "p=0.3 q=1",
                     "p=4.7 q=0.8", "p=1 q=2"});
    e.notes = "p = q uses the trigamma/tetragamma form of EQ_033.";
  }
  {
    Identity& e = Add(out, "EQ_033", "sum_l psi(l+1)/(l+q)^2",
                      Mode::kConvergent);
    e.schema = {RealParam("q", 0.1, 8.0)};
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"];
      return One(Inf([q](std::int64_t l) {
        const double x = D(l) + q;
        return Psi(D(l) + 1.0) / (x * x);
      }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"];
      return Psi1(q) * Psi(q) - 0.5 * Psi2(q);
    };
    e.grid = Points({"q=1", "q=2.7", "q=0.3", "q=0.5", "q=2", "q=5.5"});
  }
  {
    Identity& e = Add(out, "EQ_034", "sum_l psi(l+m+1)/((l+p)(l+q))",
                      Mode::kConvergent);
    e.schema = {RealParam("p", 0.1, 6.0), RealParam("q", 0.1, 6.0),
                IntParam("m", 0, 10)};
    e.in_domain = [](const ParamPoint& p) {
      return OffInt(p["p"]) && OffInt(p["q"]) && ClearOrOn(p["p"] - p["q"]);
    };
    e.lhs = [](const ParamPoint& pp) {
      const double p = pp["p"], q = pp["q"], m = D(pp.integer("m"));
      return One(Inf([p, q, m](std::int64_t l) {
        const double x = D(l);
        return Psi(x + m + 1.0) / ((x + p) * (x + q));
      }, TailClass::PowerLog(1, 2.0)));
    };
    e.rhs = [](const ParamPoint& pp) {
      const double p = pp["p"], q = pp["q"];
      const std::int64_t m = pp.integer("m");
      if (std::fabs(p - q) < kGap) {
        return symmetric_limit([&](double x) { return Eq034(p, x, m); }, p);
      }
      return Eq034(p, q, m);
    };
    e.grid = Points({"p=1.5 q=2.25 m=2", "p=0.3 q=3.6 m=3", "p=1.5 q=2.25 m=0",
                     "p=2.5 q=2.5 m=1", "p=0.5 q=5.5 m=5",
                     "p=4.25 q=1.75 m=10", "p=1.5 q=3.5 m=2"});
    e.notes = "p = q goes through the symmetric limit in q. Integer p - q "
              "is regular.";
  }
  {
    Identity& e = Add(out, "EQ_036",
                      "sum_l [psi(alpha+q+l) - psi(alpha+l)]/(l+1) = rho",
                      Mode::kPairedDivergent);
    e.schema = {RealParam("alpha", 1.1, 6.0), RealParam("q", 0.0, 4.0)};
    e.lhs = [](const ParamPoint& p) {
      const double a = p["alpha"], q = p["q"];
      return Pair(Inf([a, q](std::int64_t l) {
                    return Psi(a + q + D(l)) / (D(l) + 1.0);
                  }, TailClass::PowerLog(0, 2.0)),
                  Inf([a](std::int64_t l) {
                    return Psi(a + D(l)) / (D(l) + 1.0);
                  }, TailClass::PowerLog(0, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) { return rho(p["alpha"], p["q"]); };
    e.grid = Points({"alpha=2.5 q=1.3", "alpha=1.7 q=0.4", "alpha=2.5 q=0",
                     "alpha=3 q=2", "alpha=1.5 q=0.5", "alpha=5.25 q=3.75"});
  }
  {
    Identity& e = Add(out, "EQ_038", "sum_l [psi(q+l+1) - psi(l+1)]/(l+1)",
                      Mode::kPairedDivergent);
    e.schema = {RealParam("q", 0.1, 6.0)};
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"];
      return Pair(Inf([q](std::int64_t l) {
                    return Psi(q + D(l) + 1.0) / (D(l) + 1.0);
                  }, TailClass::PowerLog(0, 2.0)),
                  Inf([](std::int64_t l) {
                    return Psi(D(l) + 1.0) / (D(l) + 1.0);
                  }, TailClass::PowerLog(0, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"];
      const double h = Psi(q) - Psi(1.0);
      return 0.5 * (h * h + Psi1(0.5) - Psi1(q));
    };
    e.alt_rhs = [](const ParamPoint& p) {
      const double q = p["q"];
      const double h = Psi(q) - Psi(1.0);
      return 0.5 * (h * h + Psi1(1.0) - Psi1(q));
    };
    e.alt_note = "psi'(1/2) read as psi'(1), as the alpha -> 1 limit of "
                 "rho suggests.";
    e.notes = "The literal psi'(1/2) reading passes; the psi'(1) reading "
              "fails (by pi^2/6 at q = 1).";
    e.grid = Points({"q=0.5", "q=2.3", "q=2", "q=1", "q=3.75", "q=0.25"});
  }
  {
    Identity& e = Add(out, "EQ_039", "sum_l psi'(q+l)/(l+1)",
                      Mode::kConvergent);
    e.schema = {RealParam("q", 0.1, 8.0)};
    e.in_domain = [](const ParamPoint& p) {
      return std::fabs(p["q"] - 1.0) >= 0.05;
    };
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"];
      return One(Inf([q](std::int64_t l) {
        return Psi1(q + D(l)) / (D(l) + 1.0);
      }, TailClass::PowerLog(0, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double r = p["q"] - 1.0;
      return -0.5 * Psi2(r) + Psi(r) * Psi1(r) - Psi(1.0) * Psi1(r);
    };
    e.grid = Points({"q=1.5", "q=2.3", "q=3", "q=0.5", "q=2", "q=6.25"});
  }
  {
    Identity& e = Add(out, "EQ_040", "sum_l psi'(1+l)/(l+1)",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      return One(Inf([](std::int64_t l) {
        return Psi1(D(l) + 1.0) / (D(l) + 1.0);
      }, TailClass::PowerLog(0, 2.0)));
    };
    e.rhs = [](const ParamPoint&) { return 2.0 * K().zeta3; };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Add(out, "EQ_041",
                      "sum_l [psi(alpha+q+l) - psi(alpha+l)]/(l+m+1)",
                      Mode::kPairedDivergent);
    e.schema = {RealParam("alpha", 0.1, 8.0), RealParam("q", 0.0, 4.0),
                IntParam("m", 0, 10)};
    e.in_domain = [](const ParamPoint& p) {
      return OffInt(p["alpha"]) && OffInt(p["alpha"] + p["q"]);
    };
    e.lhs = [](const ParamPoint& p) {
      const double a = p["alpha"], q = p["q"], m = D(p.integer("m"));
      return Pair(Inf([a, q, m](std::int64_t l) {
                    return Psi(a + q + D(l)) / (D(l) + m + 1.0);
                  }, TailClass::PowerLog(0, 2.0)),
                  Inf([a, m](std::int64_t l) {
                    return Psi(a + D(l)) / (D(l) + m + 1.0);
                  }, TailClass::PowerLog(0, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double a = p["alpha"], q = p["q"];
      const std::int64_t m = p.integer("m");
      double s = 0.0;
      for (std::int64_t l = 0; l < m; ++l) {
        const double x = D(l - m);
        s += (Psi(a + q + x) - Psi(a + x)) / (D(l) + 1.0);
      }
      return rho(a - D(m), q) - s;
    };
    e.grid = Points({"alpha=2.5 q=1.3 m=2", "alpha=3.7 q=0.4 m=1",
                     "alpha=2.5 q=1.3 m=0", "alpha=1.5 q=2 m=3",
                     "alpha=0.25 q=0.5 m=5", "alpha=6.5 q=3.25 m=10"});
  }
  {
    Identity& e = Add(out, "EQ_042",
                      "sum_l [psi(l+m+1) - psi(l+m+1/2)]/(l+m+1)",
                      Mode::kPairedDivergent);
    e.schema = {IntParam("m", 0, 10)};
    e.lhs = [](const ParamPoint& p) {
      const double m = D(p.integer("m"));
      return Pair(Inf([m](std::int64_t l) {
                    return Psi(D(l) + m + 1.0) / (D(l) + m + 1.0);
                  }, TailClass::PowerLog(0, 2.0)),
                  Inf([m](std::int64_t l) {
                    return Psi(D(l) + m + 0.5) / (D(l) + m + 1.0);
                  }, TailClass::PowerLog(0, 2.0)));
    };
    auto rhs = [](const ParamPoint& p, double sign) {
      const std::int64_t m = p.integer("m");
      const double md = D(m);
      const double h = Psi(0.5), one = Psi(1.0), top = Psi(md + 1.0);
      double s = 0.0;
      for (std::int64_t l = 0; l < m; ++l) s += Psi(D(l) + 0.5) / (D(l) + 1.0);
      return 0.5 * (Psi1(1.0) - h * h + sign * Psi1(md + 1.0) - top * top) +
             2.0 * (one - h) + h * one + s;
    };
    e.rhs = [rhs](const ParamPoint& p) { return rhs(p, -1.0); };
    e.alt_rhs = [rhs](const ParamPoint& p) { return rhs(p, 1.0); };
    e.alt_note = "-psi'(m+1) read as +psi'(m+1), the sign pattern of rho.";
    e.notes = "The literal sign pattern passes; the alternative fails for "
              "every m.";
    e.grid = Points({"m=0", "m=1", "m=2", "m=3", "m=5", "m=10"});
  }
  {
    Identity& e = Add(out, "EQ_043", "sum_l Gamma(q+l)/Gamma(m+l) psi(l+1)",
                      Mode::kConvergent);
    e.schema = {RealParam("q", 0.1, 4.0), RealParam("m", 1.5, 8.0)};
    e.in_domain = [](const ParamPoint& p) {
      return GammaTailDomain(p, 1.5, 6.0);
    };
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"], m = p["m"];
      TermFn g = GammaRatioTerm(q, m);
      return One(Inf([g](std::int64_t l) { return g(l) * Psi(D(l) + 1.0); },
                     TailClass::PowerLog(1, m - q)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"], m = p["m"];
      return gamma_product({q, m - q - 1.0}, {m - 1.0, m - q}) *
             (Psi(1.0) - Psi(m - q - 1.0) + Psi(m - 1.0));
    };
    e.grid = Points({"q=0.7 m=3.2", "q=1.5 m=4", "q=0.5 m=2", "q=2 m=5",
                     "q=1 m=3", "q=2.5 m=4.5"});
  }
  auto gamma_tail_schema = [] {
    return std::vector<ParamSpec>{RealParam("q", 0.1, 4.0),
                                  RealParam("m", 1.5, 8.0)};
  };
  auto gamma_tail_domain = [](const ParamPoint& p) {
    return GammaTailDomain(p, 0.5, 6.0) && OffInt(p["q"]);
  };
  auto gamma_tail_grid = Points({"q=0.7 m=3.2", "q=1.5 m=4", "q=2.5 m=3",
                                 "q=0.5 m=2", "q=3.25 m=7", "q=0.25 m=1.5"});
  {
    Identity& e = Add(out, "EQ_044",
                      "sum_l Gamma(q+l) psi(m+l)/(Gamma(m+l)(l+1))",
                      Mode::kConvergent);
    e.schema = gamma_tail_schema();
    e.in_domain = gamma_tail_domain;
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"], m = p["m"];
      TermFn g = GammaRatioTerm(q, m);
      return One(Inf([g, m](std::int64_t l) {
        return g(l) * Psi(m + D(l)) / (D(l) + 1.0);
      }, TailClass::PowerLog(1, 1.0 + m - q)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"], m = p["m"];
      const double a = Psi(m - 1.0);
      return gamma_product({q - 1.0}, {m - 1.0}) *
             (Psi1(m - q) - Psi1(m - 1.0) + a * (a - Psi(m - q)));
    };
    e.grid = gamma_tail_grid;
  }
  {
    Identity& e = Add(out, "EQ_045",
                      "sum_l Gamma(q+l) psi(1+l)/(Gamma(m+l)(1+l))",
                      Mode::kConvergent);
    e.schema = gamma_tail_schema();
    e.in_domain = gamma_tail_domain;
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"], m = p["m"];
      TermFn g = GammaRatioTerm(q, m);
      return One(Inf([g](std::int64_t l) {
        return g(l) * Psi(D(l) + 1.0) / (D(l) + 1.0);
      }, TailClass::PowerLog(1, 1.0 + m - q)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"], m = p["m"];
      const double d = Psi(m - 1.0) - Psi(m - q);
      return 0.5 * gamma_product({q - 1.0}, {m - 1.0}) *
             (d * d - 2.0 * K().gamma_em * d + Psi1(m - q) - Psi1(m - 1.0));
    };
    e.grid = gamma_tail_grid;
  }
  {
    Identity& e = Add(out, "EQ_046", "sum_l Gamma(c+l)/Gamma(m+l) psi(f+l)",
                      Mode::kConvergent);
    e.schema = {RealParam("c", -0.9, 4.0), RealParam("f", 0.1, 4.0),
                RealParam("m", 2.0, 10.0, 1.0)};
    e.in_domain = [](const ParamPoint& p) {
      const double c = p["c"], f = p["f"];
      return p["m"] - c >= 1.5 && OffInt(c) && OffInt(f) && OffInt(f - c);
    };
    e.lhs = [](const ParamPoint& p) {
      const double c = p["c"], f = p["f"], m = p["m"];
      TermFn g = GammaRatioTerm(c, m);
      return One(Inf([g, f](std::int64_t l) { return g(l) * Psi(f + D(l)); },
                     TailClass::PowerLog(1, m - c)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double c = p["c"], f = p["f"], md = p["m"];
      if (md != std::nearbyint(md)) {
        throw UnsupportedShape(
            "EQ_046: the inner series terminates only for integer m");
      }
      const auto m = static_cast<std::int64_t>(md);
      double inner = 0.0;
      for (std::int64_t l = 0; l <= m - 2; ++l) {
        const double x = D(l);
        const double t = gamma_product({f - c + x},
                                       {md - 1.0 - x, 2.0 - c + x, x + 1.0}) /
                         (1.0 - c + x);
        inner += (l % 2 == 0) ? t : -t;
      }
      const double g = md - c - 1.0;
      return gamma_product({c}, {}) / g *
             ((Psi(f - 1.0) + 1.0 / g) * gamma_product({}, {md - 1.0}) -
              gamma_product({f, 1.0 - f, 1.0 - c}, {f - c, md - f}) -
              gamma_product({2.0 - f, md - c}, {md - f, f - c}) * inner);
    };
    e.grid = Points({"c=0.3 f=1.7 m=3", "c=0.6 f=2.4 m=4", "c=-0.4 f=0.8 m=5",
                     "c=0.5 f=1.25 m=2", "c=2.5 f=3.25 m=10",
                     "c=-0.5 f=0.25 m=3"});
    e.notes = "m must be an integer so that the inner series terminates; "
              "other m return UnsupportedShape.";
  }
  {
    Identity& e = Add(out, "EQ_049", "sum_l Gamma(l+q) psi'(l+1)/Gamma(l+2)",
                      Mode::kConvergent);
    e.schema = {RealParam("q", -1.9, 1.5)};
    e.in_domain = [](const ParamPoint& p) { return OffInt(p["q"]); };
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"];
      TermFn g = GammaRatioTerm(q, 2.0);
      return One(Inf([g](std::int64_t l) { return g(l) * Psi1(D(l) + 1.0); },
                     TailClass::PowerLog(0, 3.0 - q)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"];
      const double s = Psi(1.0 - q), g = K().gamma_em;
      return gamma_product({q - 1.0}, {}) *
             (0.5 * Psi1(1.0 - q) - 0.5 * s * s - K().pi_sq / 4.0 -
              0.5 * g * g - g * s);
    };
    e.grid = Points({"q=0.3", "q=-0.5", "q=0.8", "q=1.25", "q=-1.5",
                     "q=0.5"});
  }
  {
    Identity& e = Add(out, "EQ_050",
                      "sum_l Gamma(l+q) psi(l+q)/(Gamma(l+1)(q+l)^2)",
                      Mode::kConvergent);
    e.schema = {RealParam("q", -1.9, 1.5)};
    e.in_domain = [](const ParamPoint& p) { return OffInt(p["q"]); };
    e.lhs = [](const ParamPoint& p) {
      const double q = p["q"];
      TermFn g = GammaRatioTerm(q, 1.0);
      return One(Inf([g, q](std::int64_t l) {
        const double x = q + D(l);
        return g(l) * Psi(x) / (x * x);
      }, TailClass::PowerLog(1, 3.0 - q)));
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = p["q"], pi = K().pi, g = K().gamma_em;
      const double cot = std::cos(pi * q) / std::sin(pi * q);
      return pi * gamma_product({q}, {}) / std::sin(pi * q) *
             ((Psi(q) + g) * (g + pi * cot) - K().pi_sq / 6.0);
    };
    e.grid = Points({"q=0.3", "q=0.6", "q=-0.4", "q=1.25", "q=-1.5",
                     "q=0.5"});
  }
}

}  // namespace dpsum::catalog_detail
