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

void AddHypergeometric(std::vector<Identity>& out) {
  {
    Identity& e = Add(out, "EQ_009", "3F2(1, n+1, beta; n+2, alpha | 1)",
                      Mode::kConvergent);
    e.schema = {IntParam("n", 0, 10), RealParam("alpha", 0.5, 9.0),
                RealParam("beta", 0.1, 5.0)};
    e.in_domain = [](const ParamPoint& p) {
      return p["alpha"] - p["beta"] >= 1.2 && ClearOfInt(p["alpha"]) &&
             OffInt(p["beta"]);
    };
    e.lhs = [](const ParamPoint& p) {
      const double n = D(p.integer("n"));
      return One(pfq_series({{1.0, n + 1.0, p["beta"]}, {n + 2.0, p["alpha"]}}));
    };
    e.rhs = [](const ParamPoint& p) {
      return f32_shifted_unit(p.integer("n"), p["alpha"], p["beta"]);
    };
    e.grid = Points({"n=0 alpha=3.7 beta=1.2", "n=2 alpha=4.1 beta=1.3",
                     "n=3 alpha=5.5 beta=0.7", "n=1 alpha=4.5 beta=2.5",
                     "n=5 alpha=8.25 beta=1.5", "n=10 alpha=6.3 beta=2.1",
                     "n=1 alpha=4 beta=2.5"});
    e.notes = "The point alpha - n - 1 at a pole goes through the "
              "symmetric limit in alpha.";
  }
  {
    Identity& e = Add(out, "EQ_011", "3F2(a, b, c; n+b, c+1 | 1)",
                      Mode::kConvergent);
    e.schema = {RealParam("a", -0.9, 2.5), RealParam("b", 0.2, 4.0),
                RealParam("c", 0.2, 4.0), IntParam("n", 1, 5)};
    e.in_domain = [](const ParamPoint& p) {
      return p["a"] <= D(p.integer("n")) - 0.2 && ClearOfInt(p["a"]) &&
             ClearOfInt(p["b"] - p["c"]);
    };
    e.lhs = [](const ParamPoint& p) {
      const double b = p["b"], c = p["c"];
      return One(pfq_series(
          {{p["a"], b, c}, {D(p.integer("n")) + b, c + 1.0}}));
    };
    e.rhs = [](const ParamPoint& p) {
      return f32_lemma22(p["a"], p["b"], p["c"], p.integer("n"));
    };
    e.grid = Points({"a=0.3 b=1.7 c=2.2 n=2", "a=0.6 b=0.4 c=1.3 n=3",
                     "a=-0.4 b=2.4 c=0.9 n=1", "a=1 b=1.7 c=2.2 n=2",
                     "a=2 b=1.7 c=2.2 n=3", "a=0.5 b=3.2 c=2.2 n=2",
                     "a=0.25 b=1.5 c=0.5 n=5"});
    e.notes = "a = 1 uses the explicit digamma form; other integer a and "
              "integer b - c use the symmetric limit.";
  }
  {
    Identity& e = Add(out, "EQ_012", "3F2(1, b, c; n+b, c+1 | 1)",
                      Mode::kConvergent);
    e.schema = {RealParam("b", 0.2, 4.0), RealParam("c", 0.2, 4.0),
                IntParam("n", 1, 10)};
    e.in_domain = [](const ParamPoint& p) {
      return ClearOfInt(p["b"] - p["c"]);
    };
    e.lhs = [](const ParamPoint& p) {
      const double b = p["b"], c = p["c"];
      return One(pfq_series({{1.0, b, c}, {D(p.integer("n")) + b, c + 1.0}}));
    };
    e.rhs = [](const ParamPoint& p) {
      return f32_lemma22_a1(p["b"], p["c"], p.integer("n"));
    };
    e.grid = Points({"b=1.7 c=2.2 n=2", "b=0.4 c=1.3 n=1", "b=2.4 c=0.9 n=3",
                     "b=3.2 c=2.2 n=1", "b=2.2 c=2.2 n=2", "b=1.5 c=0.5 n=5",
                     "b=0.5 c=3.5 n=10"});
    e.notes = "Integer b - c is a removable singularity; evaluated by the "
              "symmetric limit in b.";
  }
  auto terminating_lhs = [](const ParamPoint& p) {
    return One(pfq_series(
        {{1.0, 1.0, 1.0, -D(p.integer("k"))}, {2.0, 2.0, 1.0 + p["c"]}}));
  };
  auto terminating_grid = Points({"k=0 c=1.5", "k=1 c=0.5", "k=2 c=1",
                                  "k=3 c=1.5", "k=5 c=2.3", "k=10 c=0.1",
                                  "k=20 c=9.7"});
  {
    Identity& e = Add(out, "EQ_013A",
                      "4F3(1, 1, 1, -k; 2, 2, 1+c | 1), first digamma form",
                      Mode::kFiniteSum);
    e.schema = {IntParam("k", 0, 20), RealParam("c", 0.1, 10.0)};
    e.lhs = terminating_lhs;
    e.rhs = [](const ParamPoint& p) {
      return f43_terminating(p.integer("k"), p["c"]).form_a;
    };
    e.grid = terminating_grid;
  }
  {
    Identity& e = Add(out, "EQ_013B",
                      "4F3(1, 1, 1, -k; 2, 2, 1+c | 1), second digamma form",
                      Mode::kFiniteSum);
    e.schema = {IntParam("k", 0, 20), RealParam("c", 0.1, 10.0)};
    e.lhs = terminating_lhs;
    e.rhs = [](const ParamPoint& p) {
      return f43_terminating(p.integer("k"), p["c"]).form_b;
    };
    e.grid = terminating_grid;
  }
  {
    Identity& e = Add(out, "EQ_014", "4F3(1, 1, 1, 1; 2, 2, 1+m | 1) / m",
                      Mode::kConvergent);
    e.schema = {IntParam("m", 2, 10)};
    e.lhs = [](const ParamPoint& p) {
      const double m = D(p.integer("m"));
      return One(pfq_series({{1, 1, 1, 1}, {2, 2, 1.0 + m}}, 1.0 / m));
    };
    e.rhs = [](const ParamPoint& p) { return f43_integer(p.integer("m")); };
    e.grid = Points({"m=2", "m=3", "m=4", "m=5", "m=8", "m=10"});
  }
  {
    Identity& e = Add(out, "EQ_015",
                      "4F3(1, 1, 1, 1; 2, 2, 3/2+n | 1) / (1/2+n)",
                      Mode::kConvergent);
    e.schema = {IntParam("n", 0, 10)};
    e.lhs = [](const ParamPoint& p) {
      const double q = 0.5 + D(p.integer("n"));
      return One(pfq_series({{1, 1, 1, 1}, {2, 2, 1.0 + q}}, 1.0 / q));
    };
    e.rhs = [](const ParamPoint& p) {
      return f43_half(p.integer("n"), HalfBranch::kPlus);
    };
    e.grid = Points({"n=0", "n=1", "n=2", "n=3", "n=5", "n=10"});
  }
  {
    Identity& e = Add(out, "EQ_016",
                      "4F3(1, 1, 1, 1; 2, 2, 3/2-n | 1) / (1/2-n)",
                      Mode::kContinuationOnly);
    e.schema = {IntParam("n", 0, 10)};
    e.rhs = [](const ParamPoint& p) {
      return f43_half(p.integer("n"), HalfBranch::kMinus);
    };
    e.grid = Points({"n=0", "n=1", "n=2", "n=3", "n=5", "n=10"});
    e.notes = "Analytic continuation in the lower parameter; the defining "
              "series diverges for n >= 2. Checked against the convergent "
              "continuation series through XC_016_APB23.";
  }
  {
    Identity& e = Add(out, "EQ_017A", "4F3(1, 1, 1, 1; 2, 2, 1/2 | 1)",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      return One(pfq_series({{1, 1, 1, 1}, {2, 2, 0.5}}));
    };
    e.rhs = [](const ParamPoint&) {
      return 1.75 * K().zeta3 + 0.5 * K().pi_sq * (1.0 - K().ln2);
    };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Add(out, "EQ_017B", "4F3(1, 1, 1, 1; 2, 2, 3/2 | 1)",
                      Mode::kConvergent);
    e.lhs = [](const ParamPoint&) {
      return One(pfq_series({{1, 1, 1, 1}, {2, 2, 1.5}}));
    };
    e.rhs = [](const ParamPoint&) {
      return -1.75 * K().zeta3 + 0.5 * K().pi_sq * K().ln2;
    };
    e.grid = {ParamPoint()};
  }
}

}  // namespace dpsum::catalog_detail
