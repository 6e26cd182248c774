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

ParamPoint With(std::initializer_list<std::pair<const char*, double>> kv) {
  ParamPoint p;
  for (const auto& [k, v] : kv) p.set(k, v);
  return p;
}

// The 4F3(1,1,1,1; 2,2,q+1 | 1)/q term of the APB_23 first form, given the
// value of the left-hand sum.
double F43FromApb23(double sum, double q) {
  return sum - K().gamma_em * Psi1(q) - Psi(q) * Psi1(q) + 0.5 * Psi2(q);
}

Identity& Link(std::vector<Identity>& out, std::string id, std::string title,
               std::string a, std::string b) {
  Identity& e = Add(out, std::move(id), std::move(title), Mode::kCrossCheck);
  e.links = {std::move(a), std::move(b)};
  return e;
}

}  // namespace

void AddCross(std::vector<Identity>& out) {
  {
    Identity& e = Link(out, "XC_013", "both digamma forms of the terminating 4F3",
                       "EQ_013A", "EQ_013B");
    e.schema = {IntParam("k", 0, 20), RealParam("c", 0.1, 10.0)};
    e.lhs_closed = [](const ParamPoint& p) {
      return f43_terminating(p.integer("k"), p["c"]).form_a;
    };
    e.rhs = [](const ParamPoint& p) {
      return f43_terminating(p.integer("k"), p["c"]).form_b;
    };
    e.grid = Points({"k=7 c=2.3", "k=0 c=1.5", "k=1 c=0.5", "k=3 c=1",
                     "k=10 c=4.75", "k=20 c=0.1"});
  }
  {
    Identity& e = Link(out, "XC_016_APB23",
                       "continued 4F3 at 3/2-n against the convergent sum "
                       "sum_l psi'(l+1)/(q+l), q = 1/2-n",
                       "EQ_016", "APB_23");
    e.schema = {IntParam("n", 0, 10)};
    e.lhs = [](const ParamPoint& p) {
      const double q = 0.5 - D(p.integer("n"));
      return One(Inf([q](std::int64_t l) {
        return Psi1(D(l) + 1.0) / (q + D(l));
      }, TailClass::PowerLog(0, 2.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      const std::int64_t n = p.integer("n");
      const double q = 0.5 - D(n);
      return f43_half(n, HalfBranch::kMinus) + K().gamma_em * Psi1(q) +
             Psi(q) * Psi1(q) - 0.5 * Psi2(q);
    };
    e.grid = Points({"n=0", "n=1", "n=2", "n=3", "n=5", "n=10"});
  }
  {
    Identity& e = Link(out, "XC_017A", "EQ_016 at n = 1 against EQ_017A",
                       "EQ_016", "EQ_017A");
    e.lhs_closed = [](const ParamPoint&) {
      return -0.5 * f43_half(1, HalfBranch::kMinus);
    };
    e.rhs = [](const ParamPoint&) {
      return eval_closed("EQ_017A", ParamPoint());
    };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Link(out, "XC_017B", "EQ_015 at n = 0 against EQ_017B",
                       "EQ_015", "EQ_017B");
    e.lhs_closed = [](const ParamPoint&) {
      return 0.5 * f43_half(0, HalfBranch::kPlus);
    };
    e.rhs = [](const ParamPoint&) {
      return eval_closed("EQ_017B", ParamPoint());
    };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Link(out, "XC_014_APB23",
                       "integer-m 4F3 against the terminating Gamma series",
                       "EQ_014", "APB_23");
    e.schema = {IntParam("m", 2, 10)};
    e.lhs_closed = [](const ParamPoint& p) {
      return f43_integer(p.integer("m"));
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = D(p.integer("m"));
      return F43FromApb23(eval_closed("APB_23B", With({{"q", q}})), q);
    };
    e.grid = Points({"m=2", "m=3", "m=4", "m=5", "m=8", "m=10"});
  }
  {
    Identity& e = Link(out, "XC_015_APB23",
                       "half-integer 4F3 against the Gamma series",
                       "EQ_015", "APB_23");
    e.schema = {IntParam("n", 0, 10)};
    e.lhs_closed = [](const ParamPoint& p) {
      return f43_half(p.integer("n"), HalfBranch::kPlus);
    };
    e.rhs = [](const ParamPoint& p) {
      const double q = 0.5 + D(p.integer("n"));
      return F43FromApb23(eval_closed("APB_23B", With({{"q", q}})), q);
    };
    e.grid = Points({"n=0", "n=1", "n=2", "n=3", "n=5", "n=10"});
  }
  {
    Identity& e = Link(out, "XC_033_030", "EQ_033 at q = 1 against EQ_030",
                       "EQ_033", "EQ_030");
    e.lhs_closed = [](const ParamPoint&) {
      return eval_closed("EQ_033", With({{"q", 1.0}}));
    };
    e.rhs = [](const ParamPoint&) {
      return eval_closed("EQ_030", ParamPoint());
    };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Link(out, "XC_063_065",
                       "EQ_063 at n = 3, q = 1 plus gamma zeta(3) against "
                       "EQ_065",
                       "EQ_063", "EQ_065");
    e.lhs_closed = [](const ParamPoint&) {
      return eval_closed("EQ_063", With({{"q", 1.0}, {"n", 3.0}})) +
             K().gamma_em * K().zeta3;
    };
    e.rhs = [](const ParamPoint&) {
      return eval_closed("EQ_065", ParamPoint());
    };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Link(out, "XC_064_065",
                       "EQ_064 at n = 3 minus zeta(4) against EQ_065",
                       "EQ_064", "EQ_065");
    e.lhs_closed = [](const ParamPoint&) {
      return eval_closed("EQ_064", With({{"n", 3.0}})) - K().pi_4 / 90.0;
    };
    e.rhs = [](const ParamPoint&) {
      return eval_closed("EQ_065", ParamPoint());
    };
    e.grid = {ParamPoint()};
  }
  {
    Identity& e = Link(out, "XC_034_031", "EQ_034 at m = 0 against EQ_031",
                       "EQ_034", "EQ_031");
    e.schema = {RealParam("p", 0.1, 6.0), RealParam("q", 0.1, 6.0)};
    e.in_domain = [](const ParamPoint& p) {
      ParamPoint with_m = p;
      with_m.set("m", 0.0);
      return in_domain(identity("EQ_034"), with_m) &&
             in_domain(identity("EQ_031"), p);
    };
    e.lhs_closed = [](const ParamPoint& p) {
      ParamPoint with_m = p;
      with_m.set("m", 0.0);
      return eval_closed("EQ_034", with_m);
    };
    e.rhs = [](const ParamPoint& p) { return eval_closed("EQ_031", p); };
    e.grid = Points({"p=1.5 q=2.25", "p=0.3 q=3.6", "p=2.5 q=2.5",
                     "p=0.5 q=5.5", "p=4.25 q=1.75"});
  }
  {
    Identity& e = Link(out, "XC_041_036", "EQ_041 at m = 0 against EQ_036",
                       "EQ_041", "EQ_036");
    e.schema = {RealParam("alpha", 1.1, 6.0), RealParam("q", 0.0, 4.0)};
    e.in_domain = [](const ParamPoint& p) {
      ParamPoint with_m = p;
      with_m.set("m", 0.0);
      return in_domain(identity("EQ_041"), with_m);
    };
    e.lhs_closed = [](const ParamPoint& p) {
      ParamPoint with_m = p;
      with_m.set("m", 0.0);
      return eval_closed("EQ_041", with_m);
    };
    e.rhs = [](const ParamPoint& p) { return eval_closed("EQ_036", p); };
    e.grid = Points({"alpha=2.5 q=1.3", "alpha=1.7 q=0.4", "alpha=3.25 q=0",
                     "alpha=5.5 q=3.75"});
  }
  {
    Identity& e = Link(out, "XC_031_033", "EQ_031 at p = q against EQ_033",
                       "EQ_031", "EQ_033");
    e.schema = {RealParam("q", 0.1, 6.0)};
    e.lhs_closed = [](const ParamPoint& p) {
      return eval_closed("EQ_031", With({{"p", p["q"]}, {"q", p["q"]}}));
    };
    e.rhs = [](const ParamPoint& p) { return eval_closed("EQ_033", p); };
    e.grid = Points({"q=1", "q=2.7", "q=0.3", "q=0.5", "q=5.5"});
  }
  {
    Identity& e = Link(out, "XC_053_STEP",
                       "series differencing V_k - V_{k-1} against the "
                       "closed increment",
                       "EQ_053", "EQ_051");
    e.schema = {IntParam("k", 1, 10)};
    e.lhs = [](const ParamPoint& p) {
      const double k = D(p.integer("k"));
      return One(Inf([k](std::int64_t l) {
        const double x = D(l);
        return (1.0 / (x + k - 0.5) - 1.0 / (x + k)) / (x + 0.5);
      }, TailClass::PowerLog(0, 3.0)));
    };
    e.rhs = [](const ParamPoint& p) {
      return Eq053Increment(p.integer("k"));
    };
    e.grid = Points({"k=1", "k=2", "k=3", "k=4", "k=5"});
    e.notes = "V_0 is EQ_051; the increments validate the recursion "
              "independently of the EQ_053 closed form.";
  }
}

}  // namespace dpsum::catalog_detail
