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
#include <set>

#include "catalog/catalog.hpp"
#include "dpsum/registry.hpp"
#include "dpsum/specfun.hpp"
#include "oracles.hpp"

namespace dpsum {
namespace {

double D(std::int64_t l) { return static_cast<double>(l); }

ParamPoint P(std::string_view text) { return ParamPoint::parse(text); }

TEST(Registry, CatalogShape) {
  std::set<std::string> ids;
  for (const Identity& e : catalog()) {
    EXPECT_TRUE(ids.insert(e.id).second) << "duplicate " << e.id;
    EXPECT_FALSE(e.title.empty()) << e.id;
    EXPECT_TRUE(e.rhs) << e.id;
    EXPECT_FALSE(e.grid.empty()) << e.id;
    const bool has_lhs = static_cast<bool>(e.lhs);
    const bool has_closed = static_cast<bool>(e.lhs_closed);
    if (e.mode == Mode::kContinuationOnly) {
      EXPECT_FALSE(has_lhs || has_closed) << e.id;
    } else {
      EXPECT_NE(has_lhs, has_closed) << e.id;
    }
    if (e.mode == Mode::kCrossCheck) {
      EXPECT_EQ(e.links.size(), 2u) << e.id;
      for (const std::string& l : e.links) {
        EXPECT_NE(find_identity(l), nullptr) << e.id << " -> " << l;
      }
    }
    if (e.baseline_ambiguous) {
      EXPECT_TRUE(e.alt_lhs || e.alt_rhs) << e.id;
      EXPECT_FALSE(e.alt_note.empty()) << e.id;
    }
  }
  EXPECT_EQ(find_identity("EQ_999"), nullptr);
  EXPECT_THROW(identity("EQ_999"), SchemaError);
}

TEST(Registry, GridPointsAreInDomain) {
  for (const Identity& e : catalog()) {
    for (const ParamPoint& p : e.grid) {
      EXPECT_NO_THROW(check_schema(e, p)) << e.id << " [" << p.str() << "]";
      EXPECT_TRUE(in_domain(e, p)) << e.id << " [" << p.str() << "]";
    }
  }
}

TEST(Registry, SamplingIsReproducible) {
  for (const char* id : {"EQ_009", "EQ_031", "EQ_069", "APB_22"}) {
    const Identity& e = identity(id);
    const auto a = sample_points(e, 10, 42);
    const auto b = sample_points(e, 10, 42);
    ASSERT_EQ(a.size(), 10u) << id;
    EXPECT_EQ(a, b) << id;
    for (const ParamPoint& p : a) EXPECT_TRUE(in_domain(e, p)) << id;
  }
}

TEST(Registry, ParamPoint) {
  const ParamPoint p = P("b=0.7, c=1.9;k=10");
  EXPECT_EQ(p.str(), "b=0.7 c=1.9 k=10");
  EXPECT_EQ(p.integer("k"), 10);
  EXPECT_THROW(p.integer("b"), SchemaError);
  EXPECT_THROW(p.get("q"), SchemaError);
  EXPECT_THROW(P("b=x"), SchemaError);
  EXPECT_EQ(P(p.str()), p);
}

TEST(Registry, SchemaChecks) {
  const Identity& e = identity("EQ_031");
  EXPECT_THROW(check_schema(e, P("p=1")), SchemaError);
  EXPECT_THROW(check_schema(e, P("p=1 q=2 r=3")), SchemaError);
  EXPECT_THROW(check_schema(identity("EQ_053"), P("k=1.5")), SchemaError);
  const VerificationResult r = verify("EQ_031", P("p=1"));
  EXPECT_EQ(r.verdict, Verdict::kError);
  EXPECT_EQ(r.verdict_label(), "ERROR(SchemaError)");
}

TEST(Registry, VerdictsOnGrids) {
  for (const Identity& e : catalog()) {
    for (const ParamPoint& p : e.grid) {
      const VerificationResult r = verify(e.id, p);
      const std::string where = e.id + " [" + p.str() + "]";
      switch (r.verdict) {
        case Verdict::kPass:
          EXPECT_LE(std::min(r.abs_diff, r.rel_diff), r.tol_used) << where;
          break;
        case Verdict::kAmbiguous:
          EXPECT_TRUE(e.baseline_ambiguous) << where;
          EXPECT_TRUE(r.alt_evaluated) << where;
          break;
        case Verdict::kSkippedContinuation:
          EXPECT_EQ(e.mode, Mode::kContinuationOnly) << where;
          break;
        default:
          ADD_FAILURE() << where << " " << r.verdict_label() << " "
                        << r.message;
      }
      if (r.verdict != Verdict::kSkippedContinuation) {
        EXPECT_GE(r.tol_used, kDefaultTol) << where;
      }
      if (r.has_series) {
        EXPECT_GE(r.tol_used, 10.0 * r.series.abs_error_est) << where;
      }
    }
  }
}

TEST(Registry, ErrorsBecomeVerdicts) {
  const VerificationResult pole = verify("EQ_018", P("b=0 c=1 k=2"));
  EXPECT_EQ(pole.verdict, Verdict::kError);
  EXPECT_EQ(pole.error, ErrorKind::kPole);
  EXPECT_EQ(pole.verdict_label(), "ERROR(PoleError)");
  const VerificationResult skip = verify("EQ_016", P("n=3"));
  EXPECT_EQ(skip.verdict, Verdict::kSkippedContinuation);
  EXPECT_EQ(verify("EQ_999", P("")).error, ErrorKind::kSchema);
}

TEST(Registry, CrossChecks) {
  const VerificationResult r = cross_check("EQ_016", "EQ_017A", P("n=1"));
  EXPECT_EQ(r.verdict, Verdict::kPass) << r.message;
  EXPECT_NEAR(r.lhs_value, r.rhs_value, 1e-8);
  EXPECT_EQ(cross_check("EQ_017A", "EQ_016", P("n=1")).verdict,
            Verdict::kPass);
  EXPECT_EQ(cross_check("EQ_033", "EQ_030", P("q=1")).verdict,
            Verdict::kPass);
}

TEST(Registry, DualityEq18) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double b = u(rng), c = u(rng);
    const std::int64_t k = i % 31;
    ParamPoint p;
    p.set("b", b).set("c", c).set("k", D(k));
    double lhs = 0.0, dual = 0.0;
    for (std::int64_t l = 0; l <= k; ++l) {
      lhs += digamma(b + D(l)) / (c + D(l));
      dual += digamma(c + D(l) + 1.0) / (b + D(l));
    }
    const double want = digamma(c + D(k) + 1.0) * digamma(b + D(k) + 1.0) -
                        digamma(b) * digamma(c);
    EXPECT_NEAR(lhs + dual, want, 1e-11) << p.str();
    EXPECT_NEAR(eval_closed("EQ_018", p), lhs, 1e-11) << p.str();
    ParamPoint q;
    q.set("b", b).set("c", c).set("k", D(k));
    const double sym = eval_closed("EQ_020", q);
    double direct = 0.0;
    for (std::int64_t l = 0; l <= k; ++l) {
      direct += digamma(b + D(l)) / (c + D(l)) + digamma(c + D(l)) / (b + D(l));
    }
    EXPECT_NEAR(sym, direct, 1e-11 * std::max(1.0, std::fabs(direct)))
        << p.str();
  }
}

TEST(Registry, HarmonicFormEq22) {
  for (std::int64_t k = 0; k <= 100; ++k) {
    double h_half = 0.0, h_one = 0.0, s = 0.0;
    for (std::int64_t l = 0; l <= k; ++l) {
      s += h_half / (D(l) + 1.0) + h_one / (D(l) - 0.5);
      h_half += 1.0 / (D(l) + 0.5);
      h_one += 1.0 / (D(l) + 1.0);
    }
    ParamPoint p;
    p.set("k", D(k));
    EXPECT_NEAR(eval_closed("EQ_022", p), s, 1e-11) << "k=" << k;
  }
}

TEST(Registry, Eq23AgainstDoubleHarmonicSum) {
  // At b = 1: sum_{j=1}^{k+1} (H_{j-1} - gamma) / j.
  for (std::int64_t k = 0; k <= 50; ++k) {
    long double h = 0.0L, s = 0.0L, inv_sq = 0.0L, h_k = 0.0L;
    for (std::int64_t j = 1; j <= k + 1; ++j) {
      h += 1.0L / j;
      s += h / j;
      inv_sq += 1.0L / (static_cast<long double>(j) * j);
    }
    h_k = h;
    const long double want = s - inv_sq - oracle::kEulerGamma * h_k;
    ParamPoint p;
    p.set("b", 1.0).set("k", D(k));
    EXPECT_NEAR(eval_closed("EQ_023", p), static_cast<double>(want), 1e-12)
        << "k=" << k;
  }
}

TEST(Registry, Eq31Antisymmetry) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.1, 6.0);
  for (int i = 0; i < 100; ++i) {
    const double p = u(rng), q = u(rng);
    ParamPoint pq, qp;
    pq.set("p", p).set("q", q);
    qp.set("p", q).set("q", p);
    const double f = (q - p) * eval_closed("EQ_031", pq);
    const double g = (p - q) * eval_closed("EQ_031", qp);
    EXPECT_NEAR(f, -g, 1e-12 * std::max(1.0, std::fabs(f))) << pq.str();
  }
}

TEST(Registry, Reductions) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(0.1, 6.0), a(1.1, 6.0), q4(0.0, 4.0);
  for (int i = 0; i < 50; ++i) {
    ParamPoint pq, pqm;
    const double p = u(rng), q = u(rng);
    pq.set("p", p).set("q", q);
    pqm.set("p", p).set("q", q).set("m", 0.0);
    if (in_domain(identity("EQ_034"), pqm) &&
        in_domain(identity("EQ_031"), pq)) {
      EXPECT_NEAR(eval_closed("EQ_034", pqm), eval_closed("EQ_031", pq), 1e-10)
          << pq.str();
    }
    ParamPoint aq, aqm;
    const double al = a(rng), qq = q4(rng);
    aq.set("alpha", al).set("q", qq);
    aqm.set("alpha", al).set("q", qq).set("m", 0.0);
    if (in_domain(identity("EQ_041"), aqm) &&
        in_domain(identity("EQ_036"), aq)) {
      EXPECT_NEAR(eval_closed("EQ_041", aqm), eval_closed("EQ_036", aq), 1e-10)
          << aq.str();
    }
  }
  const double pi4 = std::pow(oracle::kPi, 4);
  EXPECT_NEAR(eval_closed("EQ_065", P("")), pi4 / 360.0, 1e-12);
  for (const char* xc : {"XC_063_065", "XC_064_065", "XC_034_031",
                         "XC_041_036", "XC_031_033", "XC_033_030"}) {
    for (const ParamPoint& p : identity(xc).grid) {
      EXPECT_EQ(verify(xc, p).verdict, Verdict::kPass) << xc << " " << p.str();
    }
  }
}

TEST(Registry, Eq53Recursion) {
  double prev = eval_series("EQ_051", P(""), 1e-11).value;
  for (std::int64_t k = 1; k <= 5; ++k) {
    ParamPoint p;
    p.set("k", D(k));
    const double v = eval_series("EQ_053", p, 1e-11).value;
    EXPECT_NEAR(v - prev, catalog_detail::Eq053Increment(k), 1e-8)
        << "k=" << k;
    prev = v;
  }
}

}  // namespace
}  // namespace dpsum
