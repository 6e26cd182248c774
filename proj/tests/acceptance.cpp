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


// Acceptance checks 1-13. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dpsum/audit.hpp"
#include "dpsum/constants.hpp"
#include "dpsum/hyper.hpp"
#include "dpsum/registry.hpp"
#include "dpsum/specfun.hpp"

namespace dpsum {
namespace {

// Tolerances, one per numbered criterion where it applies.
constexpr double kTol1 = 1e-8;
constexpr double kTol2 = 1e-8;
constexpr double kTol3 = 1e-8;
constexpr double kTol4 = 1e-9;
constexpr double kTol5 = 1e-8;
constexpr double kTol6 = 1e-7;
constexpr double kTol7 = 1e-8;
constexpr double kTol8 = 1e-7;
constexpr double kTol9 = 1e-7;
constexpr double kTol10Duality = 1e-11;
constexpr double kTol10Harmonic = 1e-12;
constexpr double kTol11 = 1e-8;
constexpr double kTol11Forms = 1e-11;

constexpr int kPoints9 = 5;
constexpr int kPoints10 = 200;
constexpr int kPoints11 = 100;

double D(std::int64_t l) { return static_cast<double>(l); }

// Collects the first few failure details of one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ < 5) details_.push_back(what);
  }
  void Near(double got, double want, double tol, const std::string& what) {
    const double diff = std::fabs(got - want);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: got %.17g want %.17g diff %.3g",
                  what.c_str(), got, want, diff);
    Expect(diff <= tol, buf);
  }
  bool ok() const { return failures_ == 0; }
  int failures() const { return failures_; }
  const std::vector<std::string>& details() const { return details_; }

 private:
  int failures_ = 0;
  std::vector<std::string> details_;
};

// Series requested one decade tighter than the criterion it feeds.
double Series(const char* id, double tol) {
  return eval_series(id, ParamPoint(), 0.1 * tol).value;
}

void C1(Check& c) {
  const ConstantPool& k = constants();
  c.Near(Series("EQ_030", kTol1), k.zeta3 - k.pi_sq * k.gamma_em / 6.0, kTol1,
         "EQ_030");
}

void C2(Check& c) { c.Near(Series("EQ_040", kTol2), 2.0 * constants().zeta3, kTol2, "EQ_040"); }

void C3(Check& c) { c.Near(Series("EQ_051", kTol3), -constants().pi_sq / 3.0, kTol3, "EQ_051"); }

void C4(Check& c) {
  c.Near(Series("EQ_065", kTol4), constants().pi_4 / 360.0, kTol4, "EQ_065");
}

void C5(Check& c) {
  c.Near(Series("EQ_067", kTol5), 11.0 * constants().pi_4 / 360.0, kTol5, "EQ_067");
}

void C6(Check& c) {
  const ConstantPool& k = constants();
  const double g = k.gamma_em;
  const double want = -g * g * g * k.pi_sq / 6.0 + 4.0 * k.zeta3 * g * g -
                      7.0 * k.pi_4 * g / 72.0 + k.zeta3 * k.pi_sq / 3.0 +
                      6.0 * k.zeta5;
  c.Near(Series("EQ_068", kTol6), want, kTol6, "EQ_068");
}

void C7(Check& c) {
  const ConstantPool& k = constants();
  const SumResult a = pfq_unit_bruteforce({{1, 1, 1, 1}, {2, 2, 0.5}}, 1e-12);
  const SumResult b = pfq_unit_bruteforce({{1, 1, 1, 1}, {2, 2, 1.5}}, 1e-12);
  c.Near(a.value, 1.75 * k.zeta3 + 0.5 * k.pi_sq * (1.0 - k.ln2), kTol7,
         "4F3(...;1/2)");
  c.Near(b.value, -1.75 * k.zeta3 + 0.5 * k.pi_sq * k.ln2, kTol7,
         "4F3(...;3/2)");
  ParamPoint n1;
  n1.set("n", 1.0);
  const VerificationResult r = cross_check("EQ_016", "EQ_017A", n1, kTol7);
  c.Expect(r.verdict == Verdict::kPass,
           "cross_check(EQ_016@n=1, EQ_017A) " + r.verdict_label());
}

void C8(Check& c) {
  const ConstantPool& k = constants();
  const double ln2 = k.ln2, z3 = k.zeta3, pi2 = k.pi_sq, g = k.gamma_em;
  const std::pair<const char*, double> golden[] = {
      {"APB_01", pi2 / 3.0},
      {"APB_02", 7.0 * z3 - 2.0 * pi2 / 3.0},
      {"APB_05", 4.0 * ln2 + 1.5 * z3 - pi2 / 3.0},
      {"APB_19", 2.0 * pi2 / 3.0 - 8.0 * ln2},
      {"APB_20", 2.0 * pi2 / 3.0 - 16.0 * ln2 / 3.0 - 2.0 * z3},
      {"APB_28", 3.5 * z3},
      {"FN8", -(7.0 * z3 + g * pi2) / 2.0},
  };
  for (const auto& [id, want] : golden) c.Near(Series(id, kTol8), want, kTol8, id);
}

bool AmbiguousAllowed(const Identity& e, const VerificationResult& r) {
  return r.verdict == Verdict::kAmbiguous && e.baseline_ambiguous;
}

void C9(Check& c) {
  for (const Identity& e : catalog()) {
    if (e.mode != Mode::kConvergent && e.mode != Mode::kFiniteSum) continue;
    std::vector<ParamPoint> pts =
        e.schema.empty() ? std::vector<ParamPoint>{ParamPoint()}
                         : sample_points(e, kPoints9, 9);
    for (const ParamPoint& p : pts) {
      const VerificationResult r = verify(e.id, p, kTol9);
      const std::string where = e.id + " [" + p.str() + "] ";
      if (AmbiguousAllowed(e, r)) continue;
      const double err = r.has_series ? r.series.abs_error_est : 0.0;
      c.Expect(r.verdict == Verdict::kPass &&
                   r.abs_diff <= std::max(kTol9, 10.0 * err),
               where + r.verdict_label());
    }
  }
  // No FAIL anywhere on the shipped grids.
  for (const Identity& e : catalog()) {
    for (const ParamPoint& p : e.grid) {
      const VerificationResult r = verify(e.id, p);
      c.Expect(r.verdict == Verdict::kPass ||
                   r.verdict == Verdict::kSkippedContinuation ||
                   AmbiguousAllowed(e, r),
               e.id + " [" + p.str() + "] " + r.verdict_label());
    }
  }
}

void C10(Check& c) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  std::uniform_int_distribution<int> kd(0, 30);
  for (int i = 0; i < kPoints10; ++i) {
    ParamPoint p, pk;
    const double k = kd(rng);
    p.set("b", u(rng)).set("c", u(rng)).set("k", k);
    pk.set("k", k);
    for (const char* id : {"EQ_018", "EQ_020"}) {
      const VerificationResult r = verify(id, p);
      c.Expect(r.verdict == Verdict::kPass && r.abs_diff <= kTol10Duality,
               std::string(id) + " [" + p.str() + "] " + r.verdict_label());
    }
    const VerificationResult r = verify("EQ_022", pk);
    c.Expect(r.verdict == Verdict::kPass && r.abs_diff <= kTol10Duality,
             "EQ_022 [" + pk.str() + "] " + r.verdict_label());
  }
  // Double harmonic sum at b = 1: sum_{j<=k+1} (H_{j-1} - gamma) / j.
  for (std::int64_t k = 0; k <= 50; ++k) {
    long double h = 0.0L, s = 0.0L;
    for (std::int64_t j = 1; j <= k + 1; ++j) {
      s += (h - constants().gamma_em) / j;
      h += 1.0L / j;
    }
    ParamPoint p;
    p.set("b", 1.0).set("k", D(k));
    c.Near(eval_closed("EQ_023", p), static_cast<double>(s), kTol10Harmonic,
           "EQ_023 k=" + std::to_string(k));
  }
}

void C11(Check& c) {
  for (const char* id : {"EQ_009", "EQ_011", "EQ_012", "EQ_013A", "EQ_013B",
                         "EQ_014", "EQ_015"}) {
    const Identity& e = identity(id);
    for (const ParamPoint& p : sample_points(e, kPoints11, 11)) {
      const VerificationResult r = verify(id, p, kTol11);
      const double err = r.has_series ? r.series.abs_error_est : 0.0;
      c.Expect(r.verdict == Verdict::kPass &&
                   r.abs_diff <= std::max(kTol11, 10.0 * err),
               std::string(id) + " [" + p.str() + "] " + r.verdict_label());
    }
  }
  for (const ParamPoint& p : sample_points(identity("EQ_013A"), kPoints11, 13)) {
    c.Near(eval_closed("EQ_013A", p), eval_closed("EQ_013B", p), kTol11Forms,
           "EQ_013A vs EQ_013B [" + p.str() + "]");
  }
}

void C12(Check& c) {
  std::mt19937_64 rng(12);
  const double pi = constants().pi, ln2 = constants().ln2;
  std::uniform_real_distribution<double> pos(0.01, 100.0), sym(-10.0, 10.0),
      dup(0.01, 50.0), fd(0.5, 20.0);
  for (int i = 0; i < 500; ++i) {
    const double x = pos(rng);
    c.Near(digamma(x + 1.0) - digamma(x), 1.0 / x, 1e-12, "recurrence");
  }
  for (int i = 0; i < 500; ++i) {
    const double x = sym(rng);
    if (std::fabs(x - std::nearbyint(x)) < 1e-3) continue;
    const double want = pi / std::tan(pi * x);
    c.Near(digamma(1.0 - x) - digamma(x), want,
           1e-11 * std::max(1.0, std::fabs(want)), "reflection");
  }
  for (int i = 0; i < 500; ++i) {
    const double x = dup(rng);
    const double want = 0.5 * digamma(x) + 0.5 * digamma(x + 0.5) + ln2;
    c.Near(digamma(2.0 * x), want, 1e-12 * std::max(1.0, std::fabs(want)),
           "duplication");
  }
  const double h = 1e-5;
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 100; ++i) {
      const double x = fd(rng);
      const double want = polygamma(n, x);
      const double got =
          (polygamma(n - 1, x + h) - polygamma(n - 1, x - h)) / (2.0 * h);
      c.Near(got, want, 1e-6 * std::fabs(want),
             "finite difference n=" + std::to_string(n));
    }
  }
}

void C13(Check& c) {
  AuditConfig cfg;
  cfg.timestamp = "2026-01-01T00:00:00Z";
  cfg.parallelism = 1;
  const std::string a = render_report(run_audit(cfg), ReportFormat::kJson);
  cfg.parallelism = 8;
  const std::string b = render_report(run_audit(cfg), ReportFormat::kJson);
  c.Expect(a == b, "reports differ between parallelism 1 and 8");
}

}  // namespace
}  // namespace dpsum

int main() {
  using dpsum::Check;
  struct Criterion {
    int number;
    const char* name;
    std::function<void(Check&)> run;
  };
  const Criterion criteria[] = {
      {1, "linear Euler sum psi(l+1)/(l+1)^2", dpsum::C1},
      {2, "trigamma sum psi'(1+l)/(l+1)", dpsum::C2},
      {3, "paired-divergent sum -pi^2/3", dpsum::C3},
      {4, "harmonic cube sum pi^4/360", dpsum::C4},
      {5, "quadratic Euler sum 11 pi^4/360", dpsum::C5},
      {6, "cubic Euler sum", dpsum::C6},
      {7, "4F3 half-integer constants and continuation cross-check",
       dpsum::C7},
      {8, "golden constants of the multisum family", dpsum::C8},
      {9, "random-point property suite against the baseline", dpsum::C9},
      {10, "duality and double harmonic sums", dpsum::C10},
      {11, "hypergeometric closed forms against brute force", dpsum::C11},
      {12, "kernel recurrence, reflection, duplication, derivatives",
       dpsum::C12},
      {13, "audit determinism across parallelism", dpsum::C13},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check c;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %2d %s\n", c.ok() ? "PASS" : "FAIL", cr.number, cr.name);
    for (const std::string& d : c.details()) std::printf("       %s\n", d.c_str());
    if (c.failures() > static_cast<int>(c.details().size())) {
      std::printf("       ... %d failures in total\n", c.failures());
    }
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
