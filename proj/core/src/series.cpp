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

#include "dpsum/series.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <utility>

#include "neumaier.hpp"

namespace dpsum {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::int64_t kFirstStage = 1000;
// Samples per octave on the tail-fit grid.
constexpr int kGridDensity = 24;
// Fit window is [N / kWindowSpan, N].
constexpr std::int64_t kWindowSpan = 8;

std::string Describe(const char* what, const SumResult& r, double tol) {
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "%s: error estimate %.3g exceeds tol %.3g after %lld terms",
                what, r.abs_error_est, tol,
                static_cast<long long>(r.terms_used));
  return buf;
}

void CheckArgs(const SeriesSpec& spec, double tol, std::int64_t budget) {
  if (!spec.infinite) throw DomainError("sum_infinite: finite spec");
  if (!(tol > 0.0)) throw DomainError("sum_infinite: tol must be positive");
  if (budget < kMinBudget) throw DomainError("sum_infinite: budget < 1000");
  if (spec.tail.kind == TailKind::kPowerLog &&
      (!(spec.tail.q > 1.0) || spec.tail.p < 0)) {
    throw DomainError("sum_infinite: PowerLog tail needs q > 1, p >= 0");
  }
}

// Geometric sample positions x = 1, 2, ... with about kGridDensity
// distinct values per octave.
class SampleGrid {
 public:
  std::int64_t next() const { return next_; }
  void Advance() {
    while (true) {
      ++k_;
      const auto x = static_cast<std::int64_t>(
          std::floor(std::exp2(static_cast<double>(k_) / kGridDensity)));
      if (x > next_) {
        next_ = x;
        return;
      }
    }
  }

 private:
  int k_ = 0;
  std::int64_t next_ = 1;
};

struct TailFit {
  double tail = 0.0;
  double err = std::numeric_limits<double>::infinity();
};

// Sum over x > N of the model x^{-q} sum_{j,i} c_{j,i} u^j (N/x)^i with
// u = ln(x/N): integral plus Euler-Maclaurin corrections at x = N.
double ModelTail(const Eigen::VectorXd& c, int p, int orders, double q,
                 double big_n) {
  double integral = 0.0;
  double corr = 0.0;
  for (int i = 0; i < orders; ++i) {
    const double s = q + i;
    // Coefficients of u^j in N^i x^{-s} form; derivative maps
    // u^m x^{-s} to (m u^{m-1} - s u^m) x^{-s-1}.
    std::vector<double> poly(p + 1);
    for (int j = 0; j <= p; ++j) poly[j] = c(j * orders + i);
    double fact = 1.0;
    for (int j = 0; j <= p; ++j) {
      if (j > 0) fact *= j;
      integral += poly[j] * fact / std::pow(s - 1.0, j + 1) *
                  std::pow(big_n, 1.0 - q);
    }
    // f(N), f'(N), f'''(N), f^(5)(N): only u^0 survives at x = N.
    double ss = s;
    std::vector<double> d = poly;
    const double weights[6] = {-0.5, -1.0 / 12, 0.0, 1.0 / 720, 0.0,
                               -1.0 / 30240};
    for (int order = 0; order <= 5; ++order) {
      if (weights[order] != 0.0) {
        corr += weights[order] * d[0] * std::pow(big_n, -ss + i);
      }
      std::vector<double> nd(d.size(), 0.0);
      for (std::size_t m = 0; m < d.size(); ++m) {
        nd[m] -= ss * d[m];
        if (m > 0) nd[m - 1] += m * d[m];
      }
      d.swap(nd);
      ss += 1.0;
    }
  }
  return integral + corr;
}

TailFit FitPowerLogTail(const std::vector<std::pair<std::int64_t, double>>& s,
                        std::int64_t big_n, int p, double q) {
  TailFit out;
  const std::int64_t lo = big_n / kWindowSpan;
  std::vector<std::pair<std::int64_t, double>> w;
  for (const auto& e : s) {
    if (e.first >= lo && e.first <= big_n) w.push_back(e);
  }
  constexpr int kOrders = 3;
  const int cols_full = (p + 1) * kOrders;
  if (static_cast<int>(w.size()) < 3 * cols_full) return out;

  const double n = static_cast<double>(big_n);
  auto solve = [&](int orders, double* max_resid) {
    const int cols = (p + 1) * orders;
    Eigen::MatrixXd a(w.size(), cols);
    Eigen::VectorXd b(w.size());
    for (std::size_t r = 0; r < w.size(); ++r) {
      const double x = static_cast<double>(w[r].first);
      const double u = std::log(x / n);
      // Rows are scaled by x^q so that the fit is relative.
      for (int j = 0; j <= p; ++j) {
        for (int i = 0; i < orders; ++i) {
          a(r, j * orders + i) = std::pow(u, j) * std::pow(n / x, i);
        }
      }
      b(r) = w[r].second * std::pow(x, q);
    }
    Eigen::VectorXd c = a.colPivHouseholderQr().solve(b);
    if (max_resid != nullptr) {
      const Eigen::VectorXd res = a * c - b;
      double m = 0.0;
      for (std::size_t r = 0; r < w.size(); ++r) {
        const double x = static_cast<double>(w[r].first);
        m = std::max(m, std::fabs(res(r)) * std::pow(x, -q));
      }
      *max_resid = m;
    }
    return ModelTail(c, p, orders, q, n);
  };
  double resid = 0.0;
  const double full = solve(kOrders, &resid);
  const double reduced = solve(kOrders - 1, nullptr);
  out.tail = full;
  // A residual of size r per term near N feeds roughly r N / (q - 1)
  // into the tail.
  out.err = std::fabs(full - reduced) + resid * n / (q - 1.0);
  if (!std::isfinite(out.tail) || !std::isfinite(out.err)) {
    out.tail = 0.0;
    out.err = std::numeric_limits<double>::infinity();
  }
  return out;
}

SumResult SumPowerLog(const SeriesSpec& spec, double tol,
                      std::int64_t budget) {
  Neumaier acc;
  double abs_acc = 0.0;
  SampleGrid grid;
  std::vector<std::pair<std::int64_t, double>> samples;
  SumResult best;
  best.abs_error_est = std::numeric_limits<double>::infinity();
  bool have_best = false;
  std::int64_t x = 0;
  for (std::int64_t stage = kFirstStage; stage <= budget; stage *= 2) {
    for (; x < stage; ++x) {
      const double t = spec.term(spec.start_index + x);
      acc.Add(t);
      abs_acc += std::fabs(t);
      if (x + 1 == grid.next()) {
        samples.emplace_back(x + 1, t);
        grid.Advance();
      }
    }
    const TailFit fit = FitPowerLogTail(samples, stage, spec.tail.p,
                                        spec.tail.q);
    SumResult r;
    r.value = acc.Sum() + fit.tail;
    r.abs_error_est = fit.err + 4.0 * kEps * abs_acc;
    r.terms_used = stage;
    r.accelerated = true;
    if (!have_best || r.abs_error_est < best.abs_error_est) {
      best = r;
      have_best = true;
    }
    if (best.abs_error_est <= tol) break;
  }
  best.converged = best.abs_error_est <= tol;
  if (!best.converged) {
    throw NonConvergence(Describe("sum_infinite", best, tol), best);
  }
  return best;
}

SumResult SumGeometric(const SeriesSpec& spec, double tol,
                       std::int64_t budget) {
  Neumaier acc;
  double abs_acc = 0.0;
  double prev = 0.0;
  int zeros = 0;
  SumResult r;
  for (std::int64_t x = 0; x < budget; ++x) {
    const double t = spec.term(spec.start_index + x);
    acc.Add(t);
    abs_acc += std::fabs(t);
    r.terms_used = x + 1;
    zeros = (t == 0.0) ? zeros + 1 : 0;
    if (zeros >= 32) {
      r.value = acc.Sum();
      r.abs_error_est = 4.0 * kEps * abs_acc;
      r.converged = r.abs_error_est <= tol;
      break;
    }
    if (x >= 8 && prev != 0.0) {
      const double ratio = std::fabs(t / prev);
      if (ratio < 1.0) {
        const double bound = std::fabs(t) * ratio / (1.0 - ratio);
        r.value = acc.Sum();
        r.abs_error_est = bound + 4.0 * kEps * abs_acc;
        if (bound <= 1e-3 * tol || bound <= kEps * std::fabs(r.value)) {
          r.converged = r.abs_error_est <= tol;
          break;
        }
      } else {
        r.value = acc.Sum();
        r.abs_error_est = std::numeric_limits<double>::infinity();
      }
    }
    prev = t;
  }
  if (!r.converged) {
    throw NonConvergence(Describe("sum_infinite", r, tol), r);
  }
  return r;
}

SumResult SumTerminating(const SeriesSpec& spec, double tol,
                         std::int64_t budget) {
  Neumaier acc;
  double abs_acc = 0.0;
  SumResult r;
  for (std::int64_t x = 0; x < budget; ++x) {
    const double t = spec.term(spec.start_index + x);
    r.terms_used = x + 1;
    if (t == 0.0) {
      r.value = acc.Sum();
      r.abs_error_est = 4.0 * kEps * abs_acc;
      r.converged = true;
      return r;
    }
    acc.Add(t);
    abs_acc += std::fabs(t);
  }
  r.value = acc.Sum();
  r.abs_error_est = std::numeric_limits<double>::infinity();
  throw NonConvergence(Describe("sum_infinite (terminating)", r, tol), r);
}

// Partial sums at N, 2N, 4N, ... with the geometric-rate extrapolation
// S + d2 * rho / (1 - rho), rho = d2 / d1.
SumResult SumUnknown(const SeriesSpec& spec, double tol,
                     std::int64_t budget) {
  Neumaier acc;
  double abs_acc = 0.0;
  std::vector<double> partial;
  std::vector<double> extrap;
  SumResult best;
  best.abs_error_est = std::numeric_limits<double>::infinity();
  std::int64_t x = 0;
  for (std::int64_t stage = kFirstStage; stage <= budget; stage *= 2) {
    for (; x < stage; ++x) {
      const double t = spec.term(spec.start_index + x);
      acc.Add(t);
      abs_acc += std::fabs(t);
    }
    partial.push_back(acc.Sum());
    const std::size_t m = partial.size();
    if (m < 3) continue;
    const double d1 = partial[m - 2] - partial[m - 3];
    const double d2 = partial[m - 1] - partial[m - 2];
    double e = partial[m - 1];
    if (d1 != 0.0) {
      const double rho = d2 / d1;
      if (rho > 0.0 && rho < 1.0) e += d2 * rho / (1.0 - rho);
    }
    extrap.push_back(e);
    if (extrap.size() < 2) continue;
    SumResult r;
    r.value = e;
    r.abs_error_est = std::fabs(e - extrap[extrap.size() - 2]) +
                      4.0 * kEps * abs_acc;
    r.terms_used = stage;
    r.accelerated = true;
    if (r.abs_error_est < best.abs_error_est) best = r;
    if (best.abs_error_est <= tol) break;
  }
  if (best.terms_used == 0) {
    best.value = acc.Sum();
    best.terms_used = x;
  }
  best.converged = best.abs_error_est <= tol;
  if (!best.converged) {
    throw NonConvergence(Describe("sum_infinite", best, tol), best);
  }
  return best;
}

}  // namespace

SeriesSpec SeriesSpec::Finite(TermFn term, std::int64_t start,
                              std::int64_t upper) {
  SeriesSpec s;
  s.term = std::move(term);
  s.start_index = start;
  s.infinite = false;
  s.upper = upper;
  return s;
}

SeriesSpec SeriesSpec::Infinite(TermFn term, std::int64_t start,
                                TailClass tail) {
  SeriesSpec s;
  s.term = std::move(term);
  s.start_index = start;
  s.infinite = true;
  s.tail = tail;
  return s;
}

SumResult sum_finite(const SeriesSpec& spec) {
  if (spec.infinite) throw DomainError("sum_finite: infinite spec");
  if (spec.upper < spec.start_index - 1) {
    throw DomainError("sum_finite: upper < start_index - 1");
  }
  Neumaier acc;
  double abs_acc = 0.0;
  for (std::int64_t l = spec.start_index; l <= spec.upper; ++l) {
    const double t = spec.term(l);
    acc.Add(t);
    abs_acc += std::fabs(t);
  }
  SumResult r;
  r.value = acc.Sum();
  r.terms_used = std::max<std::int64_t>(0, spec.upper - spec.start_index + 1);
  r.abs_error_est = 4.0 * kEps * std::fabs(r.value) +
                    kEps * kEps * static_cast<double>(r.terms_used) * abs_acc;
  r.converged = true;
  return r;
}

SumResult sum_infinite(const SeriesSpec& spec, double tol,
                       std::int64_t budget) {
  CheckArgs(spec, tol, budget);
  switch (spec.tail.kind) {
    case TailKind::kPowerLog: return SumPowerLog(spec, tol, budget);
    case TailKind::kGeometric: return SumGeometric(spec, tol, budget);
    case TailKind::kTerminating: return SumTerminating(spec, tol, budget);
    case TailKind::kUnknown: break;
  }
  return SumUnknown(spec, tol, budget);
}

SumResult sum_infinite_paired(const SeriesSpec& spec_a,
                              const SeriesSpec& spec_b, double tol,
                              std::int64_t budget) {
  if (!spec_a.infinite || !spec_b.infinite ||
      spec_a.start_index != spec_b.start_index) {
    throw DomainError("sum_infinite_paired: specs must share an index");
  }
  TermFn a = spec_a.term;
  TermFn b = spec_b.term;
  SeriesSpec combined = SeriesSpec::Infinite(
      [a, b](std::int64_t l) { return a(l) - b(l); }, spec_a.start_index,
      spec_a.tail);
  return sum_infinite(combined, tol, budget);
}

SumResult sum_series(const SeriesSpec& spec, double tol,
                     std::int64_t budget) {
  return spec.infinite ? sum_infinite(spec, tol, budget) : sum_finite(spec);
}

TermFn RecurrenceTerm(std::int64_t start, double first,
                      std::function<double(std::int64_t)> ratio) {
  struct State {
    std::int64_t last = 0;
    double value = 0.0;
    bool valid = false;
  };
  auto st = std::make_shared<State>();
  return [st, start, first, ratio = std::move(ratio)](std::int64_t l) {
    if (!st->valid || l < st->last) {
      st->last = start;
      st->value = first;
      st->valid = true;
    }
    while (st->last < l) {
      st->value *= ratio(st->last);
      ++st->last;
    }
    return st->value;
  };
}

}  // namespace dpsum
