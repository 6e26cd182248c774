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

#include <memory>
#include <vector>

#include "dpsum/errors.hpp"
#include "dpsum/series.hpp"

namespace dpsum {

// With j_i = n1 + ... + ni the nested sum runs over 0 <= j1 <= ... <= jk.
// The innermost sum over jk >= j is closed by partial fractions, the
// first level's prefix by the finite digamma form, and deeper prefixes are
// carried as running sums.
SeriesSpec collapse_multisum(const std::vector<SumLevel>& levels) {
  const std::size_t k = levels.size();
  if (k == 0) throw UnsupportedShape("collapse_multisum: no levels");
  if (k == 1) {
    const RationalTerm r = levels[0];
    const int d = r.degree();
    const TailClass tail =
        d >= 2 ? TailClass::PowerLog(0, d) : TailClass::Unknown();
    return SeriesSpec::Infinite(
        [r](std::int64_t j) { return r(static_cast<double>(j)); }, 0, tail);
  }
  if (levels.back().degree() < 2) {
    throw UnsupportedShape(
        "collapse_multisum: innermost sum must have degree >= 2");
  }
  int logs = 0;
  for (std::size_t i = 0; i + 2 < k; ++i) {
    if (levels[i].degree() < 1) {
      throw UnsupportedShape("collapse_multisum: constant outer level");
    }
    if (levels[i].degree() == 1) ++logs;
  }
  const double q = levels[k - 2].degree() + levels[k - 1].degree() - 1;
  const TailClass tail = TailClass::PowerLog(logs, q);

  const RationalTerm inner = levels[k - 1];
  const RationalTerm outer = levels[k - 2];
  if (k == 2) {
    return SeriesSpec::Infinite(
        [inner, outer](std::int64_t j) {
          const double x = static_cast<double>(j);
          return outer(x) * rational_tail_sum(inner, x);
        },
        0, tail);
  }
  if (k == 3) {
    const RationalTerm first = levels[0];
    return SeriesSpec::Infinite(
        [inner, outer, first](std::int64_t j) {
          const double x = static_cast<double>(j);
          return outer(x) * rational_tail_sum(inner, x) *
                 rational_finite_sum(first, j);
        },
        0, tail);
  }

  struct State {
    std::int64_t next = 0;
    std::vector<double> prefix;  // P_1 .. P_{k-2} at the last index
  };
  auto st = std::make_shared<State>();
  std::vector<RationalTerm> mids(levels.begin(), levels.end() - 2);
  return SeriesSpec::Infinite(
      [st, mids, inner, outer](std::int64_t j) {
        if (j < st->next || st->prefix.empty()) {
          st->next = 0;
          st->prefix.assign(mids.size(), 0.0);
        }
        while (st->next <= j) {
          const double x = static_cast<double>(st->next);
          double below = 1.0;
          for (std::size_t m = 0; m < mids.size(); ++m) {
            st->prefix[m] += mids[m](x) * below;
            below = st->prefix[m];
          }
          ++st->next;
        }
        const double x = static_cast<double>(j);
        return outer(x) * rational_tail_sum(inner, x) * st->prefix.back();
      },
      0, tail);
}

}  // namespace dpsum
