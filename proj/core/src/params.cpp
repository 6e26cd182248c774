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


#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "dpsum/registry.hpp"
#include "format.hpp"

namespace dpsum {

ParamSpec RealParam(std::string name, double lo, double hi, double step) {
  return {std::move(name), ParamType::kReal, lo, hi, step};
}

ParamSpec IntParam(std::string name, std::int64_t lo, std::int64_t hi) {
  return {std::move(name), ParamType::kInteger, static_cast<double>(lo),
          static_cast<double>(hi), 1.0};
}

ParamPoint& ParamPoint::set(std::string_view name, double value) {
  for (auto& [k, v] : values_) {
    if (k == name) {
      v = value;
      return *this;
    }
  }
  values_.emplace_back(std::string(name), value);
  return *this;
}

bool ParamPoint::has(std::string_view name) const {
  for (const auto& kv : values_) {
    if (kv.first == name) return true;
  }
  return false;
}

double ParamPoint::get(std::string_view name) const {
  for (const auto& kv : values_) {
    if (kv.first == name) return kv.second;
  }
  throw SchemaError("missing parameter '" + std::string(name) + "'");
}

std::int64_t ParamPoint::integer(std::string_view name) const {
  const double v = get(name);
  if (!std::isfinite(v) || v != std::nearbyint(v) || std::fabs(v) > 1e15) {
    throw SchemaError("parameter '" + std::string(name) +
                      "' must be an integer, got " + FormatShortest(v));
  }
  return static_cast<std::int64_t>(v);
}

std::string ParamPoint::str() const {
  std::string out;
  for (const auto& [k, v] : values_) {
    if (!out.empty()) out += ' ';
    out += k;
    out += '=';
    out += FormatShortest(v);
  }
  return out;
}

ParamPoint ParamPoint::parse(std::string_view text) {
  ParamPoint p;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == ',' || c == ';';
  };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    const std::string_view item = text.substr(i, j - i);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size()) {
      throw SchemaError("expected name=value, got '" + std::string(item) + "'");
    }
    const std::string_view num = item.substr(eq + 1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (ec != std::errc() || ptr != num.data() + num.size()) {
      throw SchemaError("bad number in '" + std::string(item) + "'");
    }
    p.set(item.substr(0, eq), v);
    i = j;
  }
  return p;
}

}  // namespace dpsum
