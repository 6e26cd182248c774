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


#include "dpsum/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace dpsum {
namespace {

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void Fail(int line, const std::string& what) {
  throw SchemaError("config line " + std::to_string(line) + ": " + what);
}

template <typename T>
T ParseNumber(std::string_view v, int line, const char* key) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    Fail(line, std::string("bad value for ") + key + ": " + std::string(v));
  }
  return out;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    const std::string_view item = Trim(s.substr(0, pos));
    if (!item.empty()) out.push_back(item);
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

}  // namespace

AuditConfig parse_config(std::string_view text, AuditConfig base) {
  AuditConfig c = std::move(base);
  std::map<std::string, std::vector<ParamPoint>> grids;
  int line_no = 0;
  for (std::string_view rest = text; !rest.empty();) {
    const auto nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{}
                                        : rest.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) Fail(line_no, "expected key = value");
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Trim(line.substr(eq + 1));
    if (key == "filter") {
      c.filter.clear();
      for (std::string_view f : Split(value, ',')) c.filter.emplace_back(f);
    } else if (key == "tol") {
      c.tol = ParseNumber<double>(value, line_no, "tol");
    } else if (key == "budget") {
      c.budget = ParseNumber<std::int64_t>(value, line_no, "budget");
    } else if (key == "format") {
      try {
        c.format = ParseReportFormat(value);
      } catch (const SchemaError& e) {
        Fail(line_no, e.what());
      }
    } else if (key == "parallelism") {
      c.parallelism = ParseNumber<int>(value, line_no, "parallelism");
    } else if (key == "strict") {
      if (value == "true") {
        c.strict = true;
      } else if (value == "false") {
        c.strict = false;
      } else {
        Fail(line_no, "strict must be true or false");
      }
    } else if (key == "timestamp") {
      c.timestamp = std::string(value);
    } else if (key.substr(0, 5) == "grid.") {
      const std::string id(key.substr(5));
      if (find_identity(id) == nullptr) Fail(line_no, "unknown identity " + id);
      auto& points = grids[id];
      try {
        for (std::string_view pt : Split(value, ';')) {
          points.push_back(ParamPoint::parse(pt));
        }
      } catch (const SchemaError& e) {
        Fail(line_no, e.what());
      }
    } else {
      Fail(line_no, "unknown key " + std::string(key));
    }
  }
  for (auto& [id, points] : grids) c.grids[id] = std::move(points);
  return c;
}

AuditConfig load_config_file(const std::string& path, AuditConfig base) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

}  // namespace dpsum
