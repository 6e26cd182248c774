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


#ifndef DPSUM_CONFIG_HPP_
#define DPSUM_CONFIG_HPP_

#include <string>
#include <string_view>

#include "dpsum/audit.hpp"

namespace dpsum {

// Line-oriented "key = value" text. '#' starts a comment; blank lines are
// ignored. Keys:
//   filter      = EQ_03*, APB_01        (comma separated ids or globs)
//   tol         = 1e-8
//   budget      = 1000000
//   format      = json | csv | md
//   parallelism = 4
//   strict      = true | false
//   timestamp   = 2026-01-01T00:00:00Z
//   grid.ID     = p=1.5 q=2.25; p=2 q=2  (points separated by ';')
// Repeated grid.ID lines append points. Throws SchemaError with the line
// number on malformed input.
AuditConfig parse_config(std::string_view text, AuditConfig base = {});

AuditConfig load_config_file(const std::string& path, AuditConfig base = {});

}  // namespace dpsum

#endif  // DPSUM_CONFIG_HPP_
