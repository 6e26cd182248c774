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

#ifndef DPSUM_CONSTANTS_HPP_
#define DPSUM_CONSTANTS_HPP_

namespace dpsum {

// Named constants, parsed once from 40-digit decimal strings.
struct ConstantPool {
  double gamma_em;  // Euler-Mascheroni
  double pi;
  double pi_sq;
  double pi_4;
  double zeta3;
  double zeta5;
  double ln2;

  static const ConstantPool& Get();
};

inline const ConstantPool& constants() { return ConstantPool::Get(); }

}  // namespace dpsum

#endif  // DPSUM_CONSTANTS_HPP_
