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

#include "dpsum/constants.hpp"

#include <cstdlib>

namespace dpsum {
namespace {

double Parse(const char* digits) { return std::strtod(digits, nullptr); }

ConstantPool Build() {
  ConstantPool c;
  c.gamma_em = Parse("0.5772156649015328606065120900824024310422");
  c.pi = Parse("3.141592653589793238462643383279502884197");
  c.pi_sq = Parse("9.869604401089358618834490999876151135314");
  c.pi_4 = Parse("97.40909103400243723644033268870511124972");
  c.zeta3 = Parse("1.202056903159594285399738161511449990765");
  c.zeta5 = Parse("1.036927755143369926331365486457034168057");
  c.ln2 = Parse("0.6931471805599453094172321214581765680755");
  return c;
}

}  // namespace

const ConstantPool& ConstantPool::Get() {
  static const ConstantPool pool = Build();
  return pool;
}

}  // namespace dpsum
