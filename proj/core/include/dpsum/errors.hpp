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

#ifndef DPSUM_ERRORS_HPP_
#define DPSUM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dpsum {

enum class ErrorKind {
  kPole,
  kUnsupportedOrder,
  kDomain,
  kNonConvergence,
  kDivergent,
  kUnsupportedShape,
  kSchema,
};

const char* ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(ErrorKind::kPole, what) {}
};

class UnsupportedOrder : public Error {
 public:
  explicit UnsupportedOrder(const std::string& what)
      : Error(ErrorKind::kUnsupportedOrder, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::kDomain, what) {}
};

class Divergent : public Error {
 public:
  explicit Divergent(const std::string& what)
      : Error(ErrorKind::kDivergent, what) {}
};

class UnsupportedShape : public Error {
 public:
  explicit UnsupportedShape(const std::string& what)
      : Error(ErrorKind::kUnsupportedShape, what) {}
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what)
      : Error(ErrorKind::kSchema, what) {}
};

}  // namespace dpsum

#endif  // DPSUM_ERRORS_HPP_
