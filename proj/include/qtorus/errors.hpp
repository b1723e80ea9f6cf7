// Copyright 2026 The qtorus Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtorus {

enum class ErrorCode {
  capacity,
  dimension_mismatch,
  invalid_argument,
  parameter_mismatch,
  family_mismatch,
  not_hermitian,
  not_anti_hermitian,
  not_unitary,
  not_member,
  depth_exhausted,
  unknown_id,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::capacity: return "capacity";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parameter_mismatch: return "parameter_mismatch";
    case ErrorCode::family_mismatch: return "family_mismatch";
    case ErrorCode::not_hermitian: return "not_hermitian";
    case ErrorCode::not_anti_hermitian: return "not_anti_hermitian";
    case ErrorCode::not_unitary: return "not_unitary";
    case ErrorCode::not_member: return "not_member";
    case ErrorCode::depth_exhausted: return "depth_exhausted";
    case ErrorCode::unknown_id: return "unknown_id";
  }
  return "unknown";
}

/// Base exception for every library failure. The code classifies the
/// failure so callers (the CLI in particular) can map it without parsing
/// messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown by the compiler when the target's logarithm lies outside the
/// span of the generated Lie algebra.
class NotMemberError : public Error {
 public:
  NotMemberError(double residual, const std::string& what)
      : Error(ErrorCode::not_member, what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace detail
}  // namespace qtorus
