// Copyright 2026 The latkit Authors
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

#ifndef LATKIT_ERROR_HPP_
#define LATKIT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace latkit {

enum class ErrorCode {
  kNotAPartialOrder = 1,
  kNotALattice,
  kInvalidParameter,
  kSizeLimit,
  kGroundMismatch,
  kEmptySubset,
  kSubsetTooSmall,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto latkit_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

// Raises kSizeLimit naming the budget dimension that was exceeded.
[[noreturn]] void FailBudget(std::string_view dimension, std::size_t requested,
                             std::size_t limit);

}  // namespace latkit

#endif  // LATKIT_ERROR_HPP_
