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

#include "latkit/error.hpp"

#include <sstream>

namespace latkit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::kNotALattice: return "NotALattice";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kSizeLimit: return "SizeLimit";
    case ErrorCode::kGroundMismatch: return "GroundMismatch";
    case ErrorCode::kEmptySubset: return "EmptySubset";
    case ErrorCode::kSubsetTooSmall: return "SubsetTooSmall";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

void FailBudget(std::string_view dimension, std::size_t requested,
                std::size_t limit) {
  std::ostringstream os;
  os << "budget exceeded: " << dimension << " = " << requested
     << " > limit " << limit;
  throw Error(ErrorCode::kSizeLimit, os.str());
}

}  // namespace latkit
