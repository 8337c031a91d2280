// Copyright 2026 The gridtours Authors
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

#ifndef GRIDTOURS_ERROR_HPP_
#define GRIDTOURS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gridtours {

enum class ErrorCode {
  kInvalidInput,
  kLevelOutOfRange,
  kDegenerateShape,
  kInvalidWalk,
  kInfeasible,
  kOddL,
  kBudgetExceeded,
  kResourceGuard,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; callers
// switch on code() rather than on the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gridtours

#endif  // GRIDTOURS_ERROR_HPP_
