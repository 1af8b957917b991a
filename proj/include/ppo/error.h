// Copyright 2026 The ppo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PPO_ERROR_H
#define PPO_ERROR_H

#include <stdexcept>
#include <string>

namespace ppo {

enum class ErrorCode {
    InvalidModulus,
    ZeroInverse,
    ZeroArgument,
    NoWitness,
    BadDeterminant,
    NotConjugable,
    IncompletePlane,
    NotAState,
    NotHermitian,
    ToleranceCollision,
    DimensionMismatch,
    InvalidArgument,
};

const char *error_code_name(ErrorCode code);

/// Single exception type for the library. `code()` identifies the failure;
/// NoWitness and NotConjugable indicate internal bugs rather than bad input.
class PpoError : public std::runtime_error {
   public:
    PpoError(ErrorCode code, const std::string &message);
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace ppo

#endif
