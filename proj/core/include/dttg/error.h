// Copyright 2026 The dttg Authors.
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

#ifndef DTTG_ERROR_H_
#define DTTG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dttg {

enum class ErrorCode {
  kMalformedPlay,
  kMismatchedGames,
  kIllegalResponse,
  kNondeterministicClosure,
  kLivelockDetected,
  kBoundExceeded,
  kExplosionGuard,
  kDuplicatePoint,
  kDuplicateConstructor,
  kIllTypedWitness,
  kDemoFailed,
  kParse,
  kType,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Bounds shared by the enumeration and interaction engines.
struct Limits {
  // Longest hidden interaction before a composition is declared livelocked.
  std::size_t max_interaction = 4096;
  // Ceiling on enumerate_winning results.
  std::size_t max_enum = 200000;
};

}  // namespace dttg

#endif  // DTTG_ERROR_H_
