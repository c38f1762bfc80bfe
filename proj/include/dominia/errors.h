// Copyright 2026 The Dominia Authors
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

#ifndef DOMINIA_ERRORS_H_
#define DOMINIA_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dominia {

enum class ErrorKind {
  kMissingPayoff,
  kDuplicateLabel,
  kEmptyStrategySet,
  kEmptyRestriction,
  kIncompatibleParents,
  kIndexOutOfRange,
  kSizeBoundExceeded,
  kDimensionMismatch,
  kDegenerateSubstitution,
  kEmptySupport,
  kInvalidParams,
  kParseError,
  kInvalidRelation,
};

std::string_view ErrorKindName(ErrorKind kind);

// All library failures are reported through this exception; `kind()` lets
// callers (the CLI in particular) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dominia

#endif  // DOMINIA_ERRORS_H_
