// Copyright 2026 The Graphon Lab Authors.
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

namespace graphon {

enum class ErrorCode {
  kAsymmetricInput,
  kOutOfRange,
  kDimensionMismatch,
  kAmplitudeTooLarge,
  kInvalidProbabilities,
  kTooFewNodes,
  kTooLargeForExact,
  kNotDoublyStochastic,
  kNumericalBreakdown,
  kTooLargeToEnumerate,
  kInfiniteDivergence,
  kHypothesisViolated,
  kPackingTooSmall,
  kDegenerateParameters,
  kExhaustedAttempts,
  kInvalidArgument,
  kParseError,
  kConfigInvalid,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception; `code()` identifies the
// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the packing sampler when it cannot reach the requested size.
class ExhaustedAttemptsError : public Error {
 public:
  ExhaustedAttemptsError(const std::string& message, int achieved)
      : Error(ErrorCode::kExhaustedAttempts, message), achieved_(achieved) {}

  int achieved() const noexcept { return achieved_; }

 private:
  int achieved_;
};

}  // namespace graphon
