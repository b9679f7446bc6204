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

#include "graphon/error.hpp"

namespace graphon {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAsymmetricInput: return "AsymmetricInput";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kAmplitudeTooLarge: return "AmplitudeTooLarge";
    case ErrorCode::kInvalidProbabilities: return "InvalidProbabilities";
    case ErrorCode::kTooFewNodes: return "TooFewNodes";
    case ErrorCode::kTooLargeForExact: return "TooLargeForExact";
    case ErrorCode::kNotDoublyStochastic: return "NotDoublyStochastic";
    case ErrorCode::kNumericalBreakdown: return "NumericalBreakdown";
    case ErrorCode::kTooLargeToEnumerate: return "TooLargeToEnumerate";
    case ErrorCode::kInfiniteDivergence: return "InfiniteDivergence";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kPackingTooSmall: return "PackingTooSmall";
    case ErrorCode::kDegenerateParameters: return "DegenerateParameters";
    case ErrorCode::kExhaustedAttempts: return "ExhaustedAttempts";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kConfigInvalid: return "ConfigInvalid";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace graphon
