// Copyright 2026 The ggt Authors
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

#include "ggt/error.hpp"

namespace ggt {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMalformedGraph: return "MalformedGraph";
    case ErrorCode::kNotInfiniteEmitter: return "NotInfiniteEmitter";
    case ErrorCode::kNotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::kNotARegularSource: return "NotARegularSource";
    case ErrorCode::kNoDisjointCycles: return "NoDisjointCycles";
    case ErrorCode::kInvalidPath: return "InvalidPath";
    case ErrorCode::kSourcesOverlap: return "SourcesOverlap";
    case ErrorCode::kRangesOverlap: return "RangesOverlap";
    case ErrorCode::kCarrierMismatch: return "CarrierMismatch";
    case ErrorCode::kOverlappingSourceRange: return "OverlappingSourceRange";
    case ErrorCode::kGraphMismatch: return "GraphMismatch";
    case ErrorCode::kSourcePresent: return "SourcePresent";
    case ErrorCode::kNegativeLevel: return "NegativeLevel";
    case ErrorCode::kNotEssential: return "NotEssential";
    case ErrorCode::kCriteriaFailed: return "CriteriaFailed";
    case ErrorCode::kChainLimitExceeded: return "ChainLimitExceeded";
    case ErrorCode::kNotEquivalent: return "NotEquivalent";
    case ErrorCode::kMatchingDepthExceeded: return "MatchingDepthExceeded";
    case ErrorCode::kHypothesesFailed: return "HypothesesFailed";
    case ErrorCode::kIndexNonzero: return "IndexNonzero";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

bool is_mathematical_refusal(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexNonzero:
    case ErrorCode::kHypothesesFailed:
    case ErrorCode::kNotEquivalent:
    case ErrorCode::kMatchingDepthExceeded:
    case ErrorCode::kChainLimitExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace ggt
