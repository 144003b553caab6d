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

#ifndef GGT_ERROR_HPP_
#define GGT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ggt {

enum class ErrorCode {
  kParseError,
  kMalformedGraph,
  kNotInfiniteEmitter,
  kNotStronglyConnected,
  kNotARegularSource,
  kNoDisjointCycles,
  kInvalidPath,
  kSourcesOverlap,
  kRangesOverlap,
  kCarrierMismatch,
  kOverlappingSourceRange,
  kGraphMismatch,
  kSourcePresent,
  kNegativeLevel,
  kNotEssential,
  kCriteriaFailed,
  kChainLimitExceeded,
  kNotEquivalent,
  kMatchingDepthExceeded,
  kHypothesesFailed,
  kIndexNonzero,
  kInvalidArgument,
  kInternal,
};

// Stable identifier printed by the CLI and returned through the C API.
const char* error_name(ErrorCode code);

// True for the refusals that are answers about the mathematics rather than
// about malformed input.
bool is_mathematical_refusal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

// Internal consistency check; failing it is a bug, not bad input.
#define GGT_CHECK(cond, msg)                                          \
  do {                                                                \
    if (!(cond)) {                                                    \
      throw ::ggt::Error(::ggt::ErrorCode::kInternal,                 \
                         std::string("check failed: ") + #cond + ": " + \
                             (msg));                                  \
    }                                                                 \
  } while (0)

}  // namespace ggt

#endif  // GGT_ERROR_HPP_
