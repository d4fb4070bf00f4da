//  Copyright 2026 The ulst Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef ULST_ERROR_HPP_
#define ULST_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ulst {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpaceMismatchError : Error {
  using Error::Error;
};

// Raised when a norm (or pairing) is not defined on the given element,
// e.g. the l1 norm of a sequence with a nonzero tail.
struct NormUndefinedError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

// Exact-mode evaluation of a float-only construct (euclidean norm,
// sinusoid nets).
struct FloatOnlyError : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t position;
  ParseError(std::string msg, std::size_t pos)
      : Error(std::move(msg) + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Guard against materializing astronomically long explicit prefixes when
// tail crossovers land far out.
struct ResourceLimitError : Error {
  using Error::Error;
};

}  // namespace ulst

#endif  // ULST_ERROR_HPP_
