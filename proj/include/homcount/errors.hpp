// Copyright 2026 The homcount Authors
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

#ifndef HOMCOUNT_ERRORS_HPP_
#define HOMCOUNT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homcount {

// Input that fails a domain invariant (bad profile, bad tuple, bad range).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LengthMismatch : public ValidationError {
 public:
  LengthMismatch(std::size_t expected, std::size_t actual)
      : ValidationError("tuple length " + std::to_string(actual) +
                        " does not match profile length " +
                        std::to_string(expected)) {}
};

class RangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IneligibleTuple : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : ValidationError("parse error at position " + std::to_string(position) +
                        ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnsupportedFamily : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Raised when the requested dimension is below the stability bound N.
class UnstableRegime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configurable enumeration cap was exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic failures. Both signal logic errors upstream when they escape.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("polynomial division by zero") {}
};

class NonZeroRemainder : public std::domain_error {
 public:
  NonZeroRemainder()
      : std::domain_error("polynomial division left a nonzero remainder") {}
  explicit NonZeroRemainder(const std::string& what) : std::domain_error(what) {}
};

}  // namespace homcount

#endif  // HOMCOUNT_ERRORS_HPP_
