// Copyright 2026 The Authors.
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

#ifndef COVERING_ERRORS_HPP_
#define COVERING_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace covering {

// Bad input: malformed arguments, violated preconditions, unknown ids.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ArgumentError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A distribution rule was queried past the end of its domain.
class DomainLengthError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A computation refused to run because it would exceed a configured bound.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeCapExceeded : public CapExceededError {
 public:
  using CapExceededError::CapExceededError;
};

class ResampleCapExceeded : public CapExceededError {
 public:
  using CapExceededError::CapExceededError;
};

}  // namespace covering

#endif  // COVERING_ERRORS_HPP_
