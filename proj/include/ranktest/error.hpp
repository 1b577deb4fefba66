// Copyright 2026 The Ranktest Authors
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

#ifndef RANKTEST_ERROR_HPP_
#define RANKTEST_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ranktest {

// Root of the library's exception hierarchy. The CLI maps each subclass to
// a distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a mathematical precondition (a set of
// statements that is not a semigraphoid, a non-submodular weight, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Two data coordinates are equal and no tie policy was requested.
class TiesError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// The requested computation exceeds a tractability guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace ranktest

#endif  // RANKTEST_ERROR_HPP_
