// Copyright 2026 The Cyclotorus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CYCLOTORUS_ERRORS_HPP_
#define CYCLOTORUS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cyclotorus {

// Bad argument to an operation: wrong index, non-prime where a prime is
// required, non-monic divisor and so on. The CLI maps these to exit code 2.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition failed (the inputs are well-formed but the
// requested object does not exist). The CLI maps these to exit code 3.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotCoprime : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DivisionByZero : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Elements from two different fields were combined.
class FieldMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An element was expected in a subgroup T_k (or a subfield) and is not.
class MembershipError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Field or parameter size above the supported ceiling.
class CeilingExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A closed form or structural claim about cyclotomic inverses did not hold.
// Should never fire; if it does, it is a finding.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cyclotorus

#endif  // CYCLOTORUS_ERRORS_HPP_
