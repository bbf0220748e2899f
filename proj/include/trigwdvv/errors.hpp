// Copyright 2026 The trigwdvv Authors
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

#ifndef TRIGWDVV_ERRORS_HPP_
#define TRIGWDVV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace trigwdvv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function (e.g. eval_f at z <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Mismatched vector / point / tensor dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A coth / 1/sinh factor would be evaluated too close to its pole.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Matrix to be inverted is numerically singular.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration file or command-line input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace trigwdvv

#endif  // TRIGWDVV_ERRORS_HPP_
