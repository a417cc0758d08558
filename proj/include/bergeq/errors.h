// Copyright 2026 The bergeq Authors
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

#ifndef BERGEQ_ERRORS_H_
#define BERGEQ_ERRORS_H_

#include <stdexcept>
#include <string>

namespace bergeq {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Out-of-range indices, malformed profiles, non-normalized strategies.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Text that cannot be read as a number or JSON. The message carries the
// location.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed text describing an inconsistent game document.
class FormatError : public Error {
 public:
  using Error::Error;
};

// The operation is not defined for this game (wrong player count or shape).
class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bergeq

#endif  // BERGEQ_ERRORS_H_
