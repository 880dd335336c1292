/* Copyright 2026 The Lambek Brackets Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef LAMBEK_ERRORS_H_
#define LAMBEK_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lambek {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A goal violates the precondition of the calculus it was handed to
// (e.g. the unit constant under Lb*).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// cut_compose() was asked to cut on a position that does not hold the
// cut formula.
class InvalidCut : public Error {
 public:
  using Error::Error;
};

// The variable chosen as q for the unit translation occurs in the input.
class NotFresh : public Error {
 public:
  using Error::Error;
};

// A word mentions a symbol outside the grammar's alphabet.
class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at " + std::to_string(position) + ": " + message),
        position_(position),
        message_(message) {}

  // 0-based character offset into the parsed text.
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

}  // namespace lambek

#endif  // LAMBEK_ERRORS_H_
