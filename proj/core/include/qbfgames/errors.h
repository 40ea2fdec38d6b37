// Copyright 2026 The qbfgames Authors
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

#ifndef QBFGAMES_ERRORS_H_
#define QBFGAMES_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qbfgames {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        message_(message),
        line_(line),
        column_(column) {}

  // Message without the position prefix.
  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// A variable index at or beyond the declared variable count.
class VariableRangeError : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnassignedVariableError : public Error {
 public:
  explicit UnassignedVariableError(std::size_t var)
      : Error("variable x" + std::to_string(var) + " is unassigned"),
        var_(var) {}
  std::size_t var() const { return var_; }

 private:
  std::size_t var_;
};

// Invalid arguments to a reduction, generator or game constructor.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// An operation was asked to work on a ruleset it does not support.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class NonTerminalError : public Error {
 public:
  using Error::Error;
};

// Search exceeded its node budget or the naive oracle's size bound.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace qbfgames

#endif  // QBFGAMES_ERRORS_H_
