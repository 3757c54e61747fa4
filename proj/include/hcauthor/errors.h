// Copyright 2026 The hcauthor Authors.
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

#ifndef HCAUTHOR_ERRORS_H_
#define HCAUTHOR_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcauthor {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument to a numerical routine (probability out of range, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Input data violates a structural requirement (empty corpus, duplicate ids).
class DataError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. Carries the 1-based line (and column, when known).
class ParseError : public DataError {
 public:
  ParseError(const std::string &what, std::size_t line, std::size_t column = 0)
      : DataError(Format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string Format(const std::string &what, std::size_t line,
                            std::size_t column) {
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

// The leave-one-feature-out rate q_w has a zero denominator: w is the only
// feature present in both texts.
class DegenerateRateError : public Error {
 public:
  using Error::Error;
};

// All leave-one-out scores of a corpus are identical, so the t statistic
// is undefined.
class DegenerateSpreadError : public Error {
 public:
  using Error::Error;
};

}  // namespace hcauthor

#endif  // HCAUTHOR_ERRORS_H_
