/*
 * Copyright 2026 The kleene authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef KLEENE_ERRORS_HPP
#define KLEENE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kleene {

/// Base class of every exception thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Misuse of an operation: mismatched dimensions, values outside the
/// carrier, invalid parameters, invalid paths.
class domain_error : public error {
 public:
  using error::error;
};

/// A scalar closure was requested outside its domain of definition in a
/// non-complete carrier (e.g. max-plus star of an element above the unit).
class divergence_error : public error {
 public:
  using error::error;
};

/// The carrier does not provide the requested operation at all
/// (e.g. inversion in max-min, closure in the subtropical family).
class unsupported_operation : public error {
 public:
  using error::error;
};

/// Malformed text input. Carries the 1-based line and column of the
/// offending token when known (0 = unknown).
class parse_error : public error {
 public:
  parse_error(std::string message, std::size_t line, std::size_t column = 0)
      : error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string where = "line " + std::to_string(line);
    if (column != 0) where += ", column " + std::to_string(column);
    return where + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace kleene

#endif  // KLEENE_ERRORS_HPP
