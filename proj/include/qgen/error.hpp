/*
 * Copyright 2026 The qgen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QGEN_ERROR_HPP_
#define QGEN_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgen {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation hit a variable the assignment does not bind.
class EvalError : public Error {
 public:
  explicit EvalError(std::string variable)
      : Error("unbound variable '" + variable + "'"),
        variable_(std::move(variable)) {}

  const std::string& variable() const { return variable_; }

 private:
  std::string variable_;
};

// A computation would exceed a configured size limit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Expression text could not be parsed. `position` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Invalid hyperparameters or configuration file contents.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input such as a digest or a record.
class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A generated question failed its own validation gate. This is always a bug.
class DefectError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgen

#endif  // QGEN_ERROR_HPP_
