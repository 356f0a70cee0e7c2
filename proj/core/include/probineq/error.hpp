// Copyright 2026 The probineq Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace probineq {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration, including an unmet hypothesis of a checked inequality.
// The CLI maps these to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a function (e.g. psi^{-1} above psi(N)).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Norming ratio b_n / a_n decreases at `index` (1-based).
class RatioError : public ConfigError {
 public:
  RatioError(std::size_t index, const std::string& what)
      : ConfigError(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Sign enumeration requested beyond the configured cutoff.
class EnumerationLimitError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace probineq
