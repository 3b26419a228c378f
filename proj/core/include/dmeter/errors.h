// Copyright 2026 The dmeter Authors
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

#ifndef DMETER_ERRORS_H_
#define DMETER_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dmeter {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied argument violates an operation's precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// The measurement is mathematically undefined for this input (zero norm,
// zero variance, empty bag after filtering, ...).
class UndefinedValueError : public Error {
 public:
  using Error::Error;
};

// A similarity kernel fails the positive-semidefinite check.
class KernelInvalidError : public Error {
 public:
  using Error::Error;
};

// Malformed file contents that make the whole input unusable.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A source could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

// Reports with incompatible schema versions.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace dmeter

#endif  // DMETER_ERRORS_H_
