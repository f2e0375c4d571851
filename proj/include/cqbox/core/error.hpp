// Copyright 2026 The cqbox Authors
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
#pragma once

#include <stdexcept>
#include <string>

namespace cqbox {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimensions of operands do not fit together (or exceed the configured cap).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A party label is unknown or duplicated.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// A value violates the invariants of its type (normalization, unitarity,
/// bijectivity, no-signalling, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A parameter is outside the domain of an operation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace cqbox
