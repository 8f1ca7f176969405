// Copyright 2026 The eprkit Authors
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

namespace eprkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions are incompatible, or a dimension is outside the supported range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix offered as Hermitian deviates from its adjoint by more than the tolerance.
class NotHermitianError : public Error {
 public:
  using Error::Error;
};

class ScenarioMismatchError : public Error {
 public:
  using Error::Error;
};

/// An index tuple required by an operation is absent from a family or table.
class MissingEntryError : public Error {
 public:
  using Error::Error;
};

/// A matrix offered as a POVM element is not between 0 and the identity.
class InvalidPovmElementError : public Error {
 public:
  using Error::Error;
};

/// A quantum realisation violates positivity, normalisation or trace preservation.
class InvalidRealisationError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed its configured size limit.
class GuardExceededError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// Input text is not valid JSON or does not follow the expected schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace eprkit
