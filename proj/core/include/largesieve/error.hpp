// Copyright 2026 The largesieve Authors
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

namespace largesieve {

// Precondition violations raised by the library. The CLI maps every
// subclass of DomainError to the same exit status, so the subclasses only
// serve callers that want to distinguish them.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Coefficient vector of length zero, or a length that does not match the
// declared N.
class InvalidDimension : public DomainError {
 public:
  using DomainError::DomainError;
};

// Out-of-range scalar parameter (Q = 0, A <= 1, x outside (0, 1], ...).
class InvalidParameter : public DomainError {
 public:
  using DomainError::DomainError;
};

// Grid size that is not a power of two or is below the oversampling floor.
class InvalidResolution : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace largesieve
