// Copyright 2026 The vqc developers
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

namespace vqc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParameterArityError : Error {
  using Error::Error;
};

struct UnknownGateError : Error {
  using Error::Error;
};

struct QubitIndexError : Error {
  using Error::Error;
};

struct NotUnitaryError : Error {
  using Error::Error;
};

struct UnknownTargetError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct SizeLimitError : Error {
  using Error::Error;
};

struct InvalidStateError : Error {
  using Error::Error;
};

// Raised when a computed quantity violates an internal contract (e.g. a cost
// more negative than floating-point noise can explain).
struct InternalConsistencyError : Error {
  using Error::Error;
};

}  // namespace vqc
