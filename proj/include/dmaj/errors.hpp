// Copyright 2026 The dmaj authors
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

namespace dmaj {

// Base class for everything thrown by this library, so callers can catch
// dmaj::Error without enumerating the concrete types.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct DimensionTooSmall : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct NonFiniteEntry : Error {
  using Error::Error;
};

struct NonHermitianInput : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  using Error::Error;
};

struct NotPositiveSemidefinite : Error {
  using Error::Error;
};

struct NotCompletelyPositive : Error {
  using Error::Error;
};

struct EmptyKrausSet : Error {
  using Error::Error;
};

struct ProbeNotPositiveDefinite : Error {
  using Error::Error;
};

// Raised when a block-form decomposition is requested for a map whose
// output on the identity is already positive definite.
struct IsStrictlyPositive : Error {
  using Error::Error;
};

struct NonpositiveWeight : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

struct NotDStochastic : Error {
  using Error::Error;
};

struct NotAState : Error {
  using Error::Error;
};

struct ConstantWeights : Error {
  using Error::Error;
};

struct DomainViolation : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace dmaj
