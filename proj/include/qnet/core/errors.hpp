// Copyright 2026 The qnetsim Authors
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

namespace qnet {

// Base of every error raised by the library. The CLI maps subclasses to
// exit codes, so keep the hierarchy shallow.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LabelError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised when a matrix violates the density-matrix invariants.
class SingularCouplerError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NonPhysicalStateError : public Error {
 public:
  using Error::Error;
};

// Input that cannot be repaired, e.g. a zero-trace matrix after PSD clipping.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class IntegrationError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace qnet
