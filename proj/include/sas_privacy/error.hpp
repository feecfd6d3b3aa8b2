// Copyright 2026 The SaS Privacy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SAS_PRIVACY_ERROR_HPP_
#define SAS_PRIVACY_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sas_privacy {

// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments or parameters outside the supported domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Failures of a numerical procedure on otherwise valid input.
class NumericError : public Error {
 public:
  using Error::Error;
};

class QuadratureNotConverged : public NumericError {
 public:
  using NumericError::NumericError;
};

class MaxNotBracketed : public NumericError {
 public:
  using NumericError::NumericError;
};

class CalibrationFailed : public NumericError {
 public:
  using NumericError::NumericError;
};

// Dataset does not provide what a query asks for.
class SchemaError : public DomainError {
 public:
  using DomainError::DomainError;
};

class EmptyDataset : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace sas_privacy

#endif  // SAS_PRIVACY_ERROR_HPP_
