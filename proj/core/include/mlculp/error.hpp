/*
   Copyright (c) 2026 The mlculp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace mlculp {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dataset ingestion failure. `kind()` distinguishes the failure classes.
class LoadError : public Error {
 public:
  enum class Kind {
    io,
    malformed_header,
    unknown_attribute_type,
    non_binary_label,
    missing_value,
    malformed_row,
    empty_dataset,
    unknown_label,
  };

  LoadError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A precondition on arguments was violated (bad k, fold count, shapes, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation was given a graph of the wrong LEG variant.
class VariantMismatch : public Error {
 public:
  using Error::Error;
};

/// Tuning could not run: the dataset does not support the requested protocol.
class TuningInfeasible : public Error {
 public:
  using Error::Error;
};

}  // namespace mlculp
