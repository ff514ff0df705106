// Copyright 2026 The qbcsat Authors
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

namespace qbcsat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed DIMACS, circuit text or spin-system document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's domain (bad index, wrong arity, length mismatch).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The formula has no circuit form under the requested construction.
class CompileError : public Error {
 public:
  using Error::Error;
};

/// A register or enumeration would exceed the configured size cap.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A population vector is not of the form produced by the compile/run pipeline.
class StateFormError : public Error {
 public:
  using Error::Error;
};

/// The observed multiplet cannot be decoded unambiguously.
class UnresolvableSpectrum : public Error {
 public:
  using Error::Error;
};

/// Two spin configurations fall within matching tolerance of one line.
class DegenerateMultiplet : public UnresolvableSpectrum {
 public:
  using UnresolvableSpectrum::UnresolvableSpectrum;
};

}  // namespace qbcsat
