// Copyright 2026 The laurent-duality Authors
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

namespace ldual {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class DivisionByZero : public Error {
  public:
    DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
  public:
    FieldMismatch(const std::string& a, const std::string& b)
        : Error("mixed field contexts: " + a + " vs " + b + " (embed explicitly)") {}
};

class EmbeddingError : public Error {
  public:
    using Error::Error;
};

/// Input data that violates a structural invariant (non-commuting operators,
/// broken cocycle identity, non-associative structure constants, ...).
class InvalidInput : public Error {
  public:
    using Error::Error;
};

/// Raised when a quotient module turns out not to be finite dimensional.
class NotFiniteLength : public Error {
  public:
    using Error::Error;
};

}  // namespace ldual
