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

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "ldual/exponent.hpp"
#include "ldual/field.hpp"

namespace ldual {

using TermMap = std::map<Exponent, Scalar>;

/// Parses "+ - * / ^ ( )" expressions over integer literals, the symbol z
/// (the field generator) and the given variable names. Variables may carry
/// negative exponents; division is only by single-term expressions.
/// Zero coefficients are dropped from the result.
TermMap parse_expression(std::string_view text, Field field,
                         std::span<const std::string> variables);

/// Scalar literal: "p/q", "p", or a polynomial in z.
Scalar parse_scalar(std::string_view text, Field field);

}  // namespace ldual
