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

#include <utility>
#include <vector>

#include "ldual/field.hpp"
#include "ldual/laurent.hpp"

namespace ldual {

/// Dense univariate polynomial over a Field, coefficients low to high with no
/// trailing zeros (the zero polynomial is empty).
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(Field field) : field_(field) {}
    UPoly(Field field, std::vector<Scalar> coeffs);
    static UPoly constant(const Scalar& c);
    static UPoly monomial(const Scalar& c, std::size_t degree);

    Field field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Scalar& leading() const { return c_.back(); }
    const std::vector<Scalar>& coefficients() const { return c_; }
    Scalar coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    /// Largest k with x^k dividing this polynomial.
    std::size_t valuation() const;

    UPoly& operator+=(const UPoly& rhs);
    UPoly& operator-=(const UPoly& rhs);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Scalar& s, const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
    UPoly monic() const;

    LaurentElt to_laurent() const;
    /// Requires nonnegative exponents.
    static UPoly from_laurent(const LaurentElt& f);

  private:
    void trim();
    Field field_;
    std::vector<Scalar> c_;
};

/// Monic gcd (zero when both inputs are zero).
UPoly gcd(UPoly a, UPoly b);

}  // namespace ldual
