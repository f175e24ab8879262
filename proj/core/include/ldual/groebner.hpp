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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ldual/field.hpp"

namespace ldual::gb {

inline constexpr std::size_t kMaxVars = 8;

struct Monomial {
    std::array<std::int32_t, kMaxVars> exp{};
    std::int32_t degree = 0;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

bool divides(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);
/// b / a; requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);

struct Term {
    std::uint32_t component = 0;
    Monomial mono;
    Scalar coeff;
};

/// Element of a free module R^m over R = k[v_0, ..., v_{n-1}], terms sorted
/// strictly decreasing in the module order, no zero coefficients.
using Vec = std::vector<Term>;

/// Module term order: position over term (a lower component index is
/// larger), then degree reverse lexicographic with v_0 > v_1 > ... .
int compare(std::uint32_t ca, const Monomial& a, std::uint32_t cb, const Monomial& b);
inline int compare(const Term& a, const Term& b) {
    return compare(a.component, a.mono, b.component, b.mono);
}

/// p - c * m * q
Vec axpy(const Vec& p, const Scalar& c, const Monomial& m, const Vec& q);
Vec scale(const Vec& p, const Scalar& c);
/// Sort and combine an unordered list of terms.
Vec normalize(std::vector<Term> terms);

/// Reduced Groebner basis of a submodule, computed with Buchberger's
/// algorithm and the chain criterion. Elements are monic and sorted by
/// increasing leading term, so equal inputs give identical bases.
class GroebnerBasis {
  public:
    GroebnerBasis() = default;
    static GroebnerBasis compute(Field field, std::size_t nvars, std::vector<Vec> generators);

    Field field() const { return field_; }
    std::size_t variable_count() const { return nvars_; }
    const std::vector<Vec>& elements() const { return elements_; }

    /// Fully reduced normal form.
    Vec normal_form(Vec p) const;
    /// True iff every S-vector of the basis reduces to zero.
    bool satisfies_buchberger_criterion() const;

    /// Leading monomials of the elements in a given component.
    std::vector<Monomial> leading_monomials(std::uint32_t component) const;

  private:
    Field field_;
    std::size_t nvars_ = 0;
    std::vector<Vec> elements_;
};

}  // namespace ldual::gb
