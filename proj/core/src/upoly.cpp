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

#include "ldual/upoly.hpp"

#include "ldual/errors.hpp"

namespace ldual {

UPoly::UPoly(Field field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Scalar& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, c.field().zero());
    v[degree] = c;
    return UPoly(c.field(), std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::size_t UPoly::valuation() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    return k;
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), field_.zero());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), field_.zero());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
    std::vector<Scalar> p(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) p[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(a.field_, std::move(p));
}

UPoly operator*(const Scalar& s, const UPoly& a) {
    std::vector<Scalar> p;
    for (const auto& c : a.c_) p.push_back(s * c);
    return UPoly(a.field_, std::move(p));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero();
    UPoly r = *this;
    UPoly q(field_);
    const Scalar inv = divisor.leading().inverse();
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        const auto shift = static_cast<std::size_t>(r.degree() - divisor.degree());
        const Scalar c = r.leading() * inv;
        const UPoly t = monomial(c, shift);
        q += t;
        r -= t * divisor;
    }
    return {q, r};
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * (*this);
}

LaurentElt UPoly::to_laurent() const {
    LaurentElt f(field_, 1);
    for (std::size_t i = 0; i < c_.size(); ++i) f.add_term({static_cast<std::int64_t>(i)}, c_[i]);
    return f;
}

UPoly UPoly::from_laurent(const LaurentElt& f) {
    if (f.rank() != 1) throw InvalidInput("univariate conversion needs lattice rank 1");
    std::vector<Scalar> c;
    for (const auto& [e, v] : f.terms()) {
        if (e[0] < 0) throw InvalidInput("negative exponent in polynomial conversion");
        const auto k = static_cast<std::size_t>(e[0]);
        if (c.size() <= k) c.resize(k + 1, f.field().zero());
        c[k] = v;
    }
    return UPoly(f.field(), std::move(c));
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace ldual
