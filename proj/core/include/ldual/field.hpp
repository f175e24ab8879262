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

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ldual {

class Scalar;

namespace detail {
struct FieldData;
}

/// A ground field: Q(zeta_n). Order 1 is the rationals. Instances are
/// interned, so copies are a pointer and comparison is pointer equality.
class Field {
  public:
    Field();  // the rationals

    static Field rational();
    static Field cyclotomic(int order);
    /// Accepts "Q", "QQ", "rational", "cyclotomic:N" and "Q(zeta_N)".
    static Field parse(std::string_view text);

    int order() const;
    /// Dimension over Q, i.e. Euler's phi of the order.
    int degree() const;
    bool is_rational() const { return order() == 1; }
    std::string name() const;

    /// Integer coefficients of the n-th cyclotomic polynomial, low to high.
    const std::vector<mpz_class>& modulus() const;

    Scalar zero() const;
    Scalar one() const;
    /// zeta_n itself.
    Scalar generator() const;
    Scalar from_rational(const mpq_class& q) const;
    Scalar from_int(long v) const;

    friend bool operator==(const Field& a, const Field& b) { return a.data_ == b.data_; }
    friend bool operator!=(const Field& a, const Field& b) { return a.data_ != b.data_; }

  private:
    explicit Field(const detail::FieldData* data) : data_(data) {}
    const detail::FieldData* data_;
    friend class Scalar;
};

/// Exact element of Q(zeta_n), stored as the coefficient vector of its
/// reduction modulo the n-th cyclotomic polynomial (length phi(n)).
class Scalar {
  public:
    Scalar();  // rational zero
    Scalar(Field field, std::vector<mpq_class> coeffs);

    Field field() const { return Field(field_); }
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when only the constant coefficient can be nonzero.
    bool is_rational() const;
    const mpq_class& constant_term() const { return coeffs_.front(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;
    Scalar pow(std::int64_t e) const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Polynomial string in the symbol z, e.g. "1/2*z^2 - z + 3".
    std::string to_string() const;

  private:
    void check_same_field(const Scalar& other) const;

    const detail::FieldData* field_;
    std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Field& f);

/// Image of `a` under the canonical embedding Q(zeta_m) -> Q(zeta_n),
/// zeta_m -> zeta_n^(n/m). Throws EmbeddingError unless m divides n
/// (rational values embed anywhere).
Scalar embed(const Scalar& a, Field target);
bool embeds_into(Field source, Field target);

/// Root-of-unity data of a scalar: value = w^exponent where w is the
/// distinguished primitive root of order `ambient_order` (zeta_n when n is
/// even, -zeta_n otherwise). `order` is the multiplicative order.
struct RootOfUnity {
    int ambient_order;
    int exponent;
    int order;
};
std::optional<RootOfUnity> as_root_of_unity(const Scalar& value);

/// Euler's phi.
int euler_phi(int n);

}  // namespace ldual
