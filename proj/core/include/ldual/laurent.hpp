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

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ldual/exponent.hpp"
#include "ldual/field.hpp"
#include "ldual/matrix.hpp"

namespace ldual {

/// The lattice Z^d; `rank` is d.
struct Lattice {
    std::size_t rank = 0;
    friend bool operator==(const Lattice&, const Lattice&) = default;
};

/// Default variable names x1..xd.
std::vector<std::string> default_variables(std::size_t rank, const std::string& stem = "x");

/// Element of the Laurent ring k[x1^+-1, ..., xd^+-1]. Terms are kept in
/// lexicographic exponent order with no zero coefficients, so equality is
/// representational.
class LaurentElt {
  public:
    LaurentElt() = default;
    LaurentElt(Field field, std::size_t rank) : field_(field), rank_(rank) {}
    static LaurentElt constant(Field field, std::size_t rank, const Scalar& c);
    static LaurentElt monomial(Field field, const Exponent& e, const Scalar& c);
    static LaurentElt variable(Field field, std::size_t rank, std::size_t index);
    /// Parse "2*x1^-3*x2 + 1/2"-style strings.
    static LaurentElt parse(std::string_view text, Field field, std::size_t rank,
                            std::span<const std::string> variables);
    static LaurentElt parse(std::string_view text, Field field, std::size_t rank);

    Field field() const { return field_; }
    std::size_t rank() const { return rank_; }
    const std::map<Exponent, Scalar>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Nonzero multiple of a monomial.
    bool is_unit() const { return terms_.size() == 1; }
    bool is_constant() const;
    Scalar coefficient(const Exponent& e) const;
    /// Coefficient of the zero exponent.
    Scalar constant_term() const;

    void add_term(const Exponent& e, const Scalar& c);

    LaurentElt operator-() const;
    LaurentElt& operator+=(const LaurentElt& rhs);
    LaurentElt& operator-=(const LaurentElt& rhs);
    friend LaurentElt operator+(LaurentElt a, const LaurentElt& b) { return a += b; }
    friend LaurentElt operator-(LaurentElt a, const LaurentElt& b) { return a -= b; }
    friend LaurentElt operator*(const LaurentElt& a, const LaurentElt& b);
    friend LaurentElt operator*(const Scalar& s, const LaurentElt& a);
    LaurentElt shifted(const Exponent& e) const;
    /// Inverse of a unit; throws DivisionByZero otherwise.
    LaurentElt unit_inverse() const;

    /// Substitute commuting invertible matrices for the variables.
    Matrix evaluate(std::span<const Matrix> ops, std::size_t dim) const;
    Scalar evaluate(std::span<const Scalar> values) const;

    friend bool operator==(const LaurentElt& a, const LaurentElt& b) {
        return a.field_ == b.field_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentElt& a, const LaurentElt& b) { return !(a == b); }

    std::string to_string(std::span<const std::string> variables) const;
    std::string to_string() const;

  private:
    void check_compatible(const LaurentElt& other) const;

    Field field_;
    std::size_t rank_ = 0;
    std::map<Exponent, Scalar> terms_;
};

/// True iff f is c * x^lambda with c != 0.
inline bool is_unit(const LaurentElt& f) { return f.is_unit(); }

class LaurentMatrix {
  public:
    LaurentMatrix() = default;
    LaurentMatrix(Field field, std::size_t rank, std::size_t rows, std::size_t cols);
    static LaurentMatrix identity(Field field, std::size_t rank, std::size_t n);
    static LaurentMatrix from_scalar(const Matrix& m, std::size_t rank);

    Field field() const { return field_; }
    std::size_t rank() const { return rank_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    LaurentElt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const LaurentElt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    LaurentMatrix transpose() const;
    bool is_zero() const;
    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b);
    friend bool operator!=(const LaurentMatrix& a, const LaurentMatrix& b) { return !(a == b); }

    std::vector<std::vector<std::string>> to_strings(std::span<const std::string> variables) const;

  private:
    Field field_;
    std::size_t rank_ = 0;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<LaurentElt> data_;
};

LaurentMatrix hconcat(const LaurentMatrix& a, const LaurentMatrix& b);

/// Exact determinant by Laplace expansion along the sparsest row.
LaurentElt determinant(const LaurentMatrix& m);

}  // namespace ldual
