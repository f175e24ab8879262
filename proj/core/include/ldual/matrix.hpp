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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ldual/field.hpp"

namespace ldual {

/// Dense row-major matrix over a Field.
class Matrix {
  public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix identity(Field field, std::size_t n);
    /// Build from rows of scalars; all rows must share a length.
    static Matrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const;
    Matrix column(std::size_t c) const;
    Matrix columns(std::size_t first, std::size_t count) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, Matrix m);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<std::vector<std::string>> to_strings() const;

  private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix embed(const Matrix& m, Field target);

struct Echelon {
    Matrix reduced;                  // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};
Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);
Scalar determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
/// Columns form a basis of {v : m v = 0}.
Matrix nullspace(const Matrix& m);
/// Columns form a basis of the column space (a subset of the columns of m).
Matrix column_basis(const Matrix& m);
/// Some X with a X = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// A quotient K / I of two nested subspaces of k^n, with I inside K.
/// `representatives` holds lifts of a basis of the quotient.
class Subquotient {
  public:
    Subquotient(const Matrix& sub, const Matrix& inner);

    std::size_t dimension() const { return reps_.cols(); }
    std::size_t ambient_dimension() const { return basis_.rows(); }
    const Matrix& representatives() const { return reps_; }
    /// Quotient coordinates of vectors (columns) lying in K.
    Matrix coordinates(const Matrix& vectors) const;
    /// Matrix of the map induced on K / I by an operator preserving both.
    Matrix induced(const Matrix& op) const;

  private:
    Matrix basis_;  // [inner basis | quotient representatives]
    Matrix reps_;
    std::size_t inner_dim_ = 0;
};

/// Basis of {P : P * from[i] == to[i] * P for all i}, P of size
/// to_dim x from_dim.
std::vector<Matrix> intertwiners(std::span<const Matrix> from, std::span<const Matrix> to,
                                 std::size_t from_dim, std::size_t to_dim, Field field);

/// Outcome of searching a linear span of square matrices for an invertible
/// element.
struct InvertibleSearch {
    enum class Verdict { found, none_exact, none_sampled };
    Verdict verdict = Verdict::none_exact;
    std::optional<Matrix> witness;
    std::vector<Scalar> combination;  // coefficients of the witness in the span
    std::string certificate;
};

/// Looks for an invertible element of span(basis). A hit is always exact.
/// A miss is exact when the span has a common left/right kernel or when the
/// full evaluation grid {0..n}^s (at most `grid_budget` points) was checked;
/// otherwise it is reported as none_sampled.
InvertibleSearch find_invertible_in_span(std::span<const Matrix> basis, std::size_t n,
                                         Field field, std::size_t grid_budget = 4096);

}  // namespace ldual
