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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ldual/exponent.hpp"
#include "ldual/field.hpp"
#include "ldual/laurent.hpp"

namespace ldual {

/// Dense integer matrix (arbitrary precision).
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::vector<std::vector<long>> to_longs() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/// U * m * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct IntSmithForm {
    IntMatrix U, D, V;
    std::size_t rank = 0;
};
IntSmithForm integer_smith_form(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of m:
/// nonzero rows only, upper triangular pivots with positive pivot entries and
/// entries above each pivot reduced into [0, pivot).
IntMatrix hermite_form(const IntMatrix& m);

/// Basis (rows, Hermite form) of {lambda in Z^d : chi(lambda) = 1 for every
/// character}. Each character is given by its values on the standard basis.
/// Throws InvalidInput when a value is not a root of unity.
IntMatrix fixed_sublattice(const Lattice& lattice,
                           std::span<const std::vector<Scalar>> characters);

/// chi(lambda) = prod_j chi_j^lambda_j.
Scalar character_value(std::span<const Scalar> character, const Exponent& lambda);

/// For a full-rank Hermite basis H of a sublattice L of Z^d: the canonical
/// representatives {0 <= lambda_i < H_ii} of Z^d / L, in lexicographic order.
std::vector<Exponent> coset_representatives(const IntMatrix& hermite_basis);

/// Splits lambda = rep + nu with rep the canonical representative and nu in L;
/// returns (rep, coordinates of nu in the Hermite basis).
std::pair<Exponent, Exponent> reduce_modulo(const IntMatrix& hermite_basis, const Exponent& lambda);

/// Index [Z^d : L] of a full-rank Hermite basis.
mpz_class lattice_index(const IntMatrix& hermite_basis);

}  // namespace ldual
