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
#include <string>
#include <vector>

#include "ldual/field.hpp"
#include "ldual/matrix.hpp"

namespace ldual {

/// Finite-dimensional module over k[x1^+-1, ..., xd^+-1]: d pairwise
/// commuting invertible operators on k^n. The constructor validates both
/// conditions exactly and throws InvalidInput otherwise.
class FinLengthModule {
  public:
    FinLengthModule() = default;
    FinLengthModule(Field field, std::size_t rank, std::size_t dimension, std::vector<Matrix> ops);
    static FinLengthModule zero(Field field, std::size_t rank);
    /// One-dimensional module with x_j acting by values[j].
    static FinLengthModule character(Field field, const std::vector<Scalar>& values);

    Field field() const { return field_; }
    std::size_t rank() const { return rank_; }
    std::size_t dimension() const { return dim_; }
    const std::vector<Matrix>& operators() const { return ops_; }
    const Matrix& op(std::size_t j) const { return ops_[j]; }
    bool is_zero() const { return dim_ == 0; }

    friend bool operator==(const FinLengthModule& a, const FinLengthModule& b) {
        return a.field_ == b.field_ && a.rank_ == b.rank_ && a.dim_ == b.dim_ && a.ops_ == b.ops_;
    }

  private:
    Field field_;
    std::size_t rank_ = 0;
    std::size_t dim_ = 0;
    std::vector<Matrix> ops_;
};

/// Contragredient Hom_k(m, k): operators transposed.
FinLengthModule dual_module(const FinLengthModule& m);

FinLengthModule direct_sum(const FinLengthModule& a, const FinLengthModule& b);

/// Transport of structure along an invertible change of basis: P T P^-1.
FinLengthModule conjugate(const FinLengthModule& m, const Matrix& p);

/// Companion module k[x^+-1]/(f) for a monic f with nonzero constant term.
FinLengthModule companion_module(Field field, const std::vector<Scalar>& monic_coeffs);

/// Basis of Hom_A(m, n) as n.dim x m.dim matrices.
std::vector<Matrix> hom_basis(const FinLengthModule& m, const FinLengthModule& n);

/// Ext^p_A(m, n) for p = 0..d, each with its residual A-action, from the
/// Koszul cochain complex Hom_k(m, n) (x) Lambda^p with
/// psi_i(f) = f T_i(m) - T_i(n) f.
std::vector<FinLengthModule> ext_finite(const FinLengthModule& m, const FinLengthModule& n);

struct IsoResult {
    enum class Verdict { isomorphic, not_isomorphic, undetermined };
    Verdict verdict = Verdict::not_isomorphic;
    std::optional<Matrix> witness;  // P with P T_i(m) = T_i(n) P
    std::string certificate;
    std::size_t hom_dimension = 0;

    bool isomorphic() const { return verdict == Verdict::isomorphic; }
};

/// Decides m = n by searching Hom_A(m, n) for an invertible element. A
/// witness is always exact. Non-isomorphism is exact for dimension or
/// Hom-dimension mismatches, a common kernel of the intertwiner space, or an
/// exhaustive evaluation grid; otherwise the verdict is undetermined.
IsoResult is_isomorphic(const FinLengthModule& m, const FinLengthModule& n);

}  // namespace ldual
