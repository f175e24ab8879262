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
#include <string>
#include <utility>
#include <vector>

#include "ldual/finmod.hpp"
#include "ldual/lattice.hpp"
#include "ldual/laurent.hpp"
#include "ldual/report.hpp"
#include "ldual/zalg.hpp"

namespace ldual {

/// Finite group of characters of Z^d, each given by its values (roots of
/// unity) on the standard basis. Validated: contains the trivial character,
/// elements are distinct, closed under products and inverses.
class CharacterGroup {
  public:
    CharacterGroup() = default;
    CharacterGroup(Field field, std::size_t rank, std::vector<std::vector<Scalar>> elements);

    Field field() const { return field_; }
    std::size_t rank() const { return rank_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<std::vector<Scalar>>& elements() const { return elements_; }
    const std::vector<Scalar>& values(std::size_t i) const { return elements_[i]; }
    std::size_t identity() const { return identity_; }
    std::size_t product(std::size_t i, std::size_t j) const { return table_[i][j]; }
    std::size_t inverse(std::size_t i) const { return inverse_[i]; }
    Scalar evaluate(std::size_t i, const Exponent& lambda) const;

  private:
    Field field_;
    std::size_t rank_ = 0;
    std::vector<std::vector<Scalar>> elements_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::size_t identity_ = 0;
};

/// 2-cocycle table c(chi, psi), indexed like the group's elements.
class Cocycle {
  public:
    Cocycle() = default;
    explicit Cocycle(std::vector<std::vector<Scalar>> table) : table_(std::move(table)) {}
    static Cocycle trivial(Field field, std::size_t order);

    const Scalar& operator()(std::size_t i, std::size_t j) const { return table_[i][j]; }
    std::size_t size() const { return table_.size(); }
    /// Normalization and the cocycle identity
    /// c(a,b) c(ab,g) = c(b,g) c(a,bg), checked on all triples.
    std::vector<std::string> violations(const CharacterGroup& group) const;

  private:
    std::vector<std::vector<Scalar>> table_;
};

/// Sparse element sum c * e_lambda b_chi, keyed by (lambda, index of chi).
using CrossedElt = std::map<std::pair<Exponent, std::size_t>, Scalar>;

/// The crossed product A #_c Gamma with
/// (e_l b_chi)(e_m b_psi) = chi(m) c(chi, psi) e_(l+m) b_(chi psi),
/// so that b_chi e_m = chi(m) e_m b_chi.
class CrossedAlgebra {
  public:
    /// Validates group and cocycle, runs associativity spot checks on
    /// generators, and throws InvalidInput listing every violation found.
    static CrossedAlgebra build(const Lattice& lattice, CharacterGroup group, Cocycle cocycle);

    Field field() const { return group_.field(); }
    const Lattice& lattice() const { return lattice_; }
    const CharacterGroup& group() const { return group_; }
    const Cocycle& cocycle() const { return cocycle_; }
    /// Hermite basis (rows) of the fixed lattice.
    const IntMatrix& center_basis() const { return center_basis_; }
    const std::vector<Exponent>& coset_representatives() const { return reps_; }
    /// Basis {e_rho b_chi} over the center, rho-major.
    std::vector<std::pair<Exponent, std::size_t>> center_module_basis() const;
    std::vector<std::string> basis_labels() const;

    CrossedElt e(const Exponent& lambda) const;
    CrossedElt b(std::size_t chi) const;
    CrossedElt multiply(const CrossedElt& x, const CrossedElt& y) const;

    /// Structure constants over Z = k[center lattice] on center_module_basis();
    /// center variable k is e_(h_k) for the k-th Hermite row h_k.
    ZFiniteAlgebra over_center() const;

    /// Exact checks: b_chi e_mu = chi(mu) e_mu b_chi on basis mu, and
    /// freeness of rank |Gamma|^2 over the center.
    Report relation_report() const;

  private:
    Lattice lattice_;
    CharacterGroup group_;
    Cocycle cocycle_;
    IntMatrix center_basis_;
    std::vector<Exponent> reps_;
};

std::string to_string(const CrossedElt& x);

struct CenterCheck {
    bool ok = false;
    int box = 0;
    std::size_t solution_dimension = 0;
    std::size_t expected_dimension = 0;
    std::string message;
};

/// Solves the commutation equations against e_mu (basis mu) and every b_psi
/// on the span of e_lambda b_chi with lambda in [-box, box]^d and checks the
/// solution space is spanned by e_lambda, lambda in the fixed lattice.
CenterCheck verify_center(const CrossedAlgebra& r, int box = 2);

struct TraceCertificate {
    LaurentMatrix gram;
    LaurentElt determinant;
    bool unit = false;
    bool symmetric = false;
    std::vector<std::string> labels;
};

/// Gram matrix of the regular trace over the center on {e_rho b_chi}.
TraceCertificate trace_fsg_certificate(const CrossedAlgebra& r);

/// Module over the crossed product: a finite-length A-module with one
/// matrix per character, B_chi T_mu = chi(mu) T_mu B_chi and
/// B_chi B_psi = c(chi, psi) B_(chi psi).
struct CrossedModule {
    std::string name;
    FinLengthModule base;
    std::vector<Matrix> b;
};

/// Throws InvalidInput listing the violated relations.
void validate_module(const CrossedAlgebra& r, const CrossedModule& v);

/// Restriction along the center: y_k acts as prod_j T_j^(H_kj).
FinLengthModule restrict_to_center(const CrossedAlgebra& r, const FinLengthModule& m);

struct ExtOverR {
    FinLengthModule restricted;
    std::map<int, FinLengthModule> ext_center;   // Ext^i_Z(V, Z)
    std::map<int, FinLengthModule> ext_ambient;  // Ext^i_A(V, A), cross-check
    Report report;
};

/// Ext^i(V, R) through Ext^i_Z(V|Z, Z), valid under the trace certificate,
/// which must have a unit determinant (else InvalidInput).
ExtOverR ext_R_against_R(const CrossedAlgebra& r, const CrossedModule& v, const TraceCertificate& cert);

Matrix matrix_power(const Matrix& m, std::int64_t e);

}  // namespace ldual
