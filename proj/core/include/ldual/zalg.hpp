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
#include <optional>
#include <string>
#include <vector>

#include "ldual/field.hpp"
#include "ldual/laurent.hpp"
#include "ldual/matrix.hpp"
#include "ldual/report.hpp"

namespace ldual {

enum class CenterKind { field, laurent, polynomial };
std::string to_string(CenterKind k);

/// The designated commutative center Z: the ground field, a Laurent ring
/// k[y^+-1], or a polynomial ring k[y]. Elements are carried as LaurentElt.
struct CenterRing {
    CenterKind kind = CenterKind::field;
    std::size_t rank = 0;
    std::vector<std::string> variables;

    bool contains(const LaurentElt& z) const;
    /// Units: nonzero constants, times a monomial in the Laurent case.
    bool is_unit(const LaurentElt& z) const;
};

/// Associative algebra, free over its center on the basis b_1..b_r, with
/// b_i b_j = sum_m c_ij^m b_m. Construction validates associativity, the unit
/// laws and that every constant lies in the center ring.
class ZFiniteAlgebra {
  public:
    using Elt = std::vector<LaurentElt>;  // coordinates over Z

    ZFiniteAlgebra() = default;
    ZFiniteAlgebra(Field field, CenterRing center, std::vector<std::string> labels, std::size_t unit,
                   std::vector<std::vector<Elt>> constants);

    Field field() const { return field_; }
    const CenterRing& center() const { return center_; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t unit_index() const { return unit_; }
    const LaurentElt& constant(std::size_t i, std::size_t j, std::size_t m) const { return c_[i][j][m]; }

    Elt zero() const;
    Elt basis_element(std::size_t i) const;
    Elt multiply(const Elt& x, const Elt& y) const;
    Elt add(const Elt& x, const Elt& y) const;
    Elt scale(const LaurentElt& z, const Elt& x) const;

    /// Matrices over Z of left / right multiplication by b_i, acting on
    /// coordinate columns.
    LaurentMatrix left_regular(std::size_t i) const;
    LaurentMatrix right_regular(std::size_t i) const;
    /// Trace over Z of left multiplication.
    LaurentElt regular_trace(const Elt& x) const;

    /// Left / right regular matrices over k (center = field only).
    Matrix left_regular_k(std::size_t i) const;
    Matrix right_regular_k(std::size_t i) const;

    /// The k-algebra obtained by evaluating the center variables.
    ZFiniteAlgebra specialize(const std::vector<Scalar>& values) const;

    /// Verifies that each element (Z-coordinates) commutes with every basis element.
    bool is_central(const Elt& z) const;

  private:
    Field field_;
    CenterRing center_;
    std::vector<std::string> labels_;
    std::size_t unit_ = 0;
    std::vector<std::vector<Elt>> c_;
};

/// Finite-dimensional left module over a k-algebra: one action matrix per
/// basis element, validated against the structure constants.
class FinDimModule {
  public:
    FinDimModule() = default;
    FinDimModule(const ZFiniteAlgebra& a, std::size_t dimension, std::vector<Matrix> actions);

    std::size_t dimension() const { return dim_; }
    const std::vector<Matrix>& actions() const { return actions_; }
    const Matrix& action(std::size_t i) const { return actions_[i]; }
    Field field() const { return field_; }

  private:
    Field field_;
    std::size_t dim_ = 0;
    std::vector<Matrix> actions_;
};

/// a^g as a left module.
FinDimModule free_module(const ZFiniteAlgebra& a, std::size_t copies);
/// Basis (columns) of the Jacobson radical, as the radical of the regular
/// trace form (characteristic zero).
Matrix radical_basis(const ZFiniteAlgebra& a);

/// Projective resolution P_len -> ... -> P_0 -> M. Every term is a module
/// with a cover by a free module a^g and an a-linear splitting of that cover,
/// so each term carries dual-basis data. Terms are free except possibly the
/// last one, which is the first projective kernel.
struct ProjectiveResolution {
    std::vector<FinDimModule> terms;
    std::vector<Matrix> maps;       // maps[i] : terms[i+1] -> terms[i]
    Matrix augmentation;            // terms[0] -> M
    std::vector<Matrix> covers;     // covers[i] : a^g_i -> terms[i]
    std::vector<Matrix> splittings; // splittings[i] : terms[i] -> a^g_i
    std::vector<std::size_t> generator_counts;
    bool truncated = false;

    std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
};

/// Resolution of m over a k-algebra, at most `bound` + 1 terms.
ProjectiveResolution free_resolution(const ZFiniteAlgebra& a, const FinDimModule& m, std::size_t bound);

/// dim Ext^i_a(m, n) for i = 0..length of the resolution of m.
std::vector<std::size_t> ext_dimensions(const ZFiniteAlgebra& a, const FinDimModule& m,
                                        const FinDimModule& n, std::size_t bound);

/// The complex nu(P) = Hom_a(P, a)^* for a projective resolution P of m; the
/// term in degree -p is terms[p], maps[p] : terms[p+1] -> terms[p].
struct NakayamaComplex {
    std::vector<FinDimModule> terms;
    std::vector<Matrix> maps;
    /// Cohomology in degree -p, keyed by -p.
    std::map<int, FinDimModule> cohomology;
};

/// Throws InvalidInput when the resolution of m is truncated at `bound`.
NakayamaComplex nakayama_dual(const ZFiniteAlgebra& a, const FinDimModule& m, std::size_t bound);

/// Serre duality checks for the pair (m, n): dimension equality of Ext^i(m, n)
/// and Hom(n, nu(m)[-i]), the latter computed directly and through the total
/// complex of Hom(resolution of n, nu(m)); full rank of the composition
/// pairing; and, when m = n, the Schur count dim Hom(m, nu m).
Report verify_serre_pairing(const ZFiniteAlgebra& a, const FinDimModule& m, const FinDimModule& n,
                            std::size_t bound);

/// Hom_Z(a, Z) on the dual basis: left action (x.phi)(y) = phi(y x), right
/// action (phi.x)(y) = phi(x y).
struct HomCenter {
    std::vector<LaurentMatrix> left;
    std::vector<LaurentMatrix> right;
    std::size_t rank = 0;
    /// The double dual with its induced left action equals the left regular
    /// representation under the canonical identification.
    bool double_dual_matches = false;
};
HomCenter hom_center(const ZFiniteAlgebra& a);

struct FsgVerdict {
    enum class Kind { certified_yes, certified_no, undetermined };
    Kind kind = Kind::undetermined;
    /// The functional phi on the dual basis when certified.
    std::optional<std::vector<LaurentElt>> functional;
    std::optional<LaurentMatrix> gram;
    std::optional<LaurentElt> determinant;
    /// A functional whose form has unit determinant but is not symmetric
    /// (so a is Frobenius over Z), if the search met one.
    std::optional<std::vector<LaurentElt>> frobenius_functional;
    std::string certificate;
    std::size_t candidates_tested = 0;
};
std::string to_string(FsgVerdict::Kind k);

/// Searches for a symmetric associative Z-valued form phi(xy) with unit Gram
/// determinant. Exact yes/no over a field; over a Laurent or polynomial
/// center the search covers coefficients +-y^lambda with lambda in the box
/// [-box, box] (or [0, box]) and reports yes or undetermined.
FsgVerdict fsg_probe(const ZFiniteAlgebra& a, int box = 2, std::size_t threads = 1);

}  // namespace ldual
