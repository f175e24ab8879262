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
#include <vector>

#include "ldual/finmod.hpp"
#include "ldual/groebner.hpp"
#include "ldual/laurent.hpp"

namespace ldual {

/// The Laurent ring k[x1^+-1..xd^+-1] carried as k[x1..xd, t]/(x1...xd t - 1).
/// Variable j < d is x_{j+1}; variable d is t.
namespace carrier {

/// x^lambda -> t^s x^(lambda + s(1..1)) with s = max(0, -min lambda).
gb::Vec from_laurent(const LaurentElt& f, std::uint32_t component);
/// Column vector of Laurent entries as one carrier vector.
gb::Vec from_column(const LaurentMatrix& m, std::size_t col, std::uint32_t offset = 0);
/// Image in the Laurent ring of the terms of `v` in a given component.
LaurentElt to_laurent(const gb::Vec& v, std::uint32_t component, Field field, std::size_t rank);
/// (x1...xd t - 1) e_k for k in [first, first + count).
std::vector<gb::Vec> localization_relations(std::size_t rank, std::uint32_t first, std::size_t count,
                                            Field field);

}  // namespace carrier

/// Quotient A^n / (relations), with a reduced Groebner basis for
/// position-over-term degree reverse lexicographic order in the carrier ring
/// (the localization relations are always adjoined).
class PresentedModule {
  public:
    PresentedModule(Field field, std::size_t rank, std::size_t ambient, const LaurentMatrix& relations);

    Field field() const { return field_; }
    std::size_t rank() const { return rank_; }
    std::size_t ambient_rank() const { return ambient_; }
    const gb::GroebnerBasis& groebner_basis() const { return gb_; }

    /// True iff every variable, t included, has a pure power among the
    /// leading monomials of each component.
    bool is_finite_length() const;
    /// k-basis of standard monomials; throws NotFiniteLength.
    std::vector<gb::Term> standard_monomials() const;
    /// The quotient as a module, x_j acting through normal forms.
    FinLengthModule to_module() const;

  private:
    Field field_;
    std::size_t rank_;
    std::size_t ambient_;
    gb::GroebnerBasis gb_;
};

/// Generators (as columns) of the kernel of f : A^cols -> A^rows.
LaurentMatrix kernel_gens(const LaurentMatrix& f);

/// Bounded cochain complex of finite free A-modules. differentials[k] is the
/// map C^(lo+k) -> C^(lo+k+1), stored as a rank(lo+k+1) x rank(lo+k) matrix.
struct FreeComplex {
    Field field;
    std::size_t lattice_rank = 0;
    int lo = 0;
    std::vector<std::size_t> ranks;
    std::vector<LaurentMatrix> differentials;

    int hi() const { return lo + static_cast<int>(ranks.size()) - 1; }
    std::size_t rank_at(int i) const;
    /// Throws InvalidInput on size mismatches or a nonzero composite.
    void validate() const;
    /// Complex Hom_A(-, A): degree i becomes -i, differentials transposed.
    FreeComplex dual() const;
};

/// H^i(c) as a finite-length module; throws NotFiniteLength otherwise.
FinLengthModule cohomology_at(const FreeComplex& c, int i);

/// H^i(c) for d = 1 from Smith forms: the torsion of coker d^(i-1), each
/// invariant factor contributing a companion block.
FinLengthModule cohomology_at_snf(const FreeComplex& c, int i);

}  // namespace ldual
