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

#include <vector>

#include "ldual/laurent.hpp"
#include "ldual/upoly.hpp"

namespace ldual {

/// Smith form over the principal ideal domain k[x^+-1]: U * m * V = D.
/// Diagonal entries are normalized to monic polynomials with nonzero constant
/// term (or zero), each dividing the next.
struct LaurentSmithForm {
    LaurentMatrix U, D, V;
    std::vector<UPoly> invariant_factors;  // nonzero diagonal entries, in order
};

/// Requires lattice rank 1. Negative exponents are cleared row by row with
/// unit monomials before Euclidean reduction; U records those units.
LaurentSmithForm snf_univariate(const LaurentMatrix& m);

}  // namespace ldual
