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

#include <map>
#include <string>
#include <vector>

#include "ldual/finmod.hpp"
#include "ldual/report.hpp"
#include "ldual/syzygy.hpp"

namespace ldual {

/// Koszul resolution of m as a cochain complex in degrees -d..0; the term in
/// degree -p is A^(n * binom(d, p)) with basis v_a (x) e_I (I in lexicographic
/// order, then a), and d(v (x) e_I) = sum_j (-1)^j (T_{i_j} - x_{i_j}) v (x) e_{I - i_j}.
FreeComplex koszul_resolution(const FinLengthModule& m);

enum class DualEngine { groebner, smith };

/// Ext^i_A(m, A) for i = 0..d, from the A-dual of the Koszul resolution.
/// The Smith engine is available for d = 1 only.
std::map<int, FinLengthModule> homological_dual(const FinLengthModule& m,
                                                DualEngine engine = DualEngine::groebner);

/// RHom_A(m, A[d]): degree i holds Ext^(i+d)_A(m, A), i = -d..0.
std::map<int, FinLengthModule> gs_dual(const FinLengthModule& m);

/// Checks vanishing off the top degree, Ext^d(m, A) = m* with a recorded
/// intertwiner, and that dualizing twice gives back m.
Report verify_three_dualities(const FinLengthModule& m, DualEngine engine = DualEngine::groebner);

}  // namespace ldual
