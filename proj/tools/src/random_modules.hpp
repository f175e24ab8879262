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
#include <random>

#include "ldual/finmod.hpp"

namespace ldual::cli {

/// Random finite-length module: operators are integer polynomials of degree
/// at most 2 in one random integer matrix, redrawn until all are invertible.
inline FinLengthModule random_module(Field f, std::size_t rank, std::size_t dim, std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(-2, 2);
    Matrix c(f, dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t k = 0; k < dim; ++k) c(r, k) = f.from_int(entry(rng));
    const Matrix c2 = c * c;
    std::vector<Matrix> ops;
    while (ops.size() < rank) {
        const int a0 = entry(rng);
        const int a1 = entry(rng);
        const int a2 = entry(rng);
        Matrix t = f.from_int(a0) * Matrix::identity(f, dim) + f.from_int(a1) * c + f.from_int(a2) * c2;
        if (!determinant(t).is_zero()) ops.push_back(std::move(t));
    }
    return FinLengthModule(f, rank, dim, std::move(ops));
}

}  // namespace ldual::cli
