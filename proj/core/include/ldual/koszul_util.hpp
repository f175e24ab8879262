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

#include <algorithm>
#include <cstddef>
#include <vector>

#include "ldual/errors.hpp"

namespace ldual::koszul {

using Subset = std::vector<std::size_t>;

/// subsets[p] lists the p-element subsets of {0, ..., d-1} in lexicographic
/// order; p runs from 0 to d.
inline std::vector<std::vector<Subset>> subsets_by_size(std::size_t d) {
    std::vector<std::vector<Subset>> out(d + 1);
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        Subset s;
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (std::size_t{1} << i)) s.push_back(i);
        out[s.size()].push_back(std::move(s));
    }
    for (auto& level : out) std::sort(level.begin(), level.end());
    return out;
}

inline std::size_t subset_index(const std::vector<Subset>& level, const Subset& s) {
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) throw Error("subset not found");
    return static_cast<std::size_t>(it - level.begin());
}

}  // namespace ldual::koszul
