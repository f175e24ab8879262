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

#include "ldual/dualities.hpp"

#include "ldual/errors.hpp"
#include "ldual/koszul_util.hpp"

namespace ldual {

FreeComplex koszul_resolution(const FinLengthModule& m) {
    const Field f = m.field();
    const std::size_t d = m.rank();
    const std::size_t n = m.dimension();
    const auto subsets = koszul::subsets_by_size(d);

    FreeComplex c;
    c.field = f;
    c.lattice_rank = d;
    c.lo = -static_cast<int>(d);
    for (std::size_t p = d + 1; p-- > 0;) c.ranks.push_back(n * subsets[p].size());
    // differential from degree -p to -p+1
    for (std::size_t p = d; p >= 1; --p) {
        LaurentMatrix D(f, d, n * subsets[p - 1].size(), n * subsets[p].size());
        for (std::size_t bi = 0; bi < subsets[p].size(); ++bi) {
            const auto& I = subsets[p][bi];
            for (std::size_t j = 0; j < I.size(); ++j) {
                auto J = I;
                J.erase(J.begin() + static_cast<std::ptrdiff_t>(j));
                const std::size_t bj = koszul::subset_index(subsets[p - 1], J);
                const Scalar sign = j % 2 == 0 ? f.one() : -f.one();
                const std::size_t var = I[j];
                const Matrix& t = m.op(var);
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t col = 0; col < n; ++col) {
                        LaurentElt e = LaurentElt::constant(f, d, sign * t(r, col));
                        if (r == col) e -= sign * LaurentElt::variable(f, d, var);
                        D(bj * n + r, bi * n + col) = e;
                    }
            }
        }
        c.differentials.push_back(std::move(D));
    }
    return c;
}

std::map<int, FinLengthModule> homological_dual(const FinLengthModule& m, DualEngine engine) {
    if (engine == DualEngine::smith && m.rank() != 1)
        throw InvalidInput("the Smith form engine needs lattice rank 1");
    const FreeComplex dual = koszul_resolution(m).dual();
    std::map<int, FinLengthModule> out;
    for (int i = 0; i <= static_cast<int>(m.rank()); ++i)
        out.emplace(i, engine == DualEngine::groebner ? cohomology_at(dual, i) : cohomology_at_snf(dual, i));
    return out;
}

std::map<int, FinLengthModule> gs_dual(const FinLengthModule& m) {
    const int d = static_cast<int>(m.rank());
    std::map<int, FinLengthModule> out;
    for (auto& [i, module] : homological_dual(m)) out.emplace(i - d, std::move(module));
    return out;
}

Report verify_three_dualities(const FinLengthModule& m, DualEngine engine) {
    Report r;
    r.suite = "three-dualities";
    const int d = static_cast<int>(m.rank());
    const auto ext = homological_dual(m, engine);

    std::string nonzero;
    for (const auto& [i, module] : ext)
        if (i != d && !module.is_zero())
            nonzero += (nonzero.empty() ? "" : ", ") + std::string("degree ") + std::to_string(i) +
                       " has dimension " + std::to_string(module.dimension());
    auto& a = r.check("vanishing-off-top-degree", "concentration-in-top-degree", nonzero.empty(),
                      nonzero.empty() ? "Ext^i(M,A) = 0 for i != " + std::to_string(d) : nonzero);
    for (const auto& [i, module] : ext) a.witness.emplace_back("dim Ext^" + std::to_string(i), std::to_string(module.dimension()));

    const FinLengthModule& top = ext.at(d);
    r.check("top-degree-dimension", "dimension-duality", top.dimension() == m.dimension(),
            "dim Ext^d = " + std::to_string(top.dimension()) + ", dim M = " + std::to_string(m.dimension()));

    const IsoResult iso = is_isomorphic(top, dual_module(m));
    auto& b = r.add("top-degree-is-contragredient", "ext-top-agrees-with-contragredient",
                    iso.isomorphic() ? Status::pass
                    : iso.verdict == IsoResult::Verdict::undetermined ? Status::undetermined
                                                                       : Status::fail,
                    iso.certificate);
    if (iso.witness) b.witness.emplace_back("intertwiner", iso.witness->to_strings());

    const auto twice = homological_dual(top, engine);
    std::string off;
    for (const auto& [i, module] : twice)
        if (i != d && !module.is_zero()) off += " degree " + std::to_string(i);
    const IsoResult back = is_isomorphic(twice.at(d), m);
    auto& c = r.add("double-dual-returns-module", "duality-squared-is-identity",
                    !off.empty() ? Status::fail
                    : back.isomorphic() ? Status::pass
                    : back.verdict == IsoResult::Verdict::undetermined ? Status::undetermined
                                                                        : Status::fail,
                    off.empty() ? back.certificate : "second dual not concentrated:" + off);
    if (back.witness) c.witness.emplace_back("intertwiner", back.witness->to_strings());
    return r;
}

}  // namespace ldual
