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

#include "ldual/syzygy.hpp"

#include <algorithm>
#include <map>

#include "ldual/errors.hpp"
#include "ldual/snf.hpp"

namespace ldual {

namespace carrier {

namespace {

gb::Monomial monomial_of(const Exponent& lambda) {
    gb::Monomial m;
    std::int64_t lowest = 0;
    for (auto v : lambda) lowest = std::min(lowest, v);
    const std::int64_t s = -lowest;
    const std::size_t d = lambda.size();
    for (std::size_t v = 0; v < d; ++v) m.exp[v] = static_cast<std::int32_t>(lambda[v] + s);
    m.exp[d] = static_cast<std::int32_t>(s);
    for (std::size_t v = 0; v <= d; ++v) m.degree += m.exp[v];
    return m;
}

}  // namespace

gb::Vec from_laurent(const LaurentElt& f, std::uint32_t component) {
    if (f.rank() + 1 > gb::kMaxVars) throw InvalidInput("lattice rank too large for the carrier ring");
    std::vector<gb::Term> terms;
    for (const auto& [e, c] : f.terms()) terms.push_back(gb::Term{component, monomial_of(e), c});
    return gb::normalize(std::move(terms));
}

gb::Vec from_column(const LaurentMatrix& m, std::size_t col, std::uint32_t offset) {
    std::vector<gb::Term> terms;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [e, c] : m(r, col).terms())
            terms.push_back(gb::Term{static_cast<std::uint32_t>(offset + r), monomial_of(e), c});
    return gb::normalize(std::move(terms));
}

LaurentElt to_laurent(const gb::Vec& v, std::uint32_t component, Field field, std::size_t rank) {
    LaurentElt f(field, rank);
    for (const auto& t : v) {
        if (t.component != component) continue;
        Exponent e(rank);
        for (std::size_t j = 0; j < rank; ++j) e[j] = t.mono.exp[j] - t.mono.exp[rank];
        f.add_term(e, t.coeff);
    }
    return f;
}

std::vector<gb::Vec> localization_relations(std::size_t rank, std::uint32_t first, std::size_t count,
                                            Field field) {
    gb::Monomial all;
    for (std::size_t v = 0; v <= rank; ++v) all.exp[v] = 1;
    all.degree = static_cast<std::int32_t>(rank + 1);
    std::vector<gb::Vec> out;
    for (std::size_t k = 0; k < count; ++k) {
        const auto comp = static_cast<std::uint32_t>(first + k);
        out.push_back(gb::Vec{gb::Term{comp, all, field.one()}, gb::Term{comp, gb::Monomial{}, -field.one()}});
    }
    return out;
}

}  // namespace carrier

PresentedModule::PresentedModule(Field field, std::size_t rank, std::size_t ambient,
                                 const LaurentMatrix& relations)
    : field_(field), rank_(rank), ambient_(ambient) {
    if (relations.cols() && relations.rows() != ambient)
        throw InvalidInput("relation columns do not match the ambient rank");
    std::vector<gb::Vec> gens = carrier::localization_relations(rank, 0, ambient, field);
    for (std::size_t c = 0; c < relations.cols(); ++c) {
        gb::Vec v = carrier::from_column(relations, c);
        if (!v.empty()) gens.push_back(std::move(v));
    }
    gb_ = gb::GroebnerBasis::compute(field, rank + 1, std::move(gens));
}

bool PresentedModule::is_finite_length() const {
    const std::size_t nvars = rank_ + 1;
    for (std::size_t k = 0; k < ambient_; ++k) {
        const auto lms = gb_.leading_monomials(static_cast<std::uint32_t>(k));
        for (std::size_t v = 0; v < nvars; ++v) {
            bool found = false;
            for (const auto& m : lms)
                if (m.degree == m.exp[v]) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    }
    return true;
}

std::vector<gb::Term> PresentedModule::standard_monomials() const {
    if (!is_finite_length())
        throw NotFiniteLength("quotient has infinitely many standard monomials (not of finite length)");
    const std::size_t nvars = rank_ + 1;
    std::vector<gb::Term> out;
    for (std::size_t k = 0; k < ambient_; ++k) {
        const auto comp = static_cast<std::uint32_t>(k);
        const auto lms = gb_.leading_monomials(comp);
        std::vector<std::int32_t> bound(nvars, 0);
        for (std::size_t v = 0; v < nvars; ++v) {
            std::int32_t best = -1;
            for (const auto& m : lms)
                if (m.degree == m.exp[v] && (best < 0 || m.exp[v] < best)) best = m.exp[v];
            bound[v] = best;
        }
        std::vector<gb::Monomial> found;
        gb::Monomial cur;
        // odometer over the box [0, bound_v)
        bool empty_box = false;
        for (auto b : bound)
            if (b == 0) empty_box = true;
        if (empty_box) continue;
        while (true) {
            bool standard = true;
            for (const auto& m : lms)
                if (gb::divides(m, cur)) {
                    standard = false;
                    break;
                }
            if (standard) found.push_back(cur);
            std::size_t v = 0;
            while (v < nvars) {
                ++cur.exp[v];
                ++cur.degree;
                if (cur.exp[v] < bound[v]) break;
                cur.degree -= cur.exp[v];
                cur.exp[v] = 0;
                ++v;
            }
            if (v == nvars) break;
        }
        std::sort(found.begin(), found.end(), [&](const gb::Monomial& a, const gb::Monomial& b) {
            return gb::compare(comp, a, comp, b) < 0;
        });
        for (const auto& m : found) out.push_back(gb::Term{comp, m, field_.one()});
    }
    return out;
}

FinLengthModule PresentedModule::to_module() const {
    const auto basis = standard_monomials();
    const std::size_t n = basis.size();
    std::map<std::pair<std::uint32_t, std::vector<std::int32_t>>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        index[{basis[i].component, std::vector<std::int32_t>(basis[i].mono.exp.begin(), basis[i].mono.exp.end())}] = i;
    std::vector<Matrix> ops;
    for (std::size_t j = 0; j < rank_; ++j) {
        Matrix t(field_, n, n);
        for (std::size_t c = 0; c < n; ++c) {
            gb::Monomial m = basis[c].mono;
            ++m.exp[j];
            ++m.degree;
            const gb::Vec nf = gb_.normal_form(gb::Vec{gb::Term{basis[c].component, m, field_.one()}});
            for (const auto& term : nf) {
                auto it = index.find({term.component, std::vector<std::int32_t>(term.mono.exp.begin(), term.mono.exp.end())});
                if (it == index.end()) throw Error("normal form left the standard monomial basis");
                t(it->second, c) = term.coeff;
            }
        }
        ops.push_back(std::move(t));
    }
    return FinLengthModule(field_, rank_, n, std::move(ops));
}

LaurentMatrix kernel_gens(const LaurentMatrix& f) {
    const Field field = f.field();
    const std::size_t d = f.rank();
    const std::size_t n = f.rows(), m = f.cols();
    if (f.is_zero()) return LaurentMatrix::identity(field, d, m);

    std::vector<gb::Vec> gens = carrier::localization_relations(d, 0, n + m, field);
    for (std::size_t j = 0; j < m; ++j) {
        gb::Vec v = carrier::from_column(f, j);
        gb::Monomial one;
        v.push_back(gb::Term{static_cast<std::uint32_t>(n + j), one, field.one()});
        gens.push_back(std::move(v));
    }
    const auto basis = gb::GroebnerBasis::compute(field, d + 1, std::move(gens));

    std::vector<std::vector<LaurentElt>> cols;
    for (const auto& g : basis.elements()) {
        if (g.front().component < n) continue;
        std::vector<LaurentElt> col;
        bool nonzero = false;
        for (std::size_t j = 0; j < m; ++j) {
            col.push_back(carrier::to_laurent(g, static_cast<std::uint32_t>(n + j), field, d));
            nonzero = nonzero || !col.back().is_zero();
        }
        if (!nonzero) continue;
        // drop generators that are unit multiples of an earlier one
        bool duplicate = false;
        for (const auto& prev : cols) {
            std::size_t lead = 0;
            while (lead < m && prev[lead].is_zero()) ++lead;
            if (lead == m || col[lead].is_zero() || !col[lead].is_unit() || !prev[lead].is_unit()) continue;
            const LaurentElt u = col[lead] * prev[lead].unit_inverse();
            bool same = true;
            for (std::size_t j = 0; j < m && same; ++j) same = col[j] == u * prev[j];
            if (same) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) cols.push_back(std::move(col));
    }
    LaurentMatrix out(field, d, m, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < m; ++r) out(r, c) = cols[c][r];
    return out;
}

std::size_t FreeComplex::rank_at(int i) const {
    if (i < lo || i > hi()) return 0;
    return ranks[static_cast<std::size_t>(i - lo)];
}

void FreeComplex::validate() const {
    if (ranks.empty()) {
        if (!differentials.empty()) throw InvalidInput("complex has differentials but no terms");
        return;
    }
    if (differentials.size() + 1 != ranks.size()) throw InvalidInput("complex needs one differential per adjacent pair");
    for (std::size_t k = 0; k < differentials.size(); ++k) {
        const auto& dk = differentials[k];
        if (dk.rows() != ranks[k + 1] || dk.cols() != ranks[k])
            throw InvalidInput("differential " + std::to_string(lo + static_cast<int>(k)) + " has the wrong shape");
        if (dk.rank() != lattice_rank) throw InvalidInput("differential over the wrong Laurent ring");
    }
    for (std::size_t k = 0; k + 1 < differentials.size(); ++k)
        if (!(differentials[k + 1] * differentials[k]).is_zero())
            throw InvalidInput("d^2 != 0 at degree " + std::to_string(lo + static_cast<int>(k)));
}

FreeComplex FreeComplex::dual() const {
    FreeComplex out;
    out.field = field;
    out.lattice_rank = lattice_rank;
    out.lo = -hi();
    out.ranks.assign(ranks.rbegin(), ranks.rend());
    for (auto it = differentials.rbegin(); it != differentials.rend(); ++it) out.differentials.push_back(it->transpose());
    return out;
}

FinLengthModule cohomology_at(const FreeComplex& c, int i) {
    const std::size_t r = c.rank_at(i);
    if (r == 0) return FinLengthModule::zero(c.field, c.lattice_rank);
    const std::size_t idx = static_cast<std::size_t>(i - c.lo);
    const LaurentMatrix K = i < c.hi() ? kernel_gens(c.differentials[idx])
                                       : LaurentMatrix::identity(c.field, c.lattice_rank, r);
    const std::size_t s = K.cols();
    if (s == 0) return FinLengthModule::zero(c.field, c.lattice_rank);
    LaurentMatrix rel(c.field, c.lattice_rank, s, 0);
    if (i > c.lo) {
        const LaurentMatrix syz = kernel_gens(hconcat(K, c.differentials[idx - 1]));
        rel = LaurentMatrix(c.field, c.lattice_rank, s, syz.cols());
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = 0; b < syz.cols(); ++b) rel(a, b) = syz(a, b);
    }
    return PresentedModule(c.field, c.lattice_rank, s, rel).to_module();
}

FinLengthModule cohomology_at_snf(const FreeComplex& c, int i) {
    if (c.lattice_rank != 1) throw InvalidInput("Smith form cohomology needs lattice rank 1");
    const std::size_t r = c.rank_at(i);
    if (r == 0) return FinLengthModule::zero(c.field, 1);
    const std::size_t idx = static_cast<std::size_t>(i - c.lo);
    std::size_t rank_out = 0;
    if (i < c.hi()) rank_out = snf_univariate(c.differentials[idx]).invariant_factors.size();
    std::vector<UPoly> factors;
    if (i > c.lo) factors = snf_univariate(c.differentials[idx - 1]).invariant_factors;
    if (r - rank_out != factors.size())
        throw NotFiniteLength("cohomology in degree " + std::to_string(i) + " has positive rank");
    FinLengthModule out = FinLengthModule::zero(c.field, 1);
    for (const auto& f : factors) {
        if (f.degree() < 1) continue;
        out = direct_sum(out, companion_module(c.field, f.coefficients()));
    }
    return out;
}

}  // namespace ldual
