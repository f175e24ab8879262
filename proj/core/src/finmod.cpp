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

#include "ldual/finmod.hpp"

#include <algorithm>

#include "ldual/errors.hpp"
#include "ldual/koszul_util.hpp"

namespace ldual {

FinLengthModule::FinLengthModule(Field field, std::size_t rank, std::size_t dimension,
                                 std::vector<Matrix> ops)
    : field_(field), rank_(rank), dim_(dimension), ops_(std::move(ops)) {
    if (ops_.size() != rank_) throw InvalidInput("module needs one operator per lattice coordinate");
    for (const auto& t : ops_) {
        if (t.rows() != dim_ || t.cols() != dim_) throw InvalidInput("operator has the wrong size");
        if (dim_ && t.field() != field_) throw FieldMismatch(t.field().name(), field_.name());
    }
    for (std::size_t i = 0; i < rank_; ++i) {
        if (dim_ && determinant(ops_[i]).is_zero())
            throw InvalidInput("operator T" + std::to_string(i + 1) + " is not invertible");
        for (std::size_t j = i + 1; j < rank_; ++j)
            if (ops_[i] * ops_[j] != ops_[j] * ops_[i])
                throw InvalidInput("operators T" + std::to_string(i + 1) + " and T" +
                                   std::to_string(j + 1) + " do not commute");
    }
}

FinLengthModule FinLengthModule::zero(Field field, std::size_t rank) {
    return FinLengthModule(field, rank, 0, std::vector<Matrix>(rank, Matrix(field, 0, 0)));
}

FinLengthModule FinLengthModule::character(Field field, const std::vector<Scalar>& values) {
    std::vector<Matrix> ops;
    for (const auto& v : values) ops.push_back(Matrix::from_rows(field, {{v}}));
    return FinLengthModule(field, values.size(), 1, std::move(ops));
}

FinLengthModule dual_module(const FinLengthModule& m) {
    std::vector<Matrix> ops;
    for (const auto& t : m.operators()) ops.push_back(t.transpose());
    return FinLengthModule(m.field(), m.rank(), m.dimension(), std::move(ops));
}

FinLengthModule direct_sum(const FinLengthModule& a, const FinLengthModule& b) {
    if (a.rank() != b.rank()) throw InvalidInput("direct sum of modules over different rings");
    std::vector<Matrix> ops;
    for (std::size_t j = 0; j < a.rank(); ++j) ops.push_back(direct_sum(a.op(j), b.op(j)));
    return FinLengthModule(a.field(), a.rank(), a.dimension() + b.dimension(), std::move(ops));
}

FinLengthModule conjugate(const FinLengthModule& m, const Matrix& p) {
    const auto inv = inverse(p);
    if (!inv) throw InvalidInput("conjugation by a singular matrix");
    std::vector<Matrix> ops;
    for (const auto& t : m.operators()) ops.push_back(p * t * *inv);
    return FinLengthModule(m.field(), m.rank(), m.dimension(), std::move(ops));
}

FinLengthModule companion_module(Field field, const std::vector<Scalar>& c) {
    // c = low-to-high coefficients of a monic polynomial
    if (c.empty() || !c.back().is_one()) throw InvalidInput("companion module needs a monic polynomial");
    const std::size_t k = c.size() - 1;
    Matrix t(field, k, k);
    for (std::size_t j = 0; j + 1 < k; ++j) t(j + 1, j) = field.one();
    for (std::size_t i = 0; i < k; ++i) t(i, k - 1) = -c[i];
    return FinLengthModule(field, 1, k, {t});
}

std::vector<Matrix> hom_basis(const FinLengthModule& m, const FinLengthModule& n) {
    if (m.rank() != n.rank()) throw InvalidInput("Hom between modules over different rings");
    return intertwiners(m.operators(), n.operators(), m.dimension(), n.dimension(), m.field());
}

std::vector<FinLengthModule> ext_finite(const FinLengthModule& m, const FinLengthModule& n) {
    if (m.rank() != n.rank()) throw InvalidInput("Ext between modules over different rings");
    if (m.field() != n.field()) throw FieldMismatch(m.field().name(), n.field().name());
    const Field f = m.field();
    const std::size_t d = m.rank();
    const std::size_t a = m.dimension(), b = n.dimension();
    const std::size_t h = a * b;

    // psi_i on vec(F), F of size b x a, index r + c * b
    std::vector<Matrix> psi;
    std::vector<Matrix> residual;
    for (std::size_t i = 0; i < d; ++i) {
        Matrix p(f, h, h), q(f, h, h);
        const Matrix& tm = m.op(i);
        const Matrix& tn = n.op(i);
        for (std::size_t r = 0; r < b; ++r)
            for (std::size_t c = 0; c < a; ++c) {
                const std::size_t col = r + c * b;
                // F = E_rc:  F tm has row r equal to tm row c
                for (std::size_t c2 = 0; c2 < a; ++c2)
                    if (!tm(c, c2).is_zero()) p(r + c2 * b, col) += tm(c, c2);
                // tn F has column c equal to tn column r
                for (std::size_t r2 = 0; r2 < b; ++r2)
                    if (!tn(r2, r).is_zero()) {
                        p(r2 + c * b, col) -= tn(r2, r);
                        q(r2 + c * b, col) += tn(r2, r);
                    }
            }
        psi.push_back(std::move(p));
        residual.push_back(std::move(q));
    }

    const auto subsets = koszul::subsets_by_size(d);
    auto cochain_dim = [&](std::size_t p) { return h * subsets[p].size(); };
    // delta^p : C^p -> C^{p+1}
    auto delta = [&](std::size_t p) {
        Matrix D(f, cochain_dim(p + 1), cochain_dim(p));
        for (std::size_t bi = 0; bi < subsets[p + 1].size(); ++bi) {
            const auto& I = subsets[p + 1][bi];
            for (std::size_t j = 0; j < I.size(); ++j) {
                auto J = I;
                J.erase(J.begin() + static_cast<std::ptrdiff_t>(j));
                const std::size_t bj = koszul::subset_index(subsets[p], J);
                const bool negative = j % 2 == 1;
                const Matrix& ps = psi[I[j]];
                for (std::size_t r = 0; r < h; ++r)
                    for (std::size_t c = 0; c < h; ++c)
                        if (!ps(r, c).is_zero())
                            D(bi * h + r, bj * h + c) += negative ? -ps(r, c) : ps(r, c);
            }
        }
        return D;
    };

    std::vector<FinLengthModule> out;
    for (std::size_t p = 0; p <= d; ++p) {
        const std::size_t dim_p = cochain_dim(p);
        const Matrix cycles = p < d ? nullspace(delta(p)) : Matrix::identity(f, dim_p);
        const Matrix bounds = p > 0 ? delta(p - 1) : Matrix(f, dim_p, 0);
        const Subquotient sq(cycles, bounds);
        std::vector<Matrix> ops;
        for (std::size_t j = 0; j < d; ++j) {
            Matrix big(f, dim_p, dim_p);
            for (std::size_t blk = 0; blk < subsets[p].size(); ++blk)
                for (std::size_t r = 0; r < h; ++r)
                    for (std::size_t c = 0; c < h; ++c) big(blk * h + r, blk * h + c) = residual[j](r, c);
            ops.push_back(sq.induced(big));
        }
        out.emplace_back(f, d, sq.dimension(), std::move(ops));
    }
    return out;
}

IsoResult is_isomorphic(const FinLengthModule& m, const FinLengthModule& n) {
    IsoResult out;
    if (m.rank() != n.rank() || m.field() != n.field()) {
        out.certificate = "different ground ring";
        return out;
    }
    if (m.dimension() != n.dimension()) {
        out.certificate = "dimension " + std::to_string(m.dimension()) + " vs " +
                          std::to_string(n.dimension());
        return out;
    }
    const auto hom = hom_basis(m, n);
    out.hom_dimension = hom.size();
    const std::size_t end_m = hom_basis(m, m).size();
    if (hom.size() != end_m) {
        out.certificate = "dim Hom(m,n) = " + std::to_string(hom.size()) + " but dim End(m) = " +
                          std::to_string(end_m);
        return out;
    }
    const std::size_t back = hom_basis(n, m).size();
    if (back != end_m) {
        out.certificate = "dim Hom(n,m) = " + std::to_string(back) + " but dim End(m) = " +
                          std::to_string(end_m);
        return out;
    }
    const auto search = find_invertible_in_span(hom, m.dimension(), m.field());
    out.certificate = search.certificate;
    switch (search.verdict) {
        case InvertibleSearch::Verdict::found:
            out.verdict = IsoResult::Verdict::isomorphic;
            out.witness = search.witness;
            break;
        case InvertibleSearch::Verdict::none_exact:
            out.verdict = IsoResult::Verdict::not_isomorphic;
            break;
        case InvertibleSearch::Verdict::none_sampled:
            out.verdict = IsoResult::Verdict::undetermined;
            break;
    }
    return out;
}

}  // namespace ldual
