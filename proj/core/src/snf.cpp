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

#include "ldual/snf.hpp"

#include <algorithm>

#include "ldual/errors.hpp"

namespace ldual {

namespace {

using PolyGrid = std::vector<std::vector<UPoly>>;

PolyGrid identity_grid(Field f, std::size_t n) {
    PolyGrid g(n, std::vector<UPoly>(n, UPoly(f)));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = UPoly::constant(f.one());
    return g;
}

void row_op(PolyGrid& g, std::size_t dst, std::size_t src, const UPoly& q) {
    // row dst -= q * row src
    for (std::size_t c = 0; c < g[dst].size(); ++c)
        if (!g[src][c].is_zero()) g[dst][c] -= q * g[src][c];
}

void col_op(PolyGrid& g, std::size_t dst, std::size_t src, const UPoly& q) {
    for (auto& row : g)
        if (!row[src].is_zero()) row[dst] -= q * row[src];
}

void swap_cols(PolyGrid& g, std::size_t a, std::size_t b) {
    for (auto& row : g) std::swap(row[a], row[b]);
}

LaurentMatrix to_laurent(const PolyGrid& g, Field f, std::size_t nr, std::size_t nc) {
    LaurentMatrix m(f, 1, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) m(r, c) = g[r][c].to_laurent();
    return m;
}

}  // namespace

LaurentSmithForm snf_univariate(const LaurentMatrix& m) {
    if (m.rank() != 1) throw InvalidInput("snf_univariate requires lattice rank 1");
    const Field f = m.field();
    const std::size_t nr = m.rows(), nc = m.cols();

    // clear negative exponents: row r is multiplied by x^shift[r]
    std::vector<std::int64_t> shift(nr, 0);
    PolyGrid a(nr, std::vector<UPoly>(nc, UPoly(f)));
    for (std::size_t r = 0; r < nr; ++r) {
        std::int64_t lowest = 0;
        for (std::size_t c = 0; c < nc; ++c)
            for (const auto& [e, v] : m(r, c).terms()) lowest = std::min(lowest, e[0]);
        shift[r] = -lowest;
        for (std::size_t c = 0; c < nc; ++c) a[r][c] = UPoly::from_laurent(m(r, c).shifted({shift[r]}));
    }

    PolyGrid U = identity_grid(f, nr);
    PolyGrid V = identity_grid(f, nc);
    const std::size_t steps = std::min(nr, nc);
    for (std::size_t t = 0; t < steps; ++t) {
        while (true) {
            std::size_t pr = nr, pc = nc;
            for (std::size_t r = t; r < nr; ++r)
                for (std::size_t c = t; c < nc; ++c)
                    if (!a[r][c].is_zero() && (pr == nr || a[r][c].degree() < a[pr][pc].degree())) {
                        pr = r;
                        pc = c;
                    }
            if (pr == nr) break;
            std::swap(a[t], a[pr]);
            std::swap(U[t], U[pr]);
            swap_cols(a, t, pc);
            swap_cols(V, t, pc);
            bool clean = true;
            for (std::size_t r = t + 1; r < nr; ++r) {
                if (a[r][t].is_zero()) continue;
                const UPoly q = a[r][t].divmod(a[t][t]).first;
                row_op(a, r, t, q);
                row_op(U, r, t, q);
                if (!a[r][t].is_zero()) clean = false;
            }
            for (std::size_t c = t + 1; c < nc; ++c) {
                if (a[t][c].is_zero()) continue;
                const UPoly q = a[t][c].divmod(a[t][t]).first;
                col_op(a, c, t, q);
                col_op(V, c, t, q);
                if (!a[t][c].is_zero()) clean = false;
            }
            if (!clean) continue;
            std::size_t bad = nr;
            for (std::size_t r = t + 1; r < nr && bad == nr; ++r)
                for (std::size_t c = t + 1; c < nc; ++c)
                    if (!a[r][c].divmod(a[t][t]).second.is_zero()) {
                        bad = r;
                        break;
                    }
            if (bad == nr) break;
            // row t += row bad, then reduce again
            row_op(a, t, bad, UPoly::constant(-f.one()));
            row_op(U, t, bad, UPoly::constant(-f.one()));
        }
    }

    // Laurent normalization of the diagonal: divide out lc * x^valuation.
    // U_total = diag(x^-val) * U_poly * diag(x^shift); the scalar 1/lc is
    // folded into U_poly's rows.
    LaurentSmithForm out;
    LaurentMatrix n1(f, 1, nr, nr), n2(f, 1, nr, nr);
    for (std::size_t r = 0; r < nr; ++r) {
        std::int64_t val = 0;
        if (r < steps && !a[r][r].is_zero()) {
            val = static_cast<std::int64_t>(a[r][r].valuation());
            const Scalar c = a[r][r].leading().inverse();
            std::vector<Scalar> coeffs(a[r][r].coefficients().begin() + val,
                                       a[r][r].coefficients().end());
            a[r][r] = c * UPoly(f, std::move(coeffs));
            for (std::size_t k = 0; k < nr; ++k) U[r][k] = c * U[r][k];
        }
        n1(r, r) = LaurentElt::monomial(f, {shift[r]}, f.one());
        n2(r, r) = LaurentElt::monomial(f, {-val}, f.one());
    }
    out.U = n2 * to_laurent(U, f, nr, nr) * n1;
    out.V = to_laurent(V, f, nc, nc);
    out.D = LaurentMatrix(f, 1, nr, nc);
    for (std::size_t i = 0; i < steps; ++i) {
        out.D(i, i) = a[i][i].to_laurent();
        if (!a[i][i].is_zero()) out.invariant_factors.push_back(a[i][i]);
    }
    return out;
}

}  // namespace ldual
