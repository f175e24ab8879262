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

// Test-side oracles. They share only Scalar arithmetic with the library and
// re-derive ranks, Koszul cochains and intertwiner equations from scratch.

#include <cstddef>
#include <string>
#include <vector>

#include "ldual/finmod.hpp"
#include "ldual/laurent.hpp"
#include "ldual/matrix.hpp"
#include "ldual/parse.hpp"
#include "ldual/zalg.hpp"

namespace oracle {

using ldual::Field;
using ldual::FinLengthModule;
using ldual::Matrix;
using ldual::Scalar;
using Grid = std::vector<std::vector<Scalar>>;

inline Field Q() { return Field::rational(); }

inline Matrix mat(Field f, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Scalar>> s;
    for (const auto& r : rows) {
        s.emplace_back();
        for (const auto& e : r) s.back().push_back(ldual::parse_scalar(e, f));
    }
    return Matrix::from_rows(f, s);
}

inline Matrix imat(Field f, const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Scalar>> s;
    for (const auto& r : rows) {
        s.emplace_back();
        for (long e : r) s.back().push_back(f.from_int(e));
    }
    return Matrix::from_rows(f, s);
}

inline ldual::LaurentElt lau(const std::string& text, std::size_t rank, Field f = Field::rational()) {
    return ldual::LaurentElt::parse(text, f, rank);
}

// Plain Gaussian elimination.
inline std::size_t rank(Grid a) {
    std::size_t r = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const Scalar inv = a[r][c].inverse();
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Scalar factor = a[i][c] * inv;
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= factor * a[r][k];
        }
        ++r;
    }
    return r;
}

inline Grid grid(const Matrix& m) {
    Grid g(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c);
    return g;
}

inline bool invertible(const Matrix& m) { return m.rows() == m.cols() && rank(grid(m)) == m.rows(); }

// Matrix of X -> X A - B X on row-major vec(X), X of size q x p.
inline Grid commutator_map(const Matrix& a, const Matrix& b) {
    const std::size_t p = a.rows(), q = b.rows();
    const Field f = a.field();
    Grid g(p * q, std::vector<Scalar>(p * q, f.zero()));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            const std::size_t row = i * p + j;
            for (std::size_t k = 0; k < p; ++k) g[row][i * p + k] += a(k, j);
            for (std::size_t k = 0; k < q; ++k) g[row][k * p + j] -= b(i, k);
        }
    return g;
}

inline std::size_t hom_dimension(const FinLengthModule& m, const FinLengthModule& n) {
    Grid stacked;
    for (std::size_t j = 0; j < m.rank(); ++j) {
        const Grid g = commutator_map(m.op(j), n.op(j));
        stacked.insert(stacked.end(), g.begin(), g.end());
    }
    const std::size_t unknowns = m.dimension() * n.dimension();
    if (stacked.empty()) return unknowns;
    return unknowns - rank(stacked);
}

// dim Ext^p_A(m, n), p = 0..d, from an independently assembled Koszul cochain
// complex on Hom_k(m, n) (x) Lambda^p.
inline std::vector<std::size_t> ext_dimensions(const FinLengthModule& m, const FinLengthModule& n) {
    const std::size_t d = m.rank();
    const std::size_t h = m.dimension() * n.dimension();
    const Field f = m.field();
    std::vector<std::vector<unsigned>> by_size(d + 1);
    for (unsigned mask = 0; mask < (1u << d); ++mask) by_size[__builtin_popcount(mask)].push_back(mask);
    auto index_in = [](const std::vector<unsigned>& v, unsigned mask) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] == mask) return i;
        return v.size();
    };
    std::vector<Grid> psi;
    for (std::size_t j = 0; j < d; ++j) psi.push_back(commutator_map(m.op(j), n.op(j)));
    // delta_p : C^p -> C^(p+1)
    std::vector<std::size_t> ranks(d + 1, 0);
    for (std::size_t p = 0; p < d; ++p) {
        const auto& src = by_size[p];
        const auto& dst = by_size[p + 1];
        Grid g(dst.size() * h, std::vector<Scalar>(src.size() * h, f.zero()));
        for (std::size_t si = 0; si < src.size(); ++si)
            for (unsigned j = 0; j < d; ++j) {
                if (src[si] & (1u << j)) continue;
                const unsigned target = src[si] | (1u << j);
                const int sign = __builtin_popcount(src[si] & ((1u << j) - 1)) % 2 ? -1 : 1;
                const std::size_t ti = index_in(dst, target);
                for (std::size_t r = 0; r < h; ++r)
                    for (std::size_t c = 0; c < h; ++c)
                        if (!psi[j][r][c].is_zero())
                            g[ti * h + r][si * h + c] += sign == 1 ? psi[j][r][c] : -psi[j][r][c];
            }
        ranks[p] = g.empty() || g[0].empty() ? 0 : rank(g);
    }
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p <= d; ++p) {
        const std::size_t dim = by_size[p].size() * h;
        const std::size_t outgoing = p < d ? ranks[p] : 0;
        const std::size_t incoming = p > 0 ? ranks[p - 1] : 0;
        out.push_back(dim - outgoing - incoming);
    }
    return out;
}

// P is an isomorphism m -> n: invertible and P T_j(m) = T_j(n) P.
inline bool is_intertwiner(const Matrix& p, const FinLengthModule& m, const FinLengthModule& n) {
    if (!invertible(p)) return false;
    for (std::size_t j = 0; j < m.rank(); ++j)
        if (p * m.op(j) != n.op(j) * p) return false;
    return true;
}

inline std::size_t algebra_hom_dimension(const ldual::ZFiniteAlgebra& a, const ldual::FinDimModule& m, const ldual::FinDimModule& n) {
    Grid stacked;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Grid g = commutator_map(m.action(i), n.action(i));
        stacked.insert(stacked.end(), g.begin(), g.end());
    }
    return m.dimension() * n.dimension() - rank(stacked);
}

// Ext^1 as derivations d : a -> Hom_k(m, n) with d(xy) = n(x) d(y) + d(x) m(y)
// modulo inner ones d(x) = n(x) X - X m(x).
inline std::size_t algebra_ext1_dimension(const ldual::ZFiniteAlgebra& a, const ldual::FinDimModule& m, const ldual::FinDimModule& n) {
    const Field f = a.field();
    const std::size_t r = a.size(), p = m.dimension(), q = n.dimension(), h = p * q;
    auto var = [&](std::size_t i, std::size_t row, std::size_t col) { return i * h + row * p + col; };
    Grid eqs;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t row = 0; row < q; ++row)
                for (std::size_t col = 0; col < p; ++col) {
                    std::vector<Scalar> e(r * h, f.zero());
                    for (std::size_t k = 0; k < r; ++k) e[var(k, row, col)] += a.constant(i, j, k).constant_term();
                    for (std::size_t k = 0; k < q; ++k) e[var(j, k, col)] -= n.action(i)(row, k);
                    for (std::size_t k = 0; k < p; ++k) e[var(i, row, k)] -= m.action(j)(k, col);
                    eqs.push_back(std::move(e));
                }
    const std::size_t derivations = r * h - rank(eqs);
    const std::size_t inner = h - algebra_hom_dimension(a, m, n);
    return derivations - inner;
}

}  // namespace oracle
