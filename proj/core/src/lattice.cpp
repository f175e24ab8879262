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

#include "ldual/lattice.hpp"

#include <algorithm>

#include "ldual/errors.hpp"

namespace ldual {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw InvalidInput("ragged integer matrix");
        for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("integer matrix product size mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

std::vector<std::vector<long>> IntMatrix::to_longs() const {
    std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!(*this)(r, c).fits_slong_p()) throw Error("integer entry exceeds machine range");
            out[r][c] = (*this)(r, c).get_si();
        }
    return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row_dst -= q * row_src
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntSmithForm integer_smith_form(const IntMatrix& m) {
    IntSmithForm s;
    s.D = m;
    s.U = IntMatrix::identity(m.rows());
    s.V = IntMatrix::identity(m.cols());
    IntMatrix& D = s.D;
    const std::size_t nr = m.rows(), nc = m.cols();
    for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
        while (true) {
            // smallest nonzero |entry| in the trailing block
            std::size_t pr = nr, pc = nc;
            for (std::size_t r = t; r < nr; ++r)
                for (std::size_t c = t; c < nc; ++c)
                    if (D(r, c) != 0 && (pr == nr || abs(D(r, c)) < abs(D(pr, pc)))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == nr) return s.rank = t, s;
            swap_rows(D, t, pr);
            swap_rows(s.U, t, pr);
            swap_cols(D, t, pc);
            swap_cols(s.V, t, pc);
            bool clean = true;
            for (std::size_t r = t + 1; r < nr; ++r) {
                const mpz_class q = floor_div(D(r, t), D(t, t));
                row_axpy(D, r, t, q);
                row_axpy(s.U, r, t, q);
                if (D(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < nc; ++c) {
                const mpz_class q = floor_div(D(t, c), D(t, t));
                col_axpy(D, c, t, q);
                col_axpy(s.V, c, t, q);
                if (D(t, c) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the remaining block
            std::size_t bad = nr;
            for (std::size_t r = t + 1; r < nr && bad == nr; ++r)
                for (std::size_t c = t + 1; c < nc; ++c)
                    if (D(r, c) % D(t, t) != 0) {
                        bad = r;
                        break;
                    }
            if (bad == nr) break;
            row_axpy(D, t, bad, -1);
            row_axpy(s.U, t, bad, -1);
        }
        if (D(t, t) < 0) {
            for (std::size_t c = 0; c < nc; ++c) D(t, c) = -D(t, c);
            for (std::size_t c = 0; c < nr; ++c) s.U(t, c) = -s.U(t, c);
        }
        s.rank = t + 1;
    }
    return s;
}

IntMatrix hermite_form(const IntMatrix& m) {
    IntMatrix h = m;
    std::size_t piv_row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < h.cols() && piv_row < h.rows(); ++c) {
        while (true) {
            std::size_t best = h.rows();
            for (std::size_t r = piv_row; r < h.rows(); ++r)
                if (h(r, c) != 0 && (best == h.rows() || abs(h(r, c)) < abs(h(best, c)))) best = r;
            if (best == h.rows()) break;
            swap_rows(h, piv_row, best);
            bool done = true;
            for (std::size_t r = piv_row + 1; r < h.rows(); ++r) {
                if (h(r, c) == 0) continue;
                row_axpy(h, r, piv_row, floor_div(h(r, c), h(piv_row, c)));
                if (h(r, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h(piv_row, c) == 0) continue;
        if (h(piv_row, c) < 0)
            for (std::size_t k = 0; k < h.cols(); ++k) h(piv_row, k) = -h(piv_row, k);
        for (std::size_t r = 0; r < piv_row; ++r) row_axpy(h, r, piv_row, floor_div(h(r, c), h(piv_row, c)));
        pivot_cols.push_back(c);
        ++piv_row;
    }
    IntMatrix out(piv_row, h.cols());
    for (std::size_t r = 0; r < piv_row; ++r)
        for (std::size_t c = 0; c < h.cols(); ++c) out(r, c) = h(r, c);
    return out;
}

Scalar character_value(std::span<const Scalar> character, const Exponent& lambda) {
    if (character.size() != lambda.size()) throw InvalidInput("character rank mismatch");
    if (character.empty()) return Scalar();
    Scalar v = character.front().field().one();
    for (std::size_t j = 0; j < lambda.size(); ++j) v *= character[j].pow(lambda[j]);
    return v;
}

IntMatrix fixed_sublattice(const Lattice& lattice, std::span<const std::vector<Scalar>> characters) {
    const std::size_t d = lattice.rank;
    const std::size_t g = characters.size();
    if (g == 0) return IntMatrix::identity(d);
    // exponent congruences A lambda = 0 mod M
    IntMatrix A(g, d);
    long M = 0;
    for (std::size_t i = 0; i < g; ++i) {
        if (characters[i].size() != d) throw InvalidInput("character has wrong number of values");
        for (std::size_t j = 0; j < d; ++j) {
            auto root = as_root_of_unity(characters[i][j]);
            if (!root) throw InvalidInput("character value " + characters[i][j].to_string() +
                                          " is not a root of unity");
            M = root->ambient_order;
            A(i, j) = root->exponent;
        }
    }
    if (d == 0) return IntMatrix(0, 0);
    // integer kernel of [A | M*I] projected onto the first d coordinates
    IntMatrix B(g, d + g);
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < d; ++j) B(i, j) = A(i, j);
        B(i, d + i) = M;
    }
    const IntSmithForm snf = integer_smith_form(B);
    IntMatrix gens(B.cols() - snf.rank, d);
    for (std::size_t k = snf.rank; k < B.cols(); ++k)
        for (std::size_t j = 0; j < d; ++j) gens(k - snf.rank, j) = snf.V(j, k);
    IntMatrix h = hermite_form(gens);
    if (h.rows() != d) throw Error("fixed sublattice is not of full rank");
    return h;
}

std::vector<Exponent> coset_representatives(const IntMatrix& H) {
    const std::size_t d = H.rows();
    std::vector<Exponent> reps;
    Exponent cur(d, 0);
    std::vector<long> bound(d);
    for (std::size_t i = 0; i < d; ++i) bound[i] = H(i, i).get_si();
    while (true) {
        reps.push_back(cur);
        std::size_t pos = d;
        while (pos-- > 0) {
            if (++cur[pos] < bound[pos]) break;
            cur[pos] = 0;
        }
        if (pos == static_cast<std::size_t>(-1)) break;
    }
    return reps;
}

std::pair<Exponent, Exponent> reduce_modulo(const IntMatrix& H, const Exponent& lambda) {
    const std::size_t d = H.rows();
    std::vector<mpz_class> v(lambda.begin(), lambda.end());
    Exponent coords(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        const mpz_class q = floor_div(v[i], H(i, i));
        coords[i] = q.get_si();
        for (std::size_t j = 0; j < d; ++j) v[j] -= q * H(i, j);
    }
    Exponent rep(d);
    for (std::size_t j = 0; j < d; ++j) rep[j] = v[j].get_si();
    return {rep, coords};
}

mpz_class lattice_index(const IntMatrix& H) {
    mpz_class idx = 1;
    for (std::size_t i = 0; i < H.rows(); ++i) idx *= H(i, i);
    return idx;
}

}  // namespace ldual
