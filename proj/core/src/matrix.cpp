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

#include "ldual/matrix.hpp"

#include <random>

#include "ldual/errors.hpp"

namespace ldual {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw InvalidInput("ragged matrix rows");
        for (std::size_t c = 0; c < nc; ++c) {
            if (rows[r][c].field() != field)
                throw FieldMismatch(rows[r][c].field().name(), field.name());
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::column(std::size_t c) const { return columns(c, 1); }

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
    return block(0, first, rows_, count);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix size mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix size mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product size mismatch");
    Matrix p(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (!bkj.is_zero()) p(i, j) += aik * bkj;
            }
        }
    return p;
}

Matrix operator*(const Scalar& s, Matrix m) {
    for (auto& v : m.data_) v = s * v;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c).to_string());
    return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw InvalidInput("hconcat row mismatch");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
    }
    return m;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw InvalidInput("vconcat column mismatch");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (std::size_t r = 0; r < a.rows(); ++r) m(r, c) = a(r, c);
        for (std::size_t r = 0; r < b.rows(); ++r) m(a.rows() + r, c) = b(r, c);
    }
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
    return m;
}

Matrix embed(const Matrix& m, Field target) {
    Matrix out(target, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = embed(m(r, c), target);
    return out;
}

Echelon row_reduce(Matrix m) {
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
        const Scalar inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!m(row, c).is_zero()) m(row, c) = m(row, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Scalar f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Scalar determinant(Matrix m) {
    if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
    const Field f = m.field();
    Scalar det = f.one();
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col).is_zero()) ++piv;
        if (piv == n) return f.zero();
        if (piv != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(m(piv, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        const Scalar inv = m(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            const Scalar factor = m(r, col) * inv;
            for (std::size_t c = col; c < n; ++c)
                if (!m(col, c).is_zero()) m(r, c) -= factor * m(col, c);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) return std::nullopt;
    const std::size_t n = m.rows();
    Echelon e = row_reduce(hconcat(m, Matrix::identity(m.field(), n)));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    return e.reduced.block(0, n, n, n);
}

Matrix nullspace(const Matrix& m) {
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix ns(m.field(), m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        ns(fc, k) = m.field().one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) ns(e.pivots[r], k) = -e.reduced(r, fc);
    }
    return ns;
}

Matrix column_basis(const Matrix& m) {
    const Echelon e = row_reduce(m);
    Matrix b(m.field(), m.rows(), e.pivots.size());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        for (std::size_t r = 0; r < m.rows(); ++r) b(r, k) = m(r, e.pivots[k]);
    return b;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw InvalidInput("solve: row mismatch");
    const std::size_t n = a.cols();
    const Echelon e = row_reduce(hconcat(a, b));
    Matrix x(a.field(), n, b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= n) return std::nullopt;  // inconsistent row
        for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[r], c) = e.reduced(r, n + c);
    }
    return x;
}

Subquotient::Subquotient(const Matrix& sub, const Matrix& inner) {
    const Field f = sub.field();
    const std::size_t n = sub.rows();
    const Matrix inner_basis = inner.cols() ? column_basis(inner) : Matrix(f, n, 0);
    inner_dim_ = inner_basis.cols();
    const Matrix joint = inner_dim_ ? hconcat(inner_basis, sub) : sub;
    const Echelon e = row_reduce(joint);
    std::vector<std::size_t> extra;
    for (auto p : e.pivots)
        if (p >= inner_dim_) extra.push_back(p);
    reps_ = Matrix(f, n, extra.size());
    for (std::size_t k = 0; k < extra.size(); ++k)
        for (std::size_t r = 0; r < n; ++r) reps_(r, k) = joint(r, extra[k]);
    basis_ = inner_dim_ ? hconcat(inner_basis, reps_) : reps_;
}

Matrix Subquotient::coordinates(const Matrix& vectors) const {
    if (vectors.cols() == 0 || basis_.cols() == 0)
        return Matrix(vectors.field(), dimension(), vectors.cols());
    auto x = solve(basis_, vectors);
    if (!x) throw InvalidInput("vector outside the subquotient's ambient subspace");
    return x->block(inner_dim_, 0, dimension(), vectors.cols());
}

Matrix Subquotient::induced(const Matrix& op) const { return coordinates(op * reps_); }

std::vector<Matrix> intertwiners(std::span<const Matrix> from, std::span<const Matrix> to,
                                 std::size_t from_dim, std::size_t to_dim, Field field) {
    if (from.size() != to.size()) throw InvalidInput("intertwiners: operator count mismatch");
    const std::size_t unknowns = from_dim * to_dim;
    std::vector<Matrix> basis;
    if (unknowns == 0) return basis;
    // vec(P) index: row * from_dim + col
    const std::size_t eqs_per = to_dim * from_dim;
    Matrix sys(field, from.size() * eqs_per, unknowns);
    for (std::size_t k = 0; k < from.size(); ++k) {
        const Matrix& a = from[k];
        const Matrix& b = to[k];
        for (std::size_t i = 0; i < to_dim; ++i)
            for (std::size_t j = 0; j < from_dim; ++j) {
                const std::size_t eq = k * eqs_per + i * from_dim + j;
                // (P a)_{ij} = sum_l P_{il} a_{lj}
                for (std::size_t l = 0; l < from_dim; ++l)
                    if (!a(l, j).is_zero()) sys(eq, i * from_dim + l) += a(l, j);
                // (b P)_{ij} = sum_l b_{il} P_{lj}
                for (std::size_t l = 0; l < to_dim; ++l)
                    if (!b(i, l).is_zero()) sys(eq, l * from_dim + j) -= b(i, l);
            }
    }
    const Matrix ns = from.empty() ? Matrix::identity(field, unknowns) : nullspace(sys);
    for (std::size_t c = 0; c < ns.cols(); ++c) {
        Matrix p(field, to_dim, from_dim);
        for (std::size_t i = 0; i < to_dim; ++i)
            for (std::size_t j = 0; j < from_dim; ++j) p(i, j) = ns(i * from_dim + j, c);
        basis.push_back(std::move(p));
    }
    return basis;
}

namespace {

Matrix combine(std::span<const Matrix> basis, const std::vector<Scalar>& coeffs, std::size_t n,
               Field field) {
    Matrix m(field, n, n);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!coeffs[k].is_zero()) m += coeffs[k] * basis[k];
    return m;
}

bool has_common_kernel(std::span<const Matrix> basis, std::size_t n, Field field, bool left) {
    Matrix stacked(field, 0, n);
    for (const auto& b : basis) stacked = vconcat(stacked, left ? b.transpose() : b);
    return rank(stacked) < n;
}

}  // namespace

InvertibleSearch find_invertible_in_span(std::span<const Matrix> basis, std::size_t n, Field field,
                                         std::size_t grid_budget) {
    InvertibleSearch out;
    if (n == 0) {
        out.verdict = InvertibleSearch::Verdict::found;
        out.witness = Matrix(field, 0, 0);
        out.combination.assign(basis.size(), field.zero());
        out.certificate = "empty matrices";
        return out;
    }
    if (basis.empty()) {
        out.certificate = "span is zero";
        return out;
    }
    if (has_common_kernel(basis, n, field, false)) {
        out.certificate = "common right kernel vector";
        return out;
    }
    if (has_common_kernel(basis, n, field, true)) {
        out.certificate = "common left kernel vector";
        return out;
    }
    auto try_point = [&](const std::vector<Scalar>& coeffs) {
        Matrix m = combine(basis, coeffs, n, field);
        if (!determinant(m).is_zero()) {
            out.verdict = InvertibleSearch::Verdict::found;
            out.witness = std::move(m);
            out.combination = coeffs;
            out.certificate = "nonzero determinant at evaluation point";
            return true;
        }
        return false;
    };
    // Cheap deterministic points first: each basis element, then pseudo-random ones.
    for (std::size_t k = 0; k < basis.size(); ++k) {
        std::vector<Scalar> coeffs(basis.size(), field.zero());
        coeffs[k] = field.one();
        if (try_point(coeffs)) return out;
    }
    std::mt19937_64 rng(0x5eed1234abcdULL);
    std::uniform_int_distribution<long> dist(1, 1 << 20);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Scalar> coeffs;
        for (std::size_t k = 0; k < basis.size(); ++k) coeffs.push_back(field.from_int(dist(rng)));
        if (try_point(coeffs)) return out;
    }
    // Exhaustive grid {0..n}^s: a nonzero polynomial of degree <= n in each
    // variable cannot vanish on all of it.
    double grid = 1;
    for (std::size_t k = 0; k < basis.size(); ++k) grid *= static_cast<double>(n + 1);
    if (grid <= static_cast<double>(grid_budget)) {
        std::vector<std::size_t> idx(basis.size(), 0);
        while (true) {
            std::vector<Scalar> coeffs;
            for (auto v : idx) coeffs.push_back(field.from_int(static_cast<long>(v)));
            if (try_point(coeffs)) return out;
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] > n) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
        out.certificate = "determinant vanishes on the full evaluation grid";
        return out;
    }
    out.verdict = InvertibleSearch::Verdict::none_sampled;
    out.certificate = "determinant vanished at all sampled points";
    return out;
}

}  // namespace ldual
