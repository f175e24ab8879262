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

#include "ldual/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "ldual/errors.hpp"
#include "ldual/parse.hpp"

namespace ldual {

std::vector<std::string> default_variables(std::size_t rank, const std::string& stem) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < rank; ++i) v.push_back(stem + std::to_string(i + 1));
    return v;
}

LaurentElt LaurentElt::constant(Field field, std::size_t rank, const Scalar& c) {
    LaurentElt r(field, rank);
    r.add_term(Exponent(rank, 0), c);
    return r;
}

LaurentElt LaurentElt::monomial(Field field, const Exponent& e, const Scalar& c) {
    LaurentElt r(field, e.size());
    r.add_term(e, c);
    return r;
}

LaurentElt LaurentElt::variable(Field field, std::size_t rank, std::size_t index) {
    Exponent e(rank, 0);
    e.at(index) = 1;
    return monomial(field, e, field.one());
}

LaurentElt LaurentElt::parse(std::string_view text, Field field, std::size_t rank,
                             std::span<const std::string> variables) {
    if (variables.size() != rank) throw ParseError("variable list does not match lattice rank");
    LaurentElt r(field, rank);
    r.terms_ = parse_expression(text, field, variables);
    return r;
}

LaurentElt LaurentElt::parse(std::string_view text, Field field, std::size_t rank) {
    const auto vars = default_variables(rank);
    return parse(text, field, rank, vars);
}

bool LaurentElt::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (auto v : terms_.begin()->first)
        if (v != 0) return false;
    return true;
}

Scalar LaurentElt::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
}

Scalar LaurentElt::constant_term() const { return coefficient(Exponent(rank_, 0)); }

void LaurentElt::add_term(const Exponent& e, const Scalar& c) {
    if (e.size() != rank_) throw InvalidInput("exponent length does not match lattice rank");
    if (c.field() != field_) throw FieldMismatch(c.field().name(), field_.name());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentElt::check_compatible(const LaurentElt& other) const {
    if (field_ != other.field_) throw FieldMismatch(field_.name(), other.field_.name());
    if (rank_ != other.rank_) throw InvalidInput("Laurent elements over different lattices");
}

LaurentElt LaurentElt::operator-() const {
    LaurentElt r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentElt& LaurentElt::operator+=(const LaurentElt& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentElt& LaurentElt::operator-=(const LaurentElt& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentElt operator*(const LaurentElt& a, const LaurentElt& b) {
    a.check_compatible(b);
    LaurentElt r(a.field_, a.rank_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
    return r;
}

LaurentElt operator*(const Scalar& s, const LaurentElt& a) {
    LaurentElt r(a.field_, a.rank_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    return r;
}

LaurentElt LaurentElt::shifted(const Exponent& shift) const {
    LaurentElt r(field_, rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(add_exponents(e, shift), c);
    return r;
}

LaurentElt LaurentElt::unit_inverse() const {
    if (!is_unit()) throw DivisionByZero();
    const auto& [e, c] = *terms_.begin();
    return monomial(field_, negate(e), c.inverse());
}

Matrix LaurentElt::evaluate(std::span<const Matrix> ops, std::size_t dim) const {
    if (ops.size() != rank_) throw InvalidInput("evaluate: operator count does not match rank");
    Matrix result(field_, dim, dim);
    std::vector<Matrix> inverses;
    for (const auto& op : ops) {
        auto inv = inverse(op);
        if (!inv) throw InvalidInput("evaluate: operator not invertible");
        inverses.push_back(*inv);
    }
    for (const auto& [e, c] : terms_) {
        Matrix m = Matrix::identity(field_, dim);
        for (std::size_t i = 0; i < rank_; ++i) {
            const Matrix& f = e[i] >= 0 ? ops[i] : inverses[i];
            for (std::int64_t k = 0; k < (e[i] >= 0 ? e[i] : -e[i]); ++k) m = m * f;
        }
        result += c * m;
    }
    return result;
}

Scalar LaurentElt::evaluate(std::span<const Scalar> values) const {
    if (values.size() != rank_) throw InvalidInput("evaluate: value count does not match rank");
    Scalar r = field_.zero();
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < rank_; ++i) t *= values[i].pow(e[i]);
        r += t;
    }
    return r;
}

std::string LaurentElt::to_string(std::span<const std::string> variables) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest exponents first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variables[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string coeff = c.to_string();
        const bool compound = !c.is_rational();
        bool negative = !compound && c.constant_term() < 0;
        if (negative) coeff = (-c).to_string();
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        first = false;
        if (mono.empty()) {
            os << (compound ? "(" + coeff + ")" : coeff);
        } else if (coeff == "1") {
            os << mono;
        } else {
            os << (compound ? "(" + coeff + ")" : coeff) << "*" << mono;
        }
    }
    return os.str();
}

std::string LaurentElt::to_string() const { return to_string(default_variables(rank_)); }

LaurentMatrix::LaurentMatrix(Field field, std::size_t rank, std::size_t rows, std::size_t cols)
    : field_(field), rank_(rank), rows_(rows), cols_(cols),
      data_(rows * cols, LaurentElt(field, rank)) {}

LaurentMatrix LaurentMatrix::identity(Field field, std::size_t rank, std::size_t n) {
    LaurentMatrix m(field, rank, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentElt::constant(field, rank, field.one());
    return m;
}

LaurentMatrix LaurentMatrix::from_scalar(const Matrix& s, std::size_t rank) {
    LaurentMatrix m(s.field(), rank, s.rows(), s.cols());
    for (std::size_t r = 0; r < s.rows(); ++r)
        for (std::size_t c = 0; c < s.cols(); ++c)
            if (!s(r, c).is_zero()) m(r, c) = LaurentElt::constant(s.field(), rank, s(r, c));
    return m;
}

LaurentMatrix LaurentMatrix::transpose() const {
    LaurentMatrix t(field_, rank_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool LaurentMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const LaurentElt& e) { return e.is_zero(); });
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("Laurent matrix product size mismatch");
    LaurentMatrix p(a.field_, a.rank_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("Laurent matrix size mismatch");
    LaurentMatrix s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
    return s;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("Laurent matrix size mismatch");
    LaurentMatrix s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
    return s;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<std::string>> LaurentMatrix::to_strings(
    std::span<const std::string> variables) const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c).to_string(variables));
    return out;
}

LaurentMatrix hconcat(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.rows() != b.rows()) throw InvalidInput("hconcat row mismatch");
    LaurentMatrix m(a.field(), a.rank(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
    }
    return m;
}

namespace {

LaurentElt laplace(const LaurentMatrix& m, std::vector<std::size_t>& rows,
                   std::vector<std::size_t>& cols) {
    const std::size_t n = rows.size();
    if (n == 0) return LaurentElt::constant(m.field(), m.rank(), m.field().one());
    // pick the row with the fewest nonzero entries among the live columns
    std::size_t best = 0, best_count = n + 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t cnt = 0;
        for (auto c : cols)
            if (!m(rows[i], c).is_zero()) ++cnt;
        if (cnt < best_count) {
            best_count = cnt;
            best = i;
        }
    }
    LaurentElt det(m.field(), m.rank());
    if (best_count == 0) return det;
    const std::size_t row = rows[best];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const std::size_t col = cols[j];
        if (m(row, col).is_zero()) continue;
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
        LaurentElt minor = laplace(m, rows, cols);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(j), col);
        LaurentElt term = m(row, col) * minor;
        if ((best + j) % 2) det -= term;
        else det += term;
    }
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(best), row);
    return det;
}

}  // namespace

LaurentElt determinant(const LaurentMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    std::vector<std::size_t> rows(m.rows()), cols(m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = cols[i] = i;
    return laplace(m, rows, cols);
}

}  // namespace ldual
