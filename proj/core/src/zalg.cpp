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

#include "ldual/zalg.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "ldual/errors.hpp"

namespace ldual {

std::string to_string(CenterKind k) {
    switch (k) {
        case CenterKind::field: return "field";
        case CenterKind::laurent: return "laurent";
        case CenterKind::polynomial: return "polynomial";
    }
    return "field";
}

std::string to_string(FsgVerdict::Kind k) {
    switch (k) {
        case FsgVerdict::Kind::certified_yes: return "certified-yes";
        case FsgVerdict::Kind::certified_no: return "certified-no";
        case FsgVerdict::Kind::undetermined: return "undetermined";
    }
    return "undetermined";
}

bool CenterRing::contains(const LaurentElt& z) const {
    if (z.rank() != rank) return false;
    if (kind != CenterKind::polynomial) return true;
    for (const auto& [e, c] : z.terms())
        for (auto v : e)
            if (v < 0) return false;
    return true;
}

bool CenterRing::is_unit(const LaurentElt& z) const {
    if (z.is_zero()) return false;
    if (kind == CenterKind::laurent) return z.is_unit();
    return z.is_constant();
}

// ---------------------------------------------------------------------------

ZFiniteAlgebra::ZFiniteAlgebra(Field field, CenterRing center, std::vector<std::string> labels,
                               std::size_t unit, std::vector<std::vector<Elt>> constants)
    : field_(field), center_(std::move(center)), labels_(std::move(labels)), unit_(unit), c_(std::move(constants)) {
    const std::size_t r = labels_.size();
    if (r == 0) throw InvalidInput("algebra needs at least one basis element");
    if (unit_ >= r) throw InvalidInput("unit index out of range");
    if (center_.kind == CenterKind::field && center_.rank != 0) throw InvalidInput("a field center has rank 0");
    if (c_.size() != r) throw InvalidInput("structure constant table has the wrong size");
    std::vector<std::string> errors;
    for (std::size_t i = 0; i < r; ++i) {
        if (c_[i].size() != r) throw InvalidInput("structure constant table has the wrong size");
        for (std::size_t j = 0; j < r; ++j) {
            if (c_[i][j].size() != r) throw InvalidInput("structure constant table has the wrong size");
            for (auto& z : c_[i][j]) {
                if (z.rank() != center_.rank && z.is_zero()) z = LaurentElt(field_, center_.rank);
                if (z.field() != field_) throw FieldMismatch(z.field().name(), field_.name());
                if (!center_.contains(z))
                    errors.push_back("constant " + z.to_string(center_.variables) + " for " + labels_[i] + "*" +
                                     labels_[j] + " is not in the center ring");
            }
        }
    }
    for (std::size_t j = 0; j < r && errors.empty(); ++j) {
        if (c_[unit_][j] != basis_element(j)) errors.push_back("unit law fails on the left for " + labels_[j]);
        if (c_[j][unit_] != basis_element(j)) errors.push_back("unit law fails on the right for " + labels_[j]);
    }
    for (std::size_t i = 0; i < r && errors.empty(); ++i)
        for (std::size_t j = 0; j < r && errors.empty(); ++j)
            for (std::size_t l = 0; l < r; ++l) {
                // (b_i b_j) b_l vs b_i (b_j b_l)
                Elt left = zero(), right = zero();
                for (std::size_t m = 0; m < r; ++m) {
                    if (!c_[i][j][m].is_zero())
                        for (std::size_t n = 0; n < r; ++n)
                            if (!c_[m][l][n].is_zero()) left[n] += c_[i][j][m] * c_[m][l][n];
                    if (!c_[j][l][m].is_zero())
                        for (std::size_t n = 0; n < r; ++n)
                            if (!c_[i][m][n].is_zero()) right[n] += c_[j][l][m] * c_[i][m][n];
                }
                if (left != right) {
                    errors.push_back("associativity fails on (" + labels_[i] + ", " + labels_[j] + ", " + labels_[l] + ")");
                    break;
                }
            }
    if (!errors.empty()) {
        std::string msg;
        for (const auto& e : errors) msg += (msg.empty() ? "" : "; ") + e;
        throw InvalidInput(msg);
    }
}

ZFiniteAlgebra::Elt ZFiniteAlgebra::zero() const { return Elt(size(), LaurentElt(field_, center_.rank)); }

ZFiniteAlgebra::Elt ZFiniteAlgebra::basis_element(std::size_t i) const {
    Elt e = zero();
    e[i] = LaurentElt::constant(field_, center_.rank, field_.one());
    return e;
}

ZFiniteAlgebra::Elt ZFiniteAlgebra::multiply(const Elt& x, const Elt& y) const {
    const std::size_t r = size();
    Elt out = zero();
    for (std::size_t i = 0; i < r; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (y[j].is_zero()) continue;
            const LaurentElt xy = x[i] * y[j];
            for (std::size_t m = 0; m < r; ++m)
                if (!c_[i][j][m].is_zero()) out[m] += xy * c_[i][j][m];
        }
    }
    return out;
}

ZFiniteAlgebra::Elt ZFiniteAlgebra::add(const Elt& x, const Elt& y) const {
    Elt out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
    return out;
}

ZFiniteAlgebra::Elt ZFiniteAlgebra::scale(const LaurentElt& z, const Elt& x) const {
    Elt out = x;
    for (auto& v : out) v = z * v;
    return out;
}

LaurentMatrix ZFiniteAlgebra::left_regular(std::size_t i) const {
    const std::size_t r = size();
    LaurentMatrix L(field_, center_.rank, r, r);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t m = 0; m < r; ++m) L(m, k) = c_[i][k][m];
    return L;
}

LaurentMatrix ZFiniteAlgebra::right_regular(std::size_t i) const {
    const std::size_t r = size();
    LaurentMatrix R(field_, center_.rank, r, r);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t m = 0; m < r; ++m) R(m, k) = c_[k][i][m];
    return R;
}

LaurentElt ZFiniteAlgebra::regular_trace(const Elt& x) const {
    LaurentElt t(field_, center_.rank);
    for (std::size_t i = 0; i < size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t k = 0; k < size(); ++k)
            if (!c_[i][k][k].is_zero()) t += x[i] * c_[i][k][k];
    }
    return t;
}

namespace {

Matrix constant_matrix(const LaurentMatrix& m) {
    Matrix out(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!m(r, c).is_constant()) throw InvalidInput("structure constant is not a scalar");
            out(r, c) = m(r, c).constant_term();
        }
    return out;
}

void require_field_center(const ZFiniteAlgebra& a) {
    if (a.center().kind != CenterKind::field) throw InvalidInput("operation needs an algebra with center k");
}

}  // namespace

Matrix ZFiniteAlgebra::left_regular_k(std::size_t i) const { return constant_matrix(left_regular(i)); }
Matrix ZFiniteAlgebra::right_regular_k(std::size_t i) const { return constant_matrix(right_regular(i)); }

ZFiniteAlgebra ZFiniteAlgebra::specialize(const std::vector<Scalar>& values) const {
    if (values.size() != center_.rank) throw InvalidInput("specialization needs one value per center variable");
    auto c = c_;
    for (auto& row : c)
        for (auto& e : row)
            for (auto& z : e) z = LaurentElt::constant(field_, 0, z.evaluate(values));
    return ZFiniteAlgebra(field_, CenterRing{}, labels_, unit_, std::move(c));
}

bool ZFiniteAlgebra::is_central(const Elt& z) const {
    for (std::size_t i = 0; i < size(); ++i) {
        const Elt b = basis_element(i);
        if (multiply(z, b) != multiply(b, z)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

FinDimModule::FinDimModule(const ZFiniteAlgebra& a, std::size_t dimension, std::vector<Matrix> actions)
    : field_(a.field()), dim_(dimension), actions_(std::move(actions)) {
    require_field_center(a);
    const std::size_t r = a.size();
    if (actions_.size() != r) throw InvalidInput("module needs one action matrix per basis element");
    for (const auto& m : actions_)
        if (m.rows() != dim_ || m.cols() != dim_) throw InvalidInput("action matrix has the wrong size");
    if (actions_[a.unit_index()] != Matrix::identity(field_, dim_)) throw InvalidInput("unit does not act as identity");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Matrix rhs(field_, dim_, dim_);
            for (std::size_t m = 0; m < r; ++m) {
                const LaurentElt& c = a.constant(i, j, m);
                if (!c.is_zero()) rhs += c.constant_term() * actions_[m];
            }
            if (actions_[i] * actions_[j] != rhs)
                throw InvalidInput("action violates the product " + a.labels()[i] + "*" + a.labels()[j]);
        }
}

FinDimModule free_module(const ZFiniteAlgebra& a, std::size_t copies) {
    const std::size_t r = a.size();
    std::vector<Matrix> actions;
    for (std::size_t i = 0; i < r; ++i) {
        const Matrix L = a.left_regular_k(i);
        Matrix big(a.field(), r * copies, r * copies);
        for (std::size_t k = 0; k < copies; ++k)
            for (std::size_t x = 0; x < r; ++x)
                for (std::size_t y = 0; y < r; ++y) big(k * r + x, k * r + y) = L(x, y);
        actions.push_back(std::move(big));
    }
    return FinDimModule(a, r * copies, std::move(actions));
}

Matrix radical_basis(const ZFiniteAlgebra& a) {
    require_field_center(a);
    const std::size_t r = a.size();
    Matrix g(a.field(), r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            g(i, j) = a.regular_trace(a.multiply(a.basis_element(i), a.basis_element(j))).constant_term();
    return nullspace(g.transpose());
}

namespace {

Field field_of(const ZFiniteAlgebra& a) { return a.field(); }

Matrix combine_actions(const FinDimModule& m, const Matrix& coeffs, std::size_t col) {
    Matrix out(m.field(), m.dimension(), m.dimension());
    for (std::size_t i = 0; i < m.actions().size(); ++i)
        if (!coeffs(i, col).is_zero()) out += coeffs(i, col) * m.action(i);
    return out;
}

/// Vectors whose images span m / rad(a) m.
Matrix top_generators(const ZFiniteAlgebra& a, const FinDimModule& m) {
    const Field f = m.field();
    const std::size_t n = m.dimension();
    const Matrix J = radical_basis(a);
    Matrix jm(f, n, 0);
    for (std::size_t c = 0; c < J.cols(); ++c) jm = hconcat(jm, combine_actions(m, J, c));
    const Subquotient top(Matrix::identity(f, n), jm);
    return top.representatives();
}

/// Cover a^g -> m sending the unit of copy k to generator k.
Matrix cover_map(const ZFiniteAlgebra& a, const FinDimModule& m, const Matrix& gens) {
    const std::size_t r = a.size();
    Matrix pi(m.field(), m.dimension(), r * gens.cols());
    for (std::size_t k = 0; k < gens.cols(); ++k) {
        const Matrix g = gens.column(k);
        for (std::size_t i = 0; i < r; ++i) {
            const Matrix img = m.action(i) * g;
            for (std::size_t x = 0; x < m.dimension(); ++x) pi(x, k * r + i) = img(x, 0);
        }
    }
    return pi;
}

Matrix vec(const Matrix& m) {
    Matrix v(m.field(), m.rows() * m.cols(), 1);
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) v(c * m.rows() + r, 0) = m(r, c);
    return v;
}

Matrix stack(const std::vector<Matrix>& ms, Field f, std::size_t rows) {
    Matrix out(f, rows, ms.size());
    for (std::size_t k = 0; k < ms.size(); ++k) {
        const Matrix v = vec(ms[k]);
        for (std::size_t r = 0; r < rows; ++r) out(r, k) = v(r, 0);
    }
    return out;
}

/// Hom_a(src, dst) with a coordinate solver.
struct HomSpace {
    std::vector<Matrix> basis;
    Matrix stacked;
    std::size_t rows = 0, cols = 0;

    HomSpace(const FinDimModule& src, const FinDimModule& dst)
        : basis(intertwiners(src.actions(), dst.actions(), src.dimension(), dst.dimension(), src.field())),
          rows(dst.dimension()), cols(src.dimension()) {
        stacked = stack(basis, src.field(), rows * cols);
    }
    std::size_t dim() const { return basis.size(); }
    /// Coordinates (columns) of the given maps.
    Matrix coordinates(const std::vector<Matrix>& maps, Field f) const {
        if (maps.empty()) return Matrix(f, dim(), 0);
        if (dim() == 0) return Matrix(f, 0, maps.size());
        auto x = solve(stacked, stack(maps, f, rows * cols));
        if (!x) throw Error("map is not a module homomorphism");
        return *x;
    }
    Matrix element(const Matrix& coords, std::size_t col, Field f) const {
        Matrix out(f, rows, cols);
        for (std::size_t k = 0; k < dim(); ++k)
            if (!coords(k, col).is_zero()) out += coords(k, col) * basis[k];
        return out;
    }
};

std::optional<Matrix> find_splitting(const ZFiniteAlgebra& a, const FinDimModule& m, const Matrix& pi,
                                     std::size_t copies) {
    const Field f = m.field();
    const std::size_t n = m.dimension();
    const FinDimModule F = free_module(a, copies);
    const HomSpace hom(m, F);
    if (hom.dim() == 0) return std::nullopt;
    std::vector<Matrix> composites;
    for (const auto& s : hom.basis) composites.push_back(pi * s);
    const auto c = solve(stack(composites, f, n * n), vec(Matrix::identity(f, n)));
    if (!c) return std::nullopt;
    return hom.element(*c, 0, f);
}

FinDimModule submodule(const ZFiniteAlgebra& a, const FinDimModule& m, const Matrix& basis) {
    const Field f = m.field();
    const Subquotient sq(basis, Matrix(f, m.dimension(), 0));
    std::vector<Matrix> actions;
    for (const auto& act : m.actions()) actions.push_back(sq.induced(act));
    return FinDimModule(a, sq.dimension(), std::move(actions));
}

std::size_t rank_of(const Matrix& m) { return m.rows() && m.cols() ? rank(m) : 0; }

}  // namespace

ProjectiveResolution free_resolution(const ZFiniteAlgebra& a, const FinDimModule& m, std::size_t bound) {
    require_field_center(a);
    if (bound < 1) throw InvalidInput("resolution bound must be at least 1");
    const Field f = field_of(a);
    const std::size_t r = a.size();
    ProjectiveResolution res;
    FinDimModule current = m;
    Matrix inclusion = Matrix::identity(f, m.dimension());  // current -> previous term (or M)
    for (std::size_t s = 0;; ++s) {
        if (current.dimension() == 0) {
            if (s == 0) {
                res.terms.push_back(current);
                res.covers.push_back(Matrix(f, 0, 0));
                res.splittings.push_back(Matrix(f, 0, 0));
                res.generator_counts.push_back(0);
                res.augmentation = Matrix(f, 0, 0);
            }
            break;
        }
        const Matrix gens = top_generators(a, current);
        const std::size_t g = gens.cols();
        const Matrix pi = cover_map(a, current, gens);
        if (auto split = find_splitting(a, current, pi, g)) {
            res.terms.push_back(current);
            res.covers.push_back(pi);
            res.splittings.push_back(*split);
            res.generator_counts.push_back(g);
            if (s == 0) res.augmentation = Matrix::identity(f, m.dimension());
            else res.maps.push_back(inclusion);
            break;
        }
        res.terms.push_back(free_module(a, g));
        res.covers.push_back(Matrix::identity(f, r * g));
        res.splittings.push_back(Matrix::identity(f, r * g));
        res.generator_counts.push_back(g);
        if (s == 0) res.augmentation = pi;
        else res.maps.push_back(inclusion * pi);
        const Matrix kernel = nullspace(pi);
        if (kernel.cols() == 0) break;
        if (s == bound) {
            res.truncated = true;
            break;
        }
        current = submodule(a, res.terms.back(), kernel);
        inclusion = kernel;
    }
    return res;
}

namespace {

/// dim H at the middle of  X --u--> Y --v--> W  given as ranks.
std::size_t middle_dim(std::size_t dim_y, std::size_t rank_in, std::size_t rank_out) {
    return dim_y - rank_in - rank_out;
}

/// Ranks of precomposition F -> F o d over a Hom basis, measured in the
/// ambient matrix space.
std::size_t precompose_rank(const HomSpace& hom, const Matrix& d, Field f) {
    std::vector<Matrix> imgs;
    for (const auto& b : hom.basis) imgs.push_back(b * d);
    if (imgs.empty()) return 0;
    return rank_of(stack(imgs, f, hom.rows * d.cols()));
}

std::size_t postcompose_rank(const HomSpace& hom, const Matrix& d, Field f) {
    std::vector<Matrix> imgs;
    for (const auto& b : hom.basis) imgs.push_back(d * b);
    if (imgs.empty()) return 0;
    return rank_of(stack(imgs, f, d.rows() * hom.cols));
}

bool absolutely_simple(const FinDimModule& m) {
    const std::size_t n = m.dimension();
    if (n == 0) return false;
    return rank_of(stack(m.actions(), m.field(), n * n)) == n * n;
}

}  // namespace

std::vector<std::size_t> ext_dimensions(const ZFiniteAlgebra& a, const FinDimModule& m, const FinDimModule& n,
                                        std::size_t bound) {
    const Field f = field_of(a);
    const auto res = free_resolution(a, m, bound);
    const std::size_t len = res.length();
    std::vector<HomSpace> homs;
    for (const auto& p : res.terms) homs.emplace_back(p, n);
    std::vector<std::size_t> rk(len + 2, 0);  // rk[i] = rank of Hom(P_{i-1}) -> Hom(P_i)
    for (std::size_t i = 1; i <= len; ++i) rk[i] = precompose_rank(homs[i - 1], res.maps[i - 1], f);
    const std::size_t valid = res.truncated ? len : len + 1;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < valid; ++i) out.push_back(middle_dim(homs[i].dim(), rk[i], rk[i + 1]));
    return out;
}

namespace {

struct NakayamaData {
    ProjectiveResolution res;
    std::vector<HomSpace> duals;  // Hom_a(P_p, a)
    NakayamaComplex complex;
};

NakayamaData build_nakayama(const ZFiniteAlgebra& a, const FinDimModule& m, std::size_t bound) {
    const Field f = field_of(a);
    const std::size_t r = a.size();
    NakayamaData data{free_resolution(a, m, bound), {}, {}};
    if (data.res.truncated)
        throw InvalidInput("resolution truncated at bound " + std::to_string(bound) +
                           "; the Nakayama dual is undefined for this input at this bound");
    const FinDimModule reg = free_module(a, 1);
    std::vector<Matrix> right;
    for (std::size_t j = 0; j < r; ++j) right.push_back(a.right_regular_k(j));
    for (const auto& p : data.res.terms) {
        data.duals.emplace_back(p, reg);
        const HomSpace& hom = data.duals.back();
        std::vector<Matrix> actions;
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<Matrix> imgs;
            for (const auto& b : hom.basis) imgs.push_back(right[j] * b);
            actions.push_back(hom.coordinates(imgs, f).transpose());
        }
        data.complex.terms.emplace_back(a, hom.dim(), std::move(actions));
    }
    for (std::size_t p = 0; p + 1 < data.res.terms.size(); ++p) {
        std::vector<Matrix> imgs;
        for (const auto& b : data.duals[p].basis) imgs.push_back(b * data.res.maps[p]);
        data.complex.maps.push_back(data.duals[p + 1].coordinates(imgs, f).transpose());
    }
    const std::size_t len = data.res.length();
    for (std::size_t p = 0; p <= len; ++p) {
        const std::size_t dim = data.complex.terms[p].dimension();
        const Matrix cycles = p > 0 ? nullspace(data.complex.maps[p - 1]) : Matrix::identity(f, dim);
        const Matrix bounds = p < len ? data.complex.maps[p] : Matrix(f, dim, 0);
        const Subquotient sq(cycles, bounds);
        std::vector<Matrix> actions;
        for (const auto& act : data.complex.terms[p].actions()) actions.push_back(sq.induced(act));
        data.complex.cohomology.emplace(-static_cast<int>(p), FinDimModule(a, sq.dimension(), std::move(actions)));
    }
    return data;
}

/// Hom_a(n, C) as a complex: spaces Y_p = Hom(n, C^{-p}) with Y_p -> Y_{p-1}.
std::vector<std::size_t> hom_into_complex_dims(const NakayamaComplex& c, const FinDimModule& n, Field f) {
    const std::size_t len = c.terms.size() - 1;
    std::vector<HomSpace> ys;
    for (const auto& t : c.terms) ys.emplace_back(n, t);
    std::vector<std::size_t> out_rank(len + 1, 0);  // rank of Y_p -> Y_{p-1}
    for (std::size_t p = 1; p <= len; ++p) out_rank[p] = postcompose_rank(ys[p], c.maps[p - 1], f);
    std::vector<std::size_t> dims;
    for (std::size_t p = 0; p <= len; ++p) {
        const std::size_t in = p < len ? out_rank[p + 1] : 0;
        dims.push_back(middle_dim(ys[p].dim(), in, out_rank[p]));
    }
    return dims;
}

/// H^{-i} of Tot Hom(Q, C) for a resolution Q of n.
std::vector<std::size_t> total_complex_dims(const ZFiniteAlgebra& a, const NakayamaComplex& c,
                                            const ProjectiveResolution& q, Field f) {
    (void)a;
    const int plen = static_cast<int>(c.terms.size()) - 1;
    const int qlen = static_cast<int>(q.terms.size()) - 1;
    // W(qq, p) = Hom(Q_qq, C^{-p}), total degree qq - p
    std::map<std::pair<int, int>, HomSpace> w;
    for (int qq = 0; qq <= qlen; ++qq)
        for (int p = 0; p <= plen; ++p) w.emplace(std::pair{qq, p}, HomSpace(q.terms[qq], c.terms[p]));
    auto total_dim = [&](int deg) {
        std::size_t s = 0;
        for (const auto& [key, h] : w)
            if (key.first - key.second == deg) s += h.dim();
        return s;
    };
    // offsets of the ambient (matrix space) for degree deg
    auto differential_rank = [&](int deg) -> std::size_t {
        std::vector<std::pair<int, int>> src, dst;
        for (const auto& [key, h] : w) {
            if (key.first - key.second == deg) src.push_back(key);
            if (key.first - key.second == deg + 1) dst.push_back(key);
        }
        std::map<std::pair<int, int>, std::size_t> offset;
        std::size_t ambient = 0;
        for (const auto& key : dst) {
            offset[key] = ambient;
            ambient += q.terms[key.first].dimension() * c.terms[key.second].dimension();
        }
        std::size_t ncols = 0;
        for (const auto& key : src) ncols += w.at(key).dim();
        if (ncols == 0 || ambient == 0) return 0;
        Matrix big(f, ambient, ncols);
        std::size_t col = 0;
        const Scalar sign = (deg % 2 == 0) ? -f.one() : f.one();  // -(-1)^deg
        for (const auto& key : src) {
            const auto [qq, p] = key;
            for (const auto& g : w.at(key).basis) {
                if (p >= 1) {
                    const Matrix img = c.maps[p - 1] * g;
                    const Matrix v = vec(img);
                    const std::size_t off = offset.at({qq, p - 1});
                    for (std::size_t k = 0; k < v.rows(); ++k) big(off + k, col) += v(k, 0);
                }
                if (qq + 1 <= qlen) {
                    const Matrix img = g * q.maps[qq];
                    const Matrix v = vec(img);
                    const std::size_t off = offset.at({qq + 1, p});
                    for (std::size_t k = 0; k < v.rows(); ++k) big(off + k, col) += sign * v(k, 0);
                }
                ++col;
            }
        }
        return rank_of(big);
    };
    std::vector<std::size_t> out;
    for (int i = 0; i <= plen; ++i) {
        const int deg = -i;
        out.push_back(total_dim(deg) - differential_rank(deg) - differential_rank(deg - 1));
    }
    return out;
}

}  // namespace

NakayamaComplex nakayama_dual(const ZFiniteAlgebra& a, const FinDimModule& m, std::size_t bound) {
    require_field_center(a);
    return build_nakayama(a, m, bound).complex;
}

Report verify_serre_pairing(const ZFiniteAlgebra& a, const FinDimModule& m, const FinDimModule& n,
                            std::size_t bound) {
    require_field_center(a);
    const Field f = field_of(a);
    const std::size_t r = a.size();
    Report rep;
    rep.suite = "serre-pairing";
    const NakayamaData nak = build_nakayama(a, m, bound);
    const auto qres = free_resolution(a, n, bound);
    if (qres.truncated)
        throw InvalidInput("resolution of the second module truncated at bound " + std::to_string(bound));
    const auto& P = nak.res;
    const auto& C = nak.complex;
    const std::size_t len = P.length();

    std::vector<HomSpace> homs;  // Hom(P_i, n)
    for (const auto& p : P.terms) homs.emplace_back(p, n);
    std::vector<HomSpace> ys;  // Hom(n, C^{-p})
    for (const auto& t : C.terms) ys.emplace_back(n, t);

    const auto hom_dims = hom_into_complex_dims(C, n, f);
    const auto tot_dims = total_complex_dims(a, C, qres, f);

    for (std::size_t i = 0; i <= len; ++i) {
        const std::string tag = "degree-" + std::to_string(i);
        // Ext^i(m, n): cocycles and coboundaries in coordinates of Hom(P_i, n)
        Matrix cycles;
        if (i < len) {
            std::vector<Matrix> imgs;
            for (const auto& b : homs[i].basis) imgs.push_back(b * P.maps[i]);
            cycles = imgs.empty() ? Matrix(f, 0, 0) : nullspace(stack(imgs, f, n.dimension() * P.terms[i + 1].dimension()));
        } else {
            cycles = Matrix::identity(f, homs[i].dim());
        }
        Matrix bounds(f, homs[i].dim(), 0);
        if (i > 0) {
            std::vector<Matrix> imgs;
            for (const auto& b : homs[i - 1].basis) imgs.push_back(b * P.maps[i - 1]);
            bounds = homs[i].coordinates(imgs, f);
        }
        if (cycles.rows() != homs[i].dim()) cycles = Matrix(f, homs[i].dim(), 0);
        const Subquotient ext(cycles, bounds);

        // Hom_D(n, C[-i]) in coordinates of Y_i
        Matrix ycycles;
        if (i > 0) {
            std::vector<Matrix> imgs;
            for (const auto& g : ys[i].basis) imgs.push_back(C.maps[i - 1] * g);
            ycycles = imgs.empty() ? Matrix(f, 0, 0)
                                   : nullspace(stack(imgs, f, C.terms[i - 1].dimension() * n.dimension()));
        } else {
            ycycles = Matrix::identity(f, ys[i].dim());
        }
        if (ycycles.rows() != ys[i].dim()) ycycles = Matrix(f, ys[i].dim(), 0);
        Matrix ybounds(f, ys[i].dim(), 0);
        if (i < len) {
            std::vector<Matrix> imgs;
            for (const auto& g : ys[i + 1].basis) imgs.push_back(C.maps[i] * g);
            ybounds = ys[i].coordinates(imgs, f);
        }
        const Subquotient hom_side(ycycles, ybounds);

        auto& dim_check = rep.check(tag + "-dimensions", "serre-functor-duality",
                                    ext.dimension() == hom_side.dimension() && hom_side.dimension() == hom_dims[i],
                                    "dim Ext^" + std::to_string(i) + "(M,N) = " + std::to_string(ext.dimension()) +
                                        ", dim Hom(N, nu M[" + std::to_string(-static_cast<int>(i)) + "]) = " +
                                        std::to_string(hom_side.dimension()));
        dim_check.witness.emplace_back("ext_dimension", std::to_string(ext.dimension()));
        dim_check.witness.emplace_back("hom_dimension", std::to_string(hom_side.dimension()));
        rep.check(tag + "-total-complex", "serre-functor-duality", tot_dims[i] == hom_side.dimension(),
                  "total complex gives " + std::to_string(tot_dims[i]));

        // composition pairing into Hom(P_i, nu P_i), then the dual-basis trace
        const Matrix& cover = P.covers[i];
        const Matrix& split = P.splittings[i];
        const std::size_t g = P.generator_counts[i];
        const HomSpace& pdual = nak.duals[i];
        std::vector<Matrix> gens, functionals;
        for (std::size_t k = 0; k < g; ++k) {
            gens.push_back(cover.column(k * r + a.unit_index()));
            functionals.push_back(split.block(k * r, 0, r, P.terms[i].dimension()));
        }
        const Matrix fcoords = pdual.coordinates(functionals, f);
        const std::size_t de = ext.dimension(), dh = hom_side.dimension();
        Matrix pairing(f, de, dh);
        for (std::size_t x = 0; x < de; ++x) {
            const Matrix F = homs[i].element(ext.representatives(), x, f);
            for (std::size_t y = 0; y < dh; ++y) {
                const Matrix G = ys[i].element(hom_side.representatives(), y, f);
                const Matrix H = G * F;
                Scalar t = f.zero();
                for (std::size_t k = 0; k < g; ++k) {
                    const Matrix hp = H * gens[k];
                    for (std::size_t l = 0; l < pdual.dim(); ++l) t += hp(l, 0) * fcoords(l, k);
                }
                pairing(x, y) = t;
            }
        }
        const std::size_t pr = rank_of(pairing);
        auto& pc = rep.check(tag + "-pairing-rank", "perfect-serre-pairing", pr == de && pr == dh,
                             "pairing rank " + std::to_string(pr));
        pc.witness.emplace_back("pairing", pairing.to_strings());
    }

    if (absolutely_simple(m)) {
        const auto self = hom_into_complex_dims(C, m, f);
        rep.check("schur-count", "schur-lemma-for-nakayama", self[0] == 1,
                  "dim Hom(M, nu M) = " + std::to_string(self[0]));
    }
    return rep;
}

// ---------------------------------------------------------------------------

HomCenter hom_center(const ZFiniteAlgebra& a) {
    const std::size_t r = a.size();
    const std::size_t e = a.center().rank;
    HomCenter out;
    out.rank = r;
    for (std::size_t i = 0; i < r; ++i) {
        LaurentMatrix L(a.field(), e, r, r), R(a.field(), e, r, r);
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < r; ++j) {
                L(k, j) = a.constant(k, i, j);
                R(k, j) = a.constant(i, k, j);
            }
        out.left.push_back(std::move(L));
        out.right.push_back(std::move(R));
    }
    out.double_dual_matches = true;
    for (std::size_t i = 0; i < r; ++i)
        if (out.right[i].transpose() != a.left_regular(i)) out.double_dual_matches = false;
    return out;
}

namespace {

LaurentMatrix gram_of(const ZFiniteAlgebra& a, const std::vector<LaurentElt>& phi) {
    const std::size_t r = a.size();
    LaurentMatrix G(a.field(), a.center().rank, r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t m = 0; m < r; ++m)
                if (!phi[m].is_zero() && !a.constant(i, j, m).is_zero()) G(i, j) += a.constant(i, j, m) * phi[m];
    return G;
}

FsgVerdict probe_field(const ZFiniteAlgebra& a) {
    const Field f = a.field();
    const std::size_t r = a.size();
    FsgVerdict out;
    Matrix sys(f, r * r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t m = 0; m < r; ++m)
                sys(i * r + j, m) = a.constant(i, j, m).constant_term() - a.constant(j, i, m).constant_term();
    const Matrix sym = nullspace(sys);
    std::vector<Matrix> grams;
    for (std::size_t c = 0; c < sym.cols(); ++c) {
        Matrix g(f, r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t m = 0; m < r; ++m)
                    g(i, j) += a.constant(i, j, m).constant_term() * sym(m, c);
        grams.push_back(std::move(g));
    }
    const auto search = find_invertible_in_span(grams, r, f);
    out.certificate = "symmetric forms: " + std::to_string(sym.cols()) + " dimensional; " + search.certificate;
    out.candidates_tested = sym.cols();
    switch (search.verdict) {
        case InvertibleSearch::Verdict::found: {
            out.kind = FsgVerdict::Kind::certified_yes;
            std::vector<LaurentElt> phi;
            for (std::size_t m = 0; m < r; ++m) {
                Scalar v = f.zero();
                for (std::size_t c = 0; c < sym.cols(); ++c) v += search.combination[c] * sym(m, c);
                phi.push_back(LaurentElt::constant(f, 0, v));
            }
            out.gram = gram_of(a, phi);
            out.determinant = determinant(*out.gram);
            out.functional = std::move(phi);
            break;
        }
        case InvertibleSearch::Verdict::none_exact: out.kind = FsgVerdict::Kind::certified_no; break;
        case InvertibleSearch::Verdict::none_sampled: out.kind = FsgVerdict::Kind::undetermined; break;
    }
    return out;
}

struct Candidate {
    std::vector<LaurentElt> phi;
    bool symmetric = false;
    bool unit = false;
};

Candidate evaluate_candidate(const ZFiniteAlgebra& a, std::vector<LaurentElt> phi) {
    Candidate c;
    const LaurentMatrix G = gram_of(a, phi);
    c.symmetric = G == G.transpose();
    c.unit = a.center().is_unit(determinant(G));
    c.phi = std::move(phi);
    return c;
}

}  // namespace

FsgVerdict fsg_probe(const ZFiniteAlgebra& a, int box, std::size_t threads) {
    if (a.center().kind == CenterKind::field) return probe_field(a);
    const Field f = a.field();
    const std::size_t r = a.size();
    const std::size_t e = a.center().rank;
    if (box < 0) throw InvalidInput("search box must be non-negative");

    // coefficient options: +-y^lambda, lambda in the box
    std::vector<LaurentElt> options;
    {
        const int lo = a.center().kind == CenterKind::polynomial ? 0 : -box;
        Exponent lambda(e, lo);
        while (true) {
            options.push_back(LaurentElt::monomial(f, lambda, f.one()));
            options.push_back(LaurentElt::monomial(f, lambda, -f.one()));
            std::size_t v = 0;
            while (v < e) {
                if (++lambda[v] <= box) break;
                lambda[v] = lo;
                ++v;
            }
            if (v == e) break;
        }
        std::stable_sort(options.begin(), options.end(), [](const LaurentElt& x, const LaurentElt& y) {
            auto weight = [](const LaurentElt& z) {
                std::int64_t w = 0;
                for (auto v : z.terms().begin()->first) w += v < 0 ? -v : v;
                return w;
            };
            return weight(x) < weight(y);
        });
    }

    // candidates ordered by support size, then support, then coefficient choice
    std::vector<std::vector<LaurentElt>> candidates;
    const std::size_t limit = 200000;
    for (std::size_t support = 1; support <= r && candidates.size() < limit; ++support) {
        std::vector<std::size_t> idx(support);
        for (std::size_t k = 0; k < support; ++k) idx[k] = k;
        while (candidates.size() < limit) {
            std::vector<std::size_t> choice(support, 0);
            while (candidates.size() < limit) {
                std::vector<LaurentElt> phi(r, LaurentElt(f, e));
                for (std::size_t k = 0; k < support; ++k) phi[idx[k]] = options[choice[k]];
                candidates.push_back(std::move(phi));
                std::size_t k = 0;
                while (k < support && ++choice[k] == options.size()) choice[k++] = 0;
                if (k == support) break;
            }
            // next support subset
            std::size_t k = support;
            while (k > 0 && idx[k - 1] == r - support + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t l = k; l < support; ++l) idx[l] = idx[l - 1] + 1;
        }
    }

    FsgVerdict out;
    const std::size_t workers = std::max<std::size_t>(1, threads);
    const std::size_t chunk = 256;
    std::size_t next = 0;
    while (next < candidates.size()) {
        std::vector<std::future<std::vector<Candidate>>> jobs;
        for (std::size_t w = 0; w < workers && next < candidates.size(); ++w) {
            const std::size_t begin = next, end = std::min(candidates.size(), next + chunk);
            next = end;
            jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, [&, begin, end] {
                std::vector<Candidate> res;
                for (std::size_t k = begin; k < end; ++k) res.push_back(evaluate_candidate(a, candidates[k]));
                return res;
            }));
        }
        for (auto& job : jobs) {
            for (auto& cand : job.get()) {
                ++out.candidates_tested;
                if (!cand.unit) continue;
                if (!cand.symmetric) {
                    if (!out.frobenius_functional) out.frobenius_functional = cand.phi;
                    continue;
                }
                if (out.kind != FsgVerdict::Kind::certified_yes) {
                    out.kind = FsgVerdict::Kind::certified_yes;
                    out.gram = gram_of(a, cand.phi);
                    out.determinant = determinant(*out.gram);
                    out.functional = cand.phi;
                }
            }
        }
        if (out.kind == FsgVerdict::Kind::certified_yes) break;
    }
    std::ostringstream cert;
    if (out.kind == FsgVerdict::Kind::certified_yes) {
        cert << "symmetric form with unit Gram determinant after " << out.candidates_tested << " candidates";
    } else {
        cert << "no symmetric unit-determinant form among " << out.candidates_tested
             << " candidates with coefficients +-y^lambda, |lambda_i| <= " << box;
        if (out.frobenius_functional) cert << "; a non-symmetric unit-determinant form exists";
    }
    out.certificate = cert.str();
    return out;
}

}  // namespace ldual
