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

#include "ldual/crossed.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ldual/dualities.hpp"
#include "ldual/errors.hpp"

namespace ldual {

CharacterGroup::CharacterGroup(Field field, std::size_t rank, std::vector<std::vector<Scalar>> elements)
    : field_(field), rank_(rank), elements_(std::move(elements)) {
    const std::size_t g = elements_.size();
    if (g == 0) throw InvalidInput("character group is empty");
    std::vector<std::string> errors;
    for (std::size_t i = 0; i < g; ++i) {
        if (elements_[i].size() != rank_)
            throw InvalidInput("character " + std::to_string(i) + " needs " + std::to_string(rank_) + " values");
        for (const auto& v : elements_[i]) {
            if (v.field() != field_) throw FieldMismatch(v.field().name(), field_.name());
            if (!as_root_of_unity(v)) errors.push_back("value " + v.to_string() + " is not a root of unity");
        }
    }
    if (!errors.empty()) throw InvalidInput(errors.front());
    auto find = [&](const std::vector<Scalar>& vals) -> std::size_t {
        for (std::size_t k = 0; k < g; ++k)
            if (elements_[k] == vals) return k;
        return g;
    };
    const std::vector<Scalar> trivial(rank_, field_.one());
    identity_ = find(trivial);
    if (identity_ == g) errors.push_back("trivial character missing");
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j)
            if (elements_[i] == elements_[j])
                errors.push_back("characters " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    table_.assign(g, std::vector<std::size_t>(g, 0));
    inverse_.assign(g, 0);
    for (std::size_t i = 0; i < g && errors.empty(); ++i) {
        std::vector<Scalar> inv;
        for (const auto& v : elements_[i]) inv.push_back(v.inverse());
        inverse_[i] = find(inv);
        if (inverse_[i] == g) errors.push_back("inverse of character " + std::to_string(i) + " missing");
        for (std::size_t j = 0; j < g; ++j) {
            std::vector<Scalar> prod;
            for (std::size_t k = 0; k < rank_; ++k) prod.push_back(elements_[i][k] * elements_[j][k]);
            table_[i][j] = find(prod);
            if (table_[i][j] == g)
                errors.push_back("product of characters " + std::to_string(i) + " and " + std::to_string(j) + " missing");
        }
    }
    if (!errors.empty()) {
        std::string msg;
        for (const auto& e : errors) msg += (msg.empty() ? "" : "; ") + e;
        throw InvalidInput(msg);
    }
}

Scalar CharacterGroup::evaluate(std::size_t i, const Exponent& lambda) const {
    return character_value(elements_[i], lambda);
}

Cocycle Cocycle::trivial(Field field, std::size_t order) {
    return Cocycle(std::vector<std::vector<Scalar>>(order, std::vector<Scalar>(order, field.one())));
}

std::vector<std::string> Cocycle::violations(const CharacterGroup& group) const {
    std::vector<std::string> out;
    const std::size_t g = group.size();
    if (table_.size() != g) return {"cocycle table has " + std::to_string(table_.size()) + " rows for a group of order " + std::to_string(g)};
    for (const auto& row : table_)
        if (row.size() != g) return {"cocycle table is not square"};
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            if (table_[i][j].is_zero()) out.push_back("c(" + std::to_string(i) + "," + std::to_string(j) + ") = 0");
    const std::size_t e = group.identity();
    for (std::size_t i = 0; i < g; ++i)
        if (!table_[e][i].is_one() || !table_[i][e].is_one())
            out.push_back("cocycle not normalized at " + std::to_string(i));
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b)
            for (std::size_t c = 0; c < g; ++c) {
                const Scalar lhs = table_[a][b] * table_[group.product(a, b)][c];
                const Scalar rhs = table_[b][c] * table_[a][group.product(b, c)];
                if (lhs != rhs)
                    out.push_back("cocycle identity fails on (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + ")");
            }
    return out;
}

// ---------------------------------------------------------------------------

CrossedElt CrossedAlgebra::e(const Exponent& lambda) const {
    return CrossedElt{{{lambda, group_.identity()}, field().one()}};
}

CrossedElt CrossedAlgebra::b(std::size_t chi) const {
    return CrossedElt{{{Exponent(lattice_.rank, 0), chi}, field().one()}};
}

CrossedElt CrossedAlgebra::multiply(const CrossedElt& x, const CrossedElt& y) const {
    CrossedElt out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            const auto& [l, chi] = kx;
            const auto& [m, psi] = ky;
            const Scalar c = cx * cy * group_.evaluate(chi, m) * cocycle_(chi, psi);
            auto key = std::pair{add_exponents(l, m), group_.product(chi, psi)};
            auto [it, inserted] = out.try_emplace(key, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

namespace {

CrossedElt add(CrossedElt x, const CrossedElt& y, const Scalar& s) {
    for (const auto& [k, c] : y) {
        auto [it, inserted] = x.try_emplace(k, s * c);
        if (!inserted) {
            it->second += s * c;
            if (it->second.is_zero()) x.erase(it);
        }
    }
    return x;
}

std::vector<Exponent> unit_box(std::size_t d) {
    // 0 and +-standard basis vectors
    std::vector<Exponent> out{Exponent(d, 0)};
    for (std::size_t j = 0; j < d; ++j)
        for (int s : {1, -1}) {
            Exponent e(d, 0);
            e[j] = s;
            out.push_back(e);
        }
    return out;
}

}  // namespace

CrossedAlgebra CrossedAlgebra::build(const Lattice& lattice, CharacterGroup group, Cocycle cocycle) {
    if (group.rank() != lattice.rank) throw InvalidInput("character group is for a different lattice rank");
    CrossedAlgebra r;
    r.lattice_ = lattice;
    r.group_ = std::move(group);
    r.cocycle_ = std::move(cocycle);
    std::vector<std::string> errors = r.cocycle_.violations(r.group_);
    if (errors.empty()) {
        r.center_basis_ = fixed_sublattice(lattice, r.group_.elements());
        r.reps_ = ldual::coset_representatives(r.center_basis_);
        // associativity on graded generators e_l b_chi, l in {0, +-e_j}
        std::vector<CrossedElt> gens;
        for (const auto& l : unit_box(lattice.rank))
            for (std::size_t chi = 0; chi < r.group_.size(); ++chi) gens.push_back(r.multiply(r.e(l), r.b(chi)));
        for (const auto& x : gens)
            for (const auto& y : gens)
                for (const auto& z : gens)
                    if (r.multiply(r.multiply(x, y), z) != r.multiply(x, r.multiply(y, z))) {
                        errors.push_back("associativity fails on " + to_string(x) + ", " + to_string(y) + ", " +
                                         to_string(z));
                        break;
                    }
    }
    if (!errors.empty()) {
        std::string msg;
        for (const auto& e : errors) msg += (msg.empty() ? "" : "; ") + e;
        throw InvalidInput(msg);
    }
    return r;
}

std::vector<std::pair<Exponent, std::size_t>> CrossedAlgebra::center_module_basis() const {
    std::vector<std::pair<Exponent, std::size_t>> out;
    for (const auto& rho : reps_)
        for (std::size_t chi = 0; chi < group_.size(); ++chi) out.emplace_back(rho, chi);
    return out;
}

std::vector<std::string> CrossedAlgebra::basis_labels() const {
    std::vector<std::string> out;
    for (const auto& [rho, chi] : center_module_basis()) {
        std::ostringstream os;
        os << "e(";
        for (std::size_t k = 0; k < rho.size(); ++k) os << (k ? "," : "") << rho[k];
        os << ")b" << chi;
        out.push_back(os.str());
    }
    return out;
}

ZFiniteAlgebra CrossedAlgebra::over_center() const {
    const auto basis = center_module_basis();
    const std::size_t n = basis.size();
    const std::size_t d = lattice_.rank;
    std::map<std::pair<Exponent, std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[basis[i]] = i;
    std::vector<std::vector<ZFiniteAlgebra::Elt>> c(
        n, std::vector<ZFiniteAlgebra::Elt>(n, ZFiniteAlgebra::Elt(n, LaurentElt(field(), d))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto prod = multiply(CrossedElt{{basis[i], field().one()}}, CrossedElt{{basis[j], field().one()}});
            for (const auto& [key, coeff] : prod) {
                const auto [rep, coords] = reduce_modulo(center_basis_, key.first);
                c[i][j][index.at({rep, key.second})] += LaurentElt::monomial(field(), coords, coeff);
            }
        }
    CenterRing z{CenterKind::laurent, d, default_variables(d, "y")};
    return ZFiniteAlgebra(field(), z, basis_labels(), index.at({Exponent(d, 0), group_.identity()}), std::move(c));
}

Report CrossedAlgebra::relation_report() const {
    Report rep;
    rep.suite = "crossed-relations";
    const std::size_t d = lattice_.rank;
    std::string bad;
    for (std::size_t j = 0; j < d; ++j) {
        Exponent mu(d, 0);
        mu[j] = 1;
        for (std::size_t chi = 0; chi < group_.size(); ++chi) {
            const CrossedElt lhs = multiply(b(chi), e(mu));
            CrossedElt rhs;
            rhs = add(rhs, multiply(e(mu), b(chi)), group_.evaluate(chi, mu));
            if (lhs != rhs) bad += " (mu=" + std::to_string(j) + ", chi=" + std::to_string(chi) + ")";
        }
    }
    rep.check("conjugation-relation", "crossed-product-presentation", bad.empty(),
              bad.empty() ? "b_chi e_mu = chi(mu) e_mu b_chi for all basis mu and all chi" : "fails at" + bad);
    const std::size_t g = group_.size();
    const std::size_t n = reps_.size() * g;
    rep.check("rank-over-center", "azumaya-rank", n == g * g,
              "basis has " + std::to_string(n) + " elements, |Gamma|^2 = " + std::to_string(g * g));
    return rep;
}

std::string to_string(const CrossedElt& x) {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : x) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*e(";
        for (std::size_t k = 0; k < key.first.size(); ++k) os << (k ? "," : "") << key.first[k];
        os << ")b" << key.second;
    }
    return os.str();
}

CenterCheck verify_center(const CrossedAlgebra& r, int box) {
    CenterCheck out;
    out.box = box;
    const Field f = r.field();
    const std::size_t d = r.lattice().rank;
    const std::size_t g = r.group().size();

    std::vector<Exponent> lambdas;
    {
        Exponent l(d, -box);
        while (true) {
            lambdas.push_back(l);
            std::size_t v = 0;
            while (v < d) {
                if (++l[v] <= box) break;
                l[v] = -box;
                ++v;
            }
            if (v == d) break;
        }
    }
    std::vector<std::pair<Exponent, std::size_t>> unknowns;
    for (const auto& l : lambdas)
        for (std::size_t chi = 0; chi < g; ++chi) unknowns.emplace_back(l, chi);

    std::vector<CrossedElt> gens;
    for (std::size_t j = 0; j < d; ++j) {
        Exponent mu(d, 0);
        mu[j] = 1;
        gens.push_back(r.e(mu));
    }
    for (std::size_t psi = 0; psi < g; ++psi) gens.push_back(r.b(psi));

    // rows: (generator, output key)
    std::map<std::pair<std::size_t, std::pair<Exponent, std::size_t>>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns(unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const CrossedElt x{{unknowns[u], f.one()}};
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            CrossedElt comm = r.multiply(gens[gi], x);
            comm = add(comm, r.multiply(x, gens[gi]), -f.one());
            for (const auto& [key, c] : comm) {
                auto [it, inserted] = row_of.try_emplace({gi, key}, row_of.size());
                columns[u].emplace_back(it->second, c);
            }
        }
    }
    Matrix sys(f, std::max<std::size_t>(row_of.size(), 1), unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        for (const auto& [row, c] : columns[u]) sys(row, u) += c;
    out.solution_dimension = nullspace(sys).cols();

    std::size_t expected = 0;
    bool fixed_commute = true;
    for (const auto& l : lambdas) {
        bool fixed = true;
        for (std::size_t chi = 0; chi < g; ++chi)
            if (!r.group().evaluate(chi, l).is_one()) fixed = false;
        if (!fixed) continue;
        ++expected;
        const CrossedElt z = r.e(l);
        for (const auto& gen : gens)
            if (r.multiply(gen, z) != r.multiply(z, gen)) fixed_commute = false;
    }
    out.expected_dimension = expected;
    out.ok = fixed_commute && expected == out.solution_dimension;
    out.message = "commutant in box [-" + std::to_string(box) + "," + std::to_string(box) + "]^" + std::to_string(d) +
                  " has dimension " + std::to_string(out.solution_dimension) + "; fixed-lattice monomials: " +
                  std::to_string(expected) + (fixed_commute ? "" : "; a fixed monomial fails to commute");
    return out;
}

TraceCertificate trace_fsg_certificate(const CrossedAlgebra& r) {
    const ZFiniteAlgebra a = r.over_center();
    const std::size_t n = a.size();
    TraceCertificate out;
    out.labels = a.labels();
    out.gram = LaurentMatrix(a.field(), a.center().rank, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.gram(i, j) = a.regular_trace(a.multiply(a.basis_element(i), a.basis_element(j)));
    out.symmetric = out.gram == out.gram.transpose();
    out.determinant = determinant(out.gram);
    out.unit = a.center().is_unit(out.determinant);
    return out;
}

Matrix matrix_power(const Matrix& m, std::int64_t e) {
    Matrix base = m;
    if (e < 0) {
        auto inv = inverse(m);
        if (!inv) throw DivisionByZero();
        base = *inv;
        e = -e;
    }
    Matrix out = Matrix::identity(m.field(), m.rows());
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

void validate_module(const CrossedAlgebra& r, const CrossedModule& v) {
    const auto& grp = r.group();
    const std::size_t n = v.base.dimension();
    const std::size_t d = r.lattice().rank;
    std::vector<std::string> errors;
    if (v.base.rank() != d) throw InvalidInput("module over the wrong lattice rank");
    if (v.b.size() != grp.size()) throw InvalidInput("module needs one b-matrix per character");
    for (const auto& m : v.b)
        if (m.rows() != n || m.cols() != n) throw InvalidInput("b-matrix has the wrong size");
    if (v.b[grp.identity()] != Matrix::identity(r.field(), n)) errors.push_back("b of the trivial character is not 1");
    for (std::size_t chi = 0; chi < grp.size(); ++chi)
        for (std::size_t j = 0; j < d; ++j) {
            Exponent mu(d, 0);
            mu[j] = 1;
            if (v.b[chi] * v.base.op(j) != grp.evaluate(chi, mu) * (v.base.op(j) * v.b[chi]))
                errors.push_back("B" + std::to_string(chi) + " T" + std::to_string(j + 1) + " != chi(mu) T B");
        }
    for (std::size_t chi = 0; chi < grp.size(); ++chi)
        for (std::size_t psi = 0; psi < grp.size(); ++psi)
            if (v.b[chi] * v.b[psi] != r.cocycle()(chi, psi) * v.b[grp.product(chi, psi)])
                errors.push_back("B" + std::to_string(chi) + " B" + std::to_string(psi) + " != c B");
    if (!errors.empty()) {
        std::string msg = v.name.empty() ? "" : v.name + ": ";
        for (std::size_t k = 0; k < errors.size(); ++k) msg += (k ? "; " : "") + errors[k];
        throw InvalidInput(msg);
    }
}

FinLengthModule restrict_to_center(const CrossedAlgebra& r, const FinLengthModule& m) {
    const IntMatrix& h = r.center_basis();
    std::vector<Matrix> ops;
    for (std::size_t k = 0; k < h.rows(); ++k) {
        Matrix t = Matrix::identity(m.field(), m.dimension());
        for (std::size_t j = 0; j < h.cols(); ++j) {
            const long e = h(k, j).get_si();
            if (e != 0) t = t * matrix_power(m.op(j), e);
        }
        ops.push_back(std::move(t));
    }
    return FinLengthModule(m.field(), h.rows(), m.dimension(), std::move(ops));
}

ExtOverR ext_R_against_R(const CrossedAlgebra& r, const CrossedModule& v, const TraceCertificate& cert) {
    if (!cert.unit) throw InvalidInput("trace certificate does not have a unit determinant; the reduction to the center is unavailable");
    validate_module(r, v);
    const int d = static_cast<int>(r.lattice().rank);
    ExtOverR out;
    out.restricted = restrict_to_center(r, v.base);
    out.ext_center = homological_dual(out.restricted);
    out.ext_ambient = homological_dual(v.base);
    out.report.suite = "ext-over-crossed-product";
    const std::size_t n = v.base.dimension();

    std::string off;
    for (const auto& [i, m] : out.ext_center)
        if (i != d && !m.is_zero()) off += " degree " + std::to_string(i);
    auto& a = out.report.check("vanishing-off-top-degree", "ext-over-crossed-product-vanishing", off.empty(),
                               off.empty() ? "Ext^i = 0 for i != " + std::to_string(d) : "nonzero in" + off);
    for (const auto& [i, m] : out.ext_center) a.witness.emplace_back("dim Ext^" + std::to_string(i), std::to_string(m.dimension()));
    out.report.check("top-degree-dimension", "ext-over-crossed-product-vanishing", out.ext_center.at(d).dimension() == n,
                     "dim Ext^d = " + std::to_string(out.ext_center.at(d).dimension()) + ", dim V = " + std::to_string(n));

    std::string amb;
    for (const auto& [i, m] : out.ext_ambient)
        if (i != d && !m.is_zero()) amb += " degree " + std::to_string(i);
    out.report.check("ambient-ring-cross-check", "restriction-cross-check",
                     amb.empty() && out.ext_ambient.at(d).dimension() == n,
                     amb.empty() ? "Ext over A concentrated with dimension " + std::to_string(out.ext_ambient.at(d).dimension())
                                 : "Ext over A nonzero in" + amb);

    const IsoResult iso = is_isomorphic(out.ext_center.at(d), dual_module(out.restricted));
    auto& c = out.report.add("contragredient-over-center", "ext-top-agrees-with-contragredient",
                             iso.isomorphic() ? Status::pass
                             : iso.verdict == IsoResult::Verdict::undetermined ? Status::undetermined
                                                                                : Status::fail,
                             iso.certificate);
    if (iso.witness) c.witness.emplace_back("intertwiner", iso.witness->to_strings());
    return out;
}

}  // namespace ldual
