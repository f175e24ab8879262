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

#include <gtest/gtest.h>

#include "ldual/crossed.hpp"
#include "ldual/dualities.hpp"
#include "ldual/io.hpp"
#include "support.hpp"

using namespace ldual;

namespace {

CrossedFile load(const std::string& name) { return load_crossed_file(std::string(LDUAL_TEST_DATA_DIR) + "/" + name); }

// Closed-form Gram entry for a trivial cocycle in rank one: the product
// (e_r b_chi)(e_s b_psi) = chi(s) e_(r+s) b_(chi psi) has nonzero trace only
// when chi psi = 1 and r + s lies in hZ, where it is chi(s) |G| h y^((r+s)/h).
LaurentElt gram_oracle(const CrossedAlgebra& r, std::size_t i, std::size_t j) {
    const auto basis = r.center_module_basis();
    const auto& [rho, chi] = basis[i];
    const auto& [sigma, psi] = basis[j];
    const Field f = r.field();
    const long h = r.center_basis()(0, 0).get_si();
    const Scalar chi_val = r.group().values(chi)[0];
    const Scalar psi_val = r.group().values(psi)[0];
    const long total = rho[0] + sigma[0];
    if (!(chi_val * psi_val).is_one() || total % h != 0) return LaurentElt::constant(f, 1, f.zero());
    const Scalar coeff = chi_val.pow(sigma[0]) * f.from_int(static_cast<long>(r.group().size()) * h);
    return LaurentElt::monomial(f, Exponent{total / h}, coeff);
}

}  // namespace

TEST(CharacterGroup, RejectsMissingIdentityAndNonClosure) {
    const Field k = Field::cyclotomic(3);
    const Scalar w = k.generator();
    EXPECT_THROW(CharacterGroup(k, 1, {{w}, {w * w}}), InvalidInput);
    EXPECT_THROW(CharacterGroup(k, 1, {{k.one()}, {w}}), InvalidInput);
    EXPECT_THROW(CharacterGroup(k, 1, {{k.one()}, {k.from_int(2)}}), InvalidInput);
}

TEST(Cocycle, DetectsViolations) {
    const Field q = Field::rational();
    const CharacterGroup g(q, 1, {{q.one()}, {-q.one()}});
    EXPECT_TRUE(Cocycle::trivial(q, 2).violations(g).empty());
    EXPECT_FALSE(Cocycle({{q.from_int(2), q.one()}, {q.one(), q.one()}}).violations(g).empty());
    EXPECT_FALSE(Cocycle({{q.one(), q.one()}, {q.one(), q.zero()}}).violations(g).empty());
    // c(g, g) = -1 is a genuine cocycle on Z/2
    EXPECT_TRUE(Cocycle({{q.one(), q.one()}, {q.one(), -q.one()}}).violations(g).empty());
}

TEST(CrossedAlgebra, OrderTwoStructure) {
    const CrossedFile file = load("z2_cross.alg");
    const CrossedAlgebra& r = file.algebra;
    EXPECT_EQ(r.center_basis(), IntMatrix::from_rows({{2}}));
    EXPECT_EQ(r.coset_representatives().size(), 2u);
    EXPECT_EQ(r.center_module_basis().size(), 4u);
    EXPECT_TRUE(r.relation_report().passed(false)) << r.relation_report().to_text();

    const Field q = r.field();
    const CrossedElt lhs = r.multiply(r.b(1), r.e(Exponent{1}));
    CrossedElt rhs = r.multiply(r.e(Exponent{1}), r.b(1));
    for (auto& [key, c] : rhs) c = -c;
    EXPECT_EQ(lhs, rhs);
    // e_2 is central
    EXPECT_EQ(r.multiply(r.b(1), r.e(Exponent{2})), r.multiply(r.e(Exponent{2}), r.b(1)));
    (void)q;
}

TEST(CrossedAlgebra, NonTrivialCocycleIsAssociative) {
    const Field q = Field::rational();
    const CharacterGroup g(q, 1, {{q.one()}, {-q.one()}});
    const CrossedAlgebra r =
        CrossedAlgebra::build(Lattice{1}, g, Cocycle({{q.one(), q.one()}, {q.one(), -q.one()}}));
    CrossedElt minus_one;
    minus_one[{Exponent{0}, 0}] = -q.one();
    EXPECT_EQ(r.multiply(r.b(1), r.b(1)), minus_one);
}

TEST(CrossedAlgebra, CenterIsFixedLattice) {
    for (const char* name : {"z2_cross.alg", "z3_cross.alg"}) {
        const CrossedFile file = load(name);
        const CenterCheck c = verify_center(file.algebra, 2);
        EXPECT_TRUE(c.ok) << name << ": " << c.message;
        EXPECT_EQ(c.solution_dimension, c.expected_dimension);
    }
}

TEST(TraceCertificate, MatchesClosedFormGram) {
    for (const char* name : {"z2_cross.alg", "z3_cross.alg"}) {
        const CrossedAlgebra& r = load(name).algebra;
        const TraceCertificate cert = trace_fsg_certificate(r);
        const std::size_t n = r.center_module_basis().size();
        ASSERT_EQ(cert.gram.rows(), n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                EXPECT_EQ(cert.gram(i, j), gram_oracle(r, i, j)) << name << " " << i << "," << j;
        EXPECT_TRUE(cert.symmetric);
        EXPECT_TRUE(cert.unit);
    }
}

TEST(TraceCertificate, DeterminantValues) {
    const CrossedAlgebra z2 = load("z2_cross.alg").algebra;
    EXPECT_EQ(trace_fsg_certificate(z2).determinant, LaurentElt::monomial(z2.field(), Exponent{2}, z2.field().from_int(-256)));
    const CrossedAlgebra z3 = load("z3_cross.alg").algebra;
    EXPECT_EQ(trace_fsg_certificate(z3).determinant,
              LaurentElt::monomial(z3.field(), Exponent{6}, z3.field().from_int(387420489)));
}

TEST(OverCenter, IsSymmetricFrobenius) {
    const CrossedAlgebra r = load("z2_cross.alg").algebra;
    const ZFiniteAlgebra a = r.over_center();
    EXPECT_EQ(a.size(), 4u);
    EXPECT_EQ(a.center().kind, CenterKind::laurent);
    EXPECT_EQ(fsg_probe(a, 1).kind, FsgVerdict::Kind::certified_yes);
}

TEST(ValidateModule, RejectsBrokenRelation) {
    const CrossedFile file = load("z2_cross.alg");
    CrossedModule v = file.modules.front();
    EXPECT_NO_THROW(validate_module(file.algebra, v));
    v.b[1] = Matrix::identity(v.base.field(), v.base.dimension());
    EXPECT_THROW(validate_module(file.algebra, v), InvalidInput);
}

TEST(RestrictToCenter, SquaresTheOperator) {
    const CrossedFile file = load("z2_cross.alg");
    const FinLengthModule& m = file.modules.front().base;
    const FinLengthModule z = restrict_to_center(file.algebra, m);
    EXPECT_EQ(z.op(0), m.op(0) * m.op(0));
}

TEST(ExtOverR, ConcentratedInTopDegree) {
    for (const char* name : {"z2_cross.alg", "z3_cross.alg"}) {
        const CrossedFile file = load(name);
        const TraceCertificate cert = trace_fsg_certificate(file.algebra);
        for (const auto& v : file.modules) {
            const ExtOverR e = ext_R_against_R(file.algebra, v, cert);
            EXPECT_TRUE(e.report.passed(false)) << name << "/" << v.name << "\n" << e.report.to_text();
            for (const auto& [i, m] : e.ext_center) {
                if (i == 1)
                    EXPECT_EQ(m.dimension(), v.base.dimension());
                else
                    EXPECT_TRUE(m.is_zero());
            }
        }
    }
}

TEST(ExtOverR, TrivialGroupReducesToLaurentRing) {
    const Field q = Field::rational();
    const CrossedAlgebra r = CrossedAlgebra::build(Lattice{1}, CharacterGroup(q, 1, {{q.one()}}), Cocycle::trivial(q, 1));
    EXPECT_EQ(r.center_basis(), IntMatrix::identity(1));
    const FinLengthModule base(q, 1, 2, {oracle::imat(q, {{3, 1}, {0, 3}})});
    const CrossedModule v{"j", base, {Matrix::identity(q, 2)}};
    const ExtOverR e = ext_R_against_R(r, v, trace_fsg_certificate(r));
    EXPECT_EQ(e.restricted, base);
    const auto direct = homological_dual(base);
    ASSERT_EQ(e.ext_center.size(), direct.size());
    for (const auto& [i, m] : direct) EXPECT_EQ(e.ext_center.at(i), m);
}

TEST(MatrixPower, NegativeExponent) {
    const Field q = Field::rational();
    const Matrix m = oracle::imat(q, {{2, 1}, {0, 1}});
    EXPECT_EQ(matrix_power(m, -1) * m, Matrix::identity(q, 2));
    EXPECT_EQ(matrix_power(m, 3), m * m * m);
    EXPECT_EQ(matrix_power(m, 0), Matrix::identity(q, 2));
}
