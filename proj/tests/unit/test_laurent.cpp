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

#include <random>

#include "ldual/errors.hpp"
#include "ldual/lattice.hpp"
#include "ldual/snf.hpp"
#include "support.hpp"

using namespace ldual;
using oracle::lau;

namespace {

// Membership of v in the row lattice of a full-rank 2x2 integer basis (Cramer).
bool in_row_lattice(const IntMatrix& b, long x, long y) {
    const mpz_class det = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
    const mpz_class c0 = x * b(1, 1) - y * b(1, 0);
    const mpz_class c1 = b(0, 0) * y - b(0, 1) * x;
    return c0 % det == 0 && c1 % det == 0;
}

bool all_fixed(const IntMatrix& basis, const std::vector<std::vector<Scalar>>& chars) {
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        Exponent lambda;
        for (std::size_t c = 0; c < basis.cols(); ++c) lambda.push_back(basis(r, c).get_si());
        for (const auto& chi : chars)
            if (!character_value(chi, lambda).is_one()) return false;
    }
    return true;
}

}  // namespace

TEST(FixedSublattice, OrderTwoCharacter) {
    const Field q = Field::rational();
    const IntMatrix b = fixed_sublattice(Lattice{1}, std::vector<std::vector<Scalar>>{{q.from_int(-1)}});
    EXPECT_EQ(b, IntMatrix::from_rows({{2}}));
}

TEST(FixedSublattice, DiagonalCubeRootCharacter) {
    const Field k = Field::cyclotomic(3);
    const Scalar w = k.generator();
    const std::vector<std::vector<Scalar>> chars = {{w, w}, {w * w, w * w}};
    const IntMatrix b = fixed_sublattice(Lattice{2}, chars);
    ASSERT_EQ(b.rows(), 2u);
    EXPECT_TRUE(all_fixed(b, chars));
    // residue enumeration: (a, b) is fixed iff a + b = 0 mod 3
    for (long x = -4; x <= 4; ++x)
        for (long y = -4; y <= 4; ++y) EXPECT_EQ(in_row_lattice(b, x, y), (x + y) % 3 == 0) << x << "," << y;
    EXPECT_EQ(hermite_form(b), hermite_form(IntMatrix::from_rows({{1, -1}, {3, 0}})));
}

TEST(FixedSublattice, EmptyGroupGivesIdentity) {
    EXPECT_EQ(fixed_sublattice(Lattice{3}, std::vector<std::vector<Scalar>>{}), IntMatrix::identity(3));
}

TEST(FixedSublattice, RejectsNonRootOfUnity) {
    const Field q = Field::rational();
    EXPECT_THROW(fixed_sublattice(Lattice{1}, std::vector<std::vector<Scalar>>{{q.from_int(2)}}), InvalidInput);
}

TEST(FixedSublattice, IndexMatchesFaithfulGroupOrder) {
    const Field k = Field::cyclotomic(4);
    const Scalar i = k.generator();
    // Z/4 acting by (i, -1): faithful, order 4
    std::vector<std::vector<Scalar>> chars;
    for (int e = 0; e < 4; ++e) chars.push_back({i.pow(e), (-k.one()).pow(e)});
    const IntMatrix b = fixed_sublattice(Lattice{2}, chars);
    EXPECT_TRUE(all_fixed(b, chars));
    EXPECT_EQ(lattice_index(hermite_form(b)), 4);
}

TEST(IsUnit, Examples) {
    EXPECT_TRUE(is_unit(lau("3*x1^2*x2^-1", 2)));
    EXPECT_FALSE(is_unit(lau("1 + x1", 1)));
    EXPECT_FALSE(is_unit(LaurentElt(Field::rational(), 1)));
}

namespace {

LaurentMatrix lmat(const std::vector<std::vector<std::string>>& rows) {
    LaurentMatrix m(Field::rational(), 1, rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = lau(rows[r][c], 1);
    return m;
}

void check_snf_contract(const LaurentMatrix& m, const LaurentSmithForm& s) {
    EXPECT_EQ(s.U * m * s.V, s.D);
    EXPECT_TRUE(is_unit(determinant(s.U)));
    EXPECT_TRUE(is_unit(determinant(s.V)));
    for (std::size_t r = 0; r < s.D.rows(); ++r)
        for (std::size_t c = 0; c < s.D.cols(); ++c)
            if (r != c) EXPECT_TRUE(s.D(r, c).is_zero());
    for (std::size_t i = 1; i < s.invariant_factors.size(); ++i)
        EXPECT_TRUE(s.invariant_factors[i].divmod(s.invariant_factors[i - 1]).second.is_zero());
}

}  // namespace

TEST(Snf, AlreadyDiagonal) {
    const auto m = lmat({{"x1 - 1"}});
    const auto s = snf_univariate(m);
    check_snf_contract(m, s);
    EXPECT_EQ(s.D, lmat({{"x1 - 1"}}));
}

TEST(Snf, JordanPresentation) {
    const auto m = lmat({{"x1", "1"}, {"0", "x1"}});
    const auto s = snf_univariate(m);
    check_snf_contract(m, s);
    // x is a unit in k[x^+-1], so the invariant factors are 1, 1
    EXPECT_EQ(s.D, lmat({{"1", "0"}, {"0", "1"}}));
}

TEST(Snf, PolynomialEntriesWithRealTorsion) {
    const auto m = lmat({{"x1 - 1", "1"}, {"0", "x1 - 1"}});
    const auto s = snf_univariate(m);
    check_snf_contract(m, s);
    EXPECT_EQ(s.D, lmat({{"1", "0"}, {"0", "x1^2 - 2*x1 + 1"}}));
}

TEST(Snf, ZeroMatrix) {
    const auto m = lmat({{"0", "0"}, {"0", "0"}});
    const auto s = snf_univariate(m);
    check_snf_contract(m, s);
    EXPECT_TRUE(s.D.is_zero());
}

TEST(Snf, RandomContract) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-2, 2), expo(-2, 2);
    for (int t = 0; t < 25; ++t) {
        const std::size_t rows = 1 + t % 3, cols = 1 + (t / 3) % 3;
        LaurentMatrix m(Field::rational(), 1, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                for (int k = 0; k < 2; ++k) {
                    const int e = expo(rng), v = coef(rng);
                    m(r, c) += LaurentElt::monomial(Field::rational(), {e}, Field::rational().from_int(v));
                }
        check_snf_contract(m, snf_univariate(m));
    }
}

TEST(LaurentElt, ParseAndPrintRoundTrip) {
    const auto f = lau("2*x1^-3*x2 + 1/2", 2);
    EXPECT_EQ(f.term_count(), 2u);
    EXPECT_EQ(lau(f.to_string(), 2), f);
}

TEST(LaurentElt, UnitInverse) {
    const auto f = lau("3*x1^2*x2^-1", 2);
    EXPECT_EQ(f * f.unit_inverse(), lau("1", 2));
    EXPECT_THROW(lau("1 + x1", 2).unit_inverse(), DivisionByZero);
}
