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

#include "random_modules.hpp"
#include "support.hpp"

using namespace ldual;
using oracle::imat;

namespace {

FinLengthModule jordan(Field f, long a, std::size_t k) {
    Matrix j(f, k, k);
    for (std::size_t i = 0; i < k; ++i) {
        j(i, i) = f.from_int(a);
        if (i + 1 < k) j(i, i + 1) = f.one();
    }
    return FinLengthModule(f, 1, k, {j});
}

std::vector<std::size_t> dims(const std::vector<FinLengthModule>& ext) {
    std::vector<std::size_t> out;
    for (const auto& m : ext) out.push_back(m.dimension());
    return out;
}

}  // namespace

TEST(FinLengthModule, RejectsNonCommutingOperators) {
    const Field q = Field::rational();
    EXPECT_THROW(FinLengthModule(q, 2, 2, {imat(q, {{1, 1}, {0, 1}}), imat(q, {{1, 0}, {1, 1}})}), InvalidInput);
}

TEST(FinLengthModule, RejectsSingularOperator) {
    const Field q = Field::rational();
    EXPECT_THROW(FinLengthModule(q, 1, 2, {imat(q, {{1, 1}, {1, 1}})}), InvalidInput);
}

TEST(DualModule, OneDimensional) {
    const Field q = Field::rational();
    const auto m = FinLengthModule::character(q, {q.from_int(7)});
    EXPECT_EQ(dual_module(m), m);
}

TEST(DualModule, JordanBlockIsSelfDual) {
    const Field q = Field::rational();
    const auto j = jordan(q, 1, 2);
    const IsoResult r = is_isomorphic(dual_module(j), j);
    ASSERT_TRUE(r.isomorphic());
    EXPECT_TRUE(oracle::is_intertwiner(*r.witness, dual_module(j), j));
}

TEST(DualModule, DoubleDualIsOriginal) {
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
        const auto m = cli::random_module(Field::rational(), 1 + t % 3, 1 + t % 4, rng);
        EXPECT_EQ(dual_module(dual_module(m)), m);
    }
}

TEST(ExtFinite, SameCharacter) {
    const Field q = Field::rational();
    const auto k = FinLengthModule::character(q, {q.from_int(3)});
    EXPECT_EQ(dims(ext_finite(k, k)), oracle::ext_dimensions(k, k));
    EXPECT_EQ(dims(ext_finite(k, k)), (std::vector<std::size_t>{1, 1}));
}

TEST(ExtFinite, DistinctCharacters) {
    const Field q = Field::rational();
    const auto a = FinLengthModule::character(q, {q.from_int(3)});
    const auto b = FinLengthModule::character(q, {q.from_int(-2)});
    EXPECT_EQ(oracle::ext_dimensions(a, b), (std::vector<std::size_t>{0, 0}));
    EXPECT_EQ(dims(ext_finite(a, b)), (std::vector<std::size_t>{0, 0}));
}

TEST(ExtFinite, TrivialRankTwo) {
    const Field q = Field::rational();
    const auto k = FinLengthModule::character(q, {q.one(), q.one()});
    EXPECT_EQ(oracle::ext_dimensions(k, k), (std::vector<std::size_t>{1, 2, 1}));
    EXPECT_EQ(dims(ext_finite(k, k)), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(ExtFinite, MatchesOracleOnRandomPairs) {
    std::mt19937 rng(17);
    for (int t = 0; t < 40; ++t) {
        const std::size_t d = 1 + t % 3;
        const auto m = cli::random_module(Field::rational(), d, 1 + t % 3, rng);
        const auto n = cli::random_module(Field::rational(), d, 1 + (t / 3) % 3, rng);
        const auto ext = ext_finite(m, n);
        EXPECT_EQ(dims(ext), oracle::ext_dimensions(m, n)) << "pair " << t;
        long euler = 0;
        for (std::size_t i = 0; i < ext.size(); ++i) euler += (i % 2 ? -1 : 1) * static_cast<long>(ext[i].dimension());
        EXPECT_EQ(euler, 0);
        EXPECT_EQ(ext[0].dimension(), oracle::hom_dimension(m, n));
        EXPECT_EQ(hom_basis(m, n).size(), oracle::hom_dimension(m, n));
    }
}

TEST(ExtFinite, ResidualActionCommutesAndIsInvertible) {
    const Field q = Field::rational();
    const auto j = jordan(q, 2, 3);
    for (const auto& e : ext_finite(j, j))
        for (std::size_t i = 0; i < e.rank(); ++i) EXPECT_TRUE(oracle::invertible(e.op(i)));
}

TEST(IsIsomorphic, JordanVersusDiagonal) {
    const Field q = Field::rational();
    const auto j = jordan(q, 1, 2);
    const FinLengthModule d(q, 1, 2, {Matrix::identity(q, 2)});
    const IsoResult r = is_isomorphic(j, d);
    EXPECT_EQ(r.verdict, IsoResult::Verdict::not_isomorphic);
}

TEST(IsIsomorphic, SelfWithIdentityWitness) {
    std::mt19937 rng(23);
    const auto m = cli::random_module(Field::rational(), 2, 3, rng);
    const IsoResult r = is_isomorphic(m, m);
    ASSERT_TRUE(r.isomorphic());
    EXPECT_TRUE(oracle::is_intertwiner(*r.witness, m, m));
}

TEST(IsIsomorphic, JordanAndTranspose) {
    const Field q = Field::rational();
    const auto j = jordan(q, 4, 2);
    const FinLengthModule jt(q, 1, 2, {j.op(0).transpose()});
    const IsoResult r = is_isomorphic(j, jt);
    ASSERT_TRUE(r.isomorphic());
    EXPECT_TRUE(oracle::is_intertwiner(*r.witness, j, jt));
}

TEST(IsIsomorphic, ConjugatedModules) {
    std::mt19937 rng(29);
    const Field q = Field::rational();
    for (int t = 0; t < 10; ++t) {
        const auto m = cli::random_module(q, 1 + t % 2, 3, rng);
        const Matrix p = imat(q, {{1, 2, 0}, {0, 1, -1}, {1, 0, 1}});
        const Matrix pinv = *inverse(p);
        std::vector<Matrix> ops;
        for (const auto& t2 : m.operators()) ops.push_back(p * t2 * pinv);
        const FinLengthModule n(q, m.rank(), 3, ops);
        const IsoResult r = is_isomorphic(m, n);
        ASSERT_TRUE(r.isomorphic());
        EXPECT_TRUE(oracle::is_intertwiner(*r.witness, m, n));
    }
}

TEST(IsIsomorphic, DimensionMismatch) {
    const Field q = Field::rational();
    EXPECT_EQ(is_isomorphic(jordan(q, 1, 2), jordan(q, 1, 3)).verdict, IsoResult::Verdict::not_isomorphic);
}
