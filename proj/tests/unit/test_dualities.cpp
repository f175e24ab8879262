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

#include "ldual/dualities.hpp"
#include "ldual/io.hpp"
#include "ldual/syzygy.hpp"
#include "random_modules.hpp"
#include "support.hpp"

using namespace ldual;

namespace {

FinLengthModule jordan2(Field f, long a) {
    Matrix j(f, 2, 2);
    j(0, 0) = j(1, 1) = f.from_int(a);
    j(0, 1) = f.one();
    return FinLengthModule(f, 1, 2, {j});
}

void expect_concentrated(const std::map<int, FinLengthModule>& ext, int top) {
    for (const auto& [i, m] : ext)
        if (i != top) EXPECT_TRUE(m.is_zero()) << "degree " << i;
}

}  // namespace

TEST(Koszul, RankOne) {
    const Field q = Field::rational();
    const FreeComplex c = koszul_resolution(FinLengthModule::character(q, {q.from_int(3)}));
    EXPECT_EQ(c.ranks, (std::vector<std::size_t>{1, 1}));
    ASSERT_EQ(c.differentials.size(), 1u);
    EXPECT_EQ(c.differentials[0](0, 0), oracle::lau("3 - x1", 1));
}

TEST(Koszul, BinomialRanks) {
    const Field q = Field::rational();
    EXPECT_EQ(koszul_resolution(FinLengthModule::character(q, {q.one(), q.one()})).ranks,
              (std::vector<std::size_t>{1, 2, 1}));
    std::mt19937 rng(2);
    const auto m = cli::random_module(q, 2, 3, rng);
    EXPECT_EQ(koszul_resolution(m).ranks, (std::vector<std::size_t>{3, 6, 3}));
    const auto m3 = cli::random_module(q, 3, 2, rng);
    EXPECT_EQ(koszul_resolution(m3).ranks, (std::vector<std::size_t>{2, 6, 6, 2}));
}

TEST(Koszul, SquareIsZeroAndResolves) {
    std::mt19937 rng(9);
    for (int t = 0; t < 6; ++t) {
        const auto m = cli::random_module(Field::rational(), 1 + t % 3, 1 + t % 3, rng);
        const FreeComplex c = koszul_resolution(m);
        EXPECT_NO_THROW(c.validate());
        for (int i = c.lo; i < 0; ++i) EXPECT_TRUE(cohomology_at(c, i).is_zero());
        EXPECT_TRUE(is_isomorphic(cohomology_at(c, 0), m).isomorphic());
    }
}

TEST(HomologicalDual, CharacterRankOne) {
    const Field q = Field::rational();
    const auto k = FinLengthModule::character(q, {q.from_int(3)});
    for (DualEngine e : {DualEngine::groebner, DualEngine::smith}) {
        const auto ext = homological_dual(k, e);
        expect_concentrated(ext, 1);
        ASSERT_EQ(ext.at(1).dimension(), 1u);
        EXPECT_EQ(ext.at(1).op(0)(0, 0), q.from_int(3));
    }
}

TEST(HomologicalDual, TrivialRankTwo) {
    const Field q = Field::rational();
    const auto ext = homological_dual(FinLengthModule::character(q, {q.one(), q.one()}));
    expect_concentrated(ext, 2);
    EXPECT_EQ(ext.at(2), FinLengthModule::character(q, {q.one(), q.one()}));
}

TEST(HomologicalDual, JordanBlock) {
    const Field q = Field::rational();
    const auto j = jordan2(q, 5);
    const auto ext = homological_dual(j);
    expect_concentrated(ext, 1);
    const IsoResult r = is_isomorphic(ext.at(1), dual_module(j));
    ASSERT_TRUE(r.isomorphic());
    EXPECT_TRUE(oracle::is_intertwiner(*r.witness, ext.at(1), dual_module(j)));
    EXPECT_TRUE(is_isomorphic(ext.at(1), j).isomorphic());
}

TEST(GsDual, ShiftedIntoDegreeZero) {
    const Field q = Field::rational();
    const auto k = FinLengthModule::character(q, {q.from_int(-4)});
    const auto gs = gs_dual(k);
    EXPECT_EQ(gs.begin()->first, -1);
    EXPECT_TRUE(gs.at(-1).is_zero());
    EXPECT_TRUE(is_isomorphic(gs.at(0), dual_module(k)).isomorphic());

    const auto t = FinLengthModule::character(q, {q.one(), q.one()});
    const auto gs2 = gs_dual(t);
    EXPECT_TRUE(gs2.at(-2).is_zero() && gs2.at(-1).is_zero());
    EXPECT_EQ(gs2.at(0).dimension(), 1u);
}

TEST(GsDual, ZeroModule) {
    for (const auto& [i, m] : gs_dual(FinLengthModule::zero(Field::rational(), 2))) EXPECT_TRUE(m.is_zero()) << i;
}

TEST(VerifyThreeDualities, Examples) {
    const Field q = Field::rational();
    std::mt19937 rng(31);
    for (const auto& m : {FinLengthModule::character(q, {q.from_int(3)}),
                          FinLengthModule::character(q, {q.one(), q.one(), q.one()}),
                          cli::random_module(q, 2, 3, rng)}) {
        const Report r = verify_three_dualities(m);
        EXPECT_TRUE(r.passed(false)) << r.to_text();
    }
}

// Dimensions of the top Ext group equal dim M with nothing elsewhere; the
// oracle Euler characteristic of Hom_A(K, A) is the alternating sum of the
// Koszul ranks, which is zero for d >= 1.
TEST(HomologicalDual, DimensionsAgreeWithEulerCharacteristic) {
    std::mt19937 rng(37);
    for (int t = 0; t < 8; ++t) {
        const std::size_t d = 1 + t % 2;
        const auto m = cli::random_module(Field::rational(), d, 1 + t % 3, rng);
        const auto ext = homological_dual(m);
        long euler = 0;
        for (const auto& [i, e] : ext) euler += (i % 2 ? -1 : 1) * static_cast<long>(e.dimension());
        EXPECT_EQ(std::abs(euler), static_cast<long>(m.dimension()));
        expect_concentrated(ext, static_cast<int>(d));
        EXPECT_EQ(ext.at(static_cast<int>(d)).dimension(), m.dimension());
    }
}

TEST(VerifyThreeDualities, CorpusFilesRankTwo) {
    const ModuleFile file = load_module_file(std::string(LDUAL_TEST_DATA_DIR) + "/corpus_d2.mod");
    EXPECT_GE(file.modules.size(), 6u);
    for (const auto& [name, m] : file.modules) {
        const Report r = verify_three_dualities(m);
        EXPECT_TRUE(r.passed(false)) << name << "\n" << r.to_text();
    }
}
