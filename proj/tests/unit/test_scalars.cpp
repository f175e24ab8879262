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
#include "ldual/field.hpp"
#include "ldual/parse.hpp"

using namespace ldual;

namespace {

Scalar S(const char* text, Field f) { return parse_scalar(text, f); }

Scalar random_scalar(Field f, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    std::vector<mpq_class> c;
    for (int i = 0; i < f.degree(); ++i) {
        mpq_class q(num(rng), den(rng));
        q.canonicalize();
        c.push_back(q);
    }
    return Scalar(f, c);
}

}  // namespace

TEST(Scalars, RationalSum) {
    const Field q = Field::rational();
    EXPECT_EQ(S("1/2", q) + S("1/3", q), S("5/6", q));
}

TEST(Scalars, CubeRootsSumToMinusOne) {
    const Field k = Field::cyclotomic(3);
    EXPECT_EQ(S("z", k) + S("z^2", k), S("-1", k));
}

TEST(Scalars, InverseOfFourthRoot) {
    const Field k = Field::cyclotomic(4);
    EXPECT_EQ(S("z", k).inverse(), S("-z", k));
}

TEST(Scalars, DivisionByZeroThrows) {
    const Field q = Field::rational();
    EXPECT_THROW(q.zero().inverse(), DivisionByZero);
}

TEST(Scalars, MixedFieldsThrow) {
    EXPECT_THROW(Field::cyclotomic(3).one() + Field::cyclotomic(4).one(), FieldMismatch);
}

TEST(Scalars, RationalLowestTerms) {
    const Scalar s = S("6/-4", Field::rational());
    EXPECT_EQ(s.constant_term().get_num(), -3);
    EXPECT_EQ(s.constant_term().get_den(), 2);
}

TEST(Scalars, CoefficientLengthIsPhi) {
    for (int n : {3, 4, 5, 8, 12}) {
        const Field k = Field::cyclotomic(n);
        EXPECT_EQ(static_cast<int>(k.zero().coefficients().size()), euler_phi(n));
        EXPECT_EQ(static_cast<int>(S("z^7 + 2", k).coefficients().size()), euler_phi(n));
    }
}

TEST(Scalars, EmbedRationalIntoCyclotomic) {
    const Scalar e = embed(S("2/3", Field::rational()), Field::cyclotomic(3));
    EXPECT_EQ(e, S("2/3", Field::cyclotomic(3)));
    EXPECT_TRUE(e.is_rational());
}

TEST(Scalars, EmbedMinusOne) {
    EXPECT_EQ(embed(Field::cyclotomic(2).generator(), Field::cyclotomic(4)), S("-1", Field::cyclotomic(4)));
}

TEST(Scalars, EmbedCubeRootIntoSixth) {
    EXPECT_EQ(embed(Field::cyclotomic(3).generator(), Field::cyclotomic(6)), S("z^2", Field::cyclotomic(6)));
}

TEST(Scalars, NoEmbeddingThrows) {
    EXPECT_THROW(embed(Field::cyclotomic(3).generator(), Field::cyclotomic(4)), EmbeddingError);
}

class ScalarProperties : public ::testing::TestWithParam<int> {};

TEST_P(ScalarProperties, FieldAxioms) {
    const Field f = GetParam() == 1 ? Field::rational() : Field::cyclotomic(GetParam());
    std::mt19937 rng(GetParam());
    for (int t = 0; t < 60; ++t) {
        const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST_P(ScalarProperties, EmbedIsRingHomomorphism) {
    const int n = GetParam();
    const Field f = n == 1 ? Field::rational() : Field::cyclotomic(n);
    const Field big = Field::cyclotomic(n == 1 ? 6 : 2 * n);
    std::mt19937 rng(100 + n);
    for (int t = 0; t < 40; ++t) {
        const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng);
        EXPECT_EQ(embed(a * b, big), embed(a, big) * embed(b, big));
        EXPECT_EQ(embed(a + b, big), embed(a, big) + embed(b, big));
    }
}

TEST_P(ScalarProperties, CanonicalFormIsIdempotent) {
    const Field f = GetParam() == 1 ? Field::rational() : Field::cyclotomic(GetParam());
    std::mt19937 rng(200 + GetParam());
    for (int t = 0; t < 40; ++t) {
        const Scalar a = random_scalar(f, rng);
        const Scalar once = parse_scalar(a.to_string(), f);
        EXPECT_EQ(once, a);
        EXPECT_EQ(parse_scalar(once.to_string(), f).coefficients(), once.coefficients());
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, ScalarProperties, ::testing::Values(1, 3, 4, 5, 12));

TEST(Scalars, RootOfUnityDetection) {
    const Field k = Field::cyclotomic(6);
    EXPECT_TRUE(as_root_of_unity(S("z", k)).has_value());
    EXPECT_EQ(as_root_of_unity(S("z", k))->order, 6);
    EXPECT_EQ(as_root_of_unity(S("-1", k))->order, 2);
    EXPECT_FALSE(as_root_of_unity(S("2", k)).has_value());
    EXPECT_FALSE(as_root_of_unity(S("1+z", Field::cyclotomic(4))).has_value());
}
