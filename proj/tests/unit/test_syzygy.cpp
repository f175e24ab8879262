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
#include "ldual/errors.hpp"
#include "ldual/io.hpp"
#include "ldual/syzygy.hpp"
#include "support.hpp"

using namespace ldual;
using oracle::lau;

namespace {

LaurentMatrix row(std::size_t rank, const std::vector<std::string>& entries) {
    LaurentMatrix m(Field::rational(), rank, 1, entries.size());
    for (std::size_t c = 0; c < entries.size(); ++c) m(0, c) = lau(entries[c], rank);
    return m;
}

LaurentMatrix column_of(const LaurentMatrix& m, std::size_t c) {
    LaurentMatrix out(m.field(), m.rank(), m.rows(), 1);
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, 0) = m(r, c);
    return out;
}

bool is_zero_column(const LaurentMatrix& m, std::size_t c) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m(r, c).is_zero()) return false;
    return true;
}

}  // namespace

TEST(KernelGens, NonZeroDivisorHasZeroKernel) {
    const LaurentMatrix k = kernel_gens(row(1, {"x1 - 3"}));
    for (std::size_t c = 0; c < k.cols(); ++c) EXPECT_TRUE(is_zero_column(k, c));
}

TEST(KernelGens, KoszulSyzygyOfRegularSequence) {
    const LaurentMatrix f = row(2, {"x1 - 1", "x2 - 1"});
    const LaurentMatrix k = kernel_gens(f);
    ASSERT_GE(k.cols(), 1u);
    EXPECT_TRUE((f * k).is_zero());
    // the kernel is free of rank one on (y-1, -(x-1)); some generator is a unit multiple of it
    LaurentMatrix expected(Field::rational(), 2, 2, 1);
    expected(0, 0) = lau("x2 - 1", 2);
    expected(1, 0) = lau("1 - x1", 2);
    bool found = false;
    for (std::size_t c = 0; c < k.cols(); ++c) {
        const LaurentElt& g0 = k(0, c);
        if (g0.is_zero()) continue;
        // unit u with g0 = u (x2 - 1): compare highest terms
        const auto& [ge, gc] = *g0.terms().rbegin();
        const auto& [ee, ec] = *expected(0, 0).terms().rbegin();
        Exponent shift(2);
        for (int j = 0; j < 2; ++j) shift[j] = ge[j] - ee[j];
        const LaurentElt u = LaurentElt::monomial(Field::rational(), shift, gc / ec);
        LaurentMatrix scaled = expected;
        scaled(0, 0) = u * expected(0, 0);
        scaled(1, 0) = u * expected(1, 0);
        if (column_of(k, c) == scaled) found = true;
    }
    EXPECT_TRUE(found);
}

TEST(KernelGens, ZeroMapHasFullKernel) {
    const LaurentMatrix k = kernel_gens(row(1, {"0"}));
    ASSERT_EQ(k.rows(), 1u);
    bool unit = false;
    for (std::size_t c = 0; c < k.cols(); ++c) unit = unit || k(0, c).is_unit();
    EXPECT_TRUE(unit);
}

TEST(KernelGens, RandomKernelsAreAnnihilated) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-1, 1), expo(-1, 1);
    for (int t = 0; t < 12; ++t) {
        const std::size_t d = 1 + t % 2, rows = 1 + t % 2, cols = 2 + t % 2;
        LaurentMatrix f(Field::rational(), d, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                for (int k = 0; k < 2; ++k) {
                    Exponent e(d);
                    for (auto& v : e) v = expo(rng);
                    f(r, c) += LaurentElt::monomial(Field::rational(), e, Field::rational().from_int(coef(rng)));
                }
        EXPECT_TRUE((f * kernel_gens(f)).is_zero());
    }
}

namespace {

FreeComplex single_map(const LaurentElt& e) {
    FreeComplex c;
    c.field = e.field();
    c.lattice_rank = e.rank();
    c.lo = 0;
    c.ranks = {1, 1};
    LaurentMatrix m(e.field(), e.rank(), 1, 1);
    m(0, 0) = e;
    c.differentials = {m};
    return c;
}

}  // namespace

TEST(CohomologyAt, TrivialModuleDualComplexInRankTwo) {
    const Field q = Field::rational();
    const FreeComplex dual = koszul_resolution(FinLengthModule::character(q, {q.one(), q.one()})).dual();
    EXPECT_TRUE(cohomology_at(dual, 0).is_zero());
    EXPECT_TRUE(cohomology_at(dual, 1).is_zero());
    const FinLengthModule top = cohomology_at(dual, 2);
    ASSERT_EQ(top.dimension(), 1u);
    EXPECT_TRUE(top.op(0)(0, 0).is_one());
    EXPECT_TRUE(top.op(1)(0, 0).is_one());
}

TEST(CohomologyAt, CokernelOfLinearMap) {
    const FreeComplex c = single_map(lau("x1 - 5", 1));
    const FinLengthModule h = cohomology_at(c, 1);
    ASSERT_EQ(h.dimension(), 1u);
    EXPECT_EQ(h.op(0)(0, 0), Field::rational().from_int(5));
    const FinLengthModule s = cohomology_at_snf(c, 1);
    EXPECT_TRUE(is_isomorphic(h, s).isomorphic());
    EXPECT_TRUE(cohomology_at(c, 0).is_zero());
}

TEST(CohomologyAt, InfiniteLengthIsReported) {
    const FreeComplex c = single_map(LaurentElt(Field::rational(), 1));
    EXPECT_THROW(cohomology_at(c, 0), NotFiniteLength);
}

TEST(FreeComplex, NonZeroCompositeIsRejected) {
    FreeComplex c;
    c.field = Field::rational();
    c.lattice_rank = 1;
    c.lo = 0;
    c.ranks = {1, 1, 1};
    LaurentMatrix m(c.field, 1, 1, 1);
    m(0, 0) = lau("x1", 1);
    c.differentials = {m, m};
    EXPECT_THROW(c.validate(), InvalidInput);
}

TEST(Groebner, DeterministicAndSatisfiesBuchberger) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-2, 2), expo(0, 2);
    const Field q = Field::rational();
    for (int t = 0; t < 10; ++t) {
        std::vector<gb::Vec> gens;
        for (int g = 0; g < 3; ++g) {
            std::vector<gb::Term> terms;
            for (int k = 0; k < 3; ++k) {
                gb::Term term;
                term.component = static_cast<std::uint32_t>(rng() % 2);
                for (int v = 0; v < 3; ++v) {
                    term.mono.exp[v] = expo(rng);
                    term.mono.degree += term.mono.exp[v];
                }
                term.coeff = q.from_int(coef(rng));
                if (!term.coeff.is_zero()) terms.push_back(term);
            }
            gens.push_back(gb::normalize(terms));
        }
        const auto a = gb::GroebnerBasis::compute(q, 3, gens);
        const auto b = gb::GroebnerBasis::compute(q, 3, gens);
        ASSERT_EQ(a.elements().size(), b.elements().size());
        for (std::size_t i = 0; i < a.elements().size(); ++i) {
            ASSERT_EQ(a.elements()[i].size(), b.elements()[i].size());
            for (std::size_t k = 0; k < a.elements()[i].size(); ++k) {
                EXPECT_EQ(gb::compare(a.elements()[i][k], b.elements()[i][k]), 0);
                EXPECT_EQ(a.elements()[i][k].coeff, b.elements()[i][k].coeff);
            }
        }
        EXPECT_TRUE(a.satisfies_buchberger_criterion());
        for (const auto& g : gens) EXPECT_TRUE(a.normal_form(g).empty());
    }
}

TEST(PresentedModule, FiniteLengthDetection) {
    LaurentMatrix rel(Field::rational(), 2, 1, 2);
    rel(0, 0) = lau("x1 - 2", 2);
    rel(0, 1) = lau("x2 + 1", 2);
    const PresentedModule finite(Field::rational(), 2, 1, rel);
    EXPECT_TRUE(finite.is_finite_length());
    EXPECT_EQ(finite.to_module().dimension(), 1u);

    LaurentMatrix only(Field::rational(), 2, 1, 1);
    only(0, 0) = lau("x1 - 2", 2);
    const PresentedModule infinite(Field::rational(), 2, 1, only);
    EXPECT_FALSE(infinite.is_finite_length());
    EXPECT_THROW(infinite.standard_monomials(), NotFiniteLength);
}

// Every rank-one corpus module: both engines agree in both degrees.
TEST(CrossOracle, GroebnerMatchesSmithOnCorpus) {
    for (const char* f : {"k_a_d1.mod", "corpus_d1.mod", "corpus_d1_cyclotomic3.mod", "corpus_d1_cyclotomic4.mod"}) {
        const ModuleFile file = load_module_file(std::string(LDUAL_TEST_DATA_DIR) + "/" + f);
        for (const auto& [name, m] : file.modules) {
            const FreeComplex dual = koszul_resolution(m).dual();
            for (int i = 0; i <= 1; ++i) {
                const IsoResult r = is_isomorphic(cohomology_at(dual, i), cohomology_at_snf(dual, i));
                EXPECT_TRUE(r.isomorphic()) << f << " " << name << " degree " << i;
            }
        }
    }
}
