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

#include "ldual/io.hpp"
#include "ldual/zalg.hpp"
#include "support.hpp"

using namespace ldual;

namespace {

ZalgFile load(const std::string& name) { return load_zalg_file(std::string(LDUAL_TEST_DATA_DIR) + "/" + name); }

const FinDimModule& module_named(const ZalgFile& f, const std::string& name) {
    for (const auto& m : f.modules)
        if (m.name == name) return m.module;
    throw std::runtime_error("no module " + name);
}

}  // namespace

TEST(ZFiniteAlgebra, RejectsBrokenUnitLaw) {
    const Field q = Field::rational();
    auto c = [&](long v) { return LaurentElt::constant(q, 0, q.from_int(v)); };
    std::vector<std::vector<ZFiniteAlgebra::Elt>> k = {{{c(1), c(0)}, {c(0), c(0)}}, {{c(0), c(1)}, {c(0), c(0)}}};
    EXPECT_THROW(ZFiniteAlgebra(q, CenterRing{}, {"1", "a"}, 0, k), InvalidInput);
    k[0][1] = {c(0), c(1)};
    EXPECT_NO_THROW(ZFiniteAlgebra(q, CenterRing{}, {"1", "a"}, 0, k));
}

TEST(FinDimModule, RejectsNonRepresentation) {
    const ZalgFile f = load("dual_numbers.alg");
    const Field q = f.field;
    EXPECT_THROW(FinDimModule(f.algebra, 1, {Matrix::identity(q, 1), Matrix::identity(q, 1)}), InvalidInput);
}

TEST(ExtDimensions, MatchDerivationOracle) {
    for (const char* name : {"group_z2.alg", "ut2.alg", "dual_numbers.alg", "m2.alg"}) {
        const ZalgFile f = load(name);
        for (const auto& m : f.modules)
            for (const auto& n : f.modules) {
                const auto ext = ext_dimensions(f.algebra, m.module, n.module, 4);
                ASSERT_GE(ext.size(), 1u);
                EXPECT_EQ(ext[0], oracle::algebra_hom_dimension(f.algebra, m.module, n.module)) << name << " " << m.name << "," << n.name;
                const std::size_t e1 = ext.size() > 1 ? ext[1] : 0;
                EXPECT_EQ(e1, oracle::algebra_ext1_dimension(f.algebra, m.module, n.module)) << name << " " << m.name << "," << n.name;
            }
    }
}

TEST(ExtDimensions, UpperTriangularHasOneArrow) {
    const ZalgFile f = load("ut2.alg");
    std::size_t total = 0;
    for (const char* s : {"S1", "S2"})
        for (const char* t : {"S1", "S2"}) total += oracle::algebra_ext1_dimension(f.algebra, module_named(f, s), module_named(f, t));
    EXPECT_EQ(total, 1u);
}

TEST(FreeResolution, SemisimpleIsProjective) {
    const ZalgFile f = load("group_z2.alg");
    for (const auto& m : f.modules) {
        const ProjectiveResolution p = free_resolution(f.algebra, m.module, 4);
        EXPECT_EQ(p.length(), 0u) << m.name;
        EXPECT_FALSE(p.truncated);
        EXPECT_TRUE(oracle::invertible(p.augmentation));
    }
}

TEST(FreeResolution, DualNumbersIsPeriodicAndTruncated) {
    const ZalgFile f = load("dual_numbers.alg");
    const ProjectiveResolution p = free_resolution(f.algebra, f.modules.front().module, 5);
    EXPECT_TRUE(p.truncated);
    for (std::size_t g : p.generator_counts) EXPECT_EQ(g, 1u);
    for (std::size_t i = 0; i + 1 < p.maps.size(); ++i) EXPECT_TRUE((p.maps[i] * p.maps[i + 1]).is_zero());
    const auto ext = ext_dimensions(f.algebra, f.modules.front().module, f.modules.front().module, 5);
    for (std::size_t e : ext) EXPECT_EQ(e, 1u);
}

TEST(FreeResolution, MapsAreModuleMaps) {
    const ZalgFile f = load("ut2.alg");
    for (const auto& m : f.modules) {
        const ProjectiveResolution p = free_resolution(f.algebra, m.module, 4);
        for (std::size_t i = 0; i < p.maps.size(); ++i)
            for (std::size_t b = 0; b < f.algebra.size(); ++b)
                EXPECT_EQ(p.maps[i] * p.terms[i + 1].action(b), p.terms[i].action(b) * p.maps[i]);
        for (std::size_t b = 0; b < f.algebra.size(); ++b)
            EXPECT_EQ(p.augmentation * p.terms[0].action(b), m.module.action(b) * p.augmentation);
    }
}

TEST(Nakayama, UpperTriangularSimples) {
    const ZalgFile f = load("ut2.alg");
    const auto s1 = nakayama_dual(f.algebra, module_named(f, "S1"), 4).cohomology;
    EXPECT_EQ(s1.at(0).dimension(), 2u);
    for (const auto& [i, c] : s1)
        if (i != 0) EXPECT_EQ(c.dimension(), 0u);
    const auto s2 = nakayama_dual(f.algebra, module_named(f, "S2"), 4).cohomology;
    EXPECT_EQ(s2.at(-1).dimension(), 1u);
    EXPECT_EQ(s2.at(0).dimension(), 0u);
    const auto p2 = nakayama_dual(f.algebra, module_named(f, "P2"), 4).cohomology;
    EXPECT_EQ(p2.at(0).dimension(), 1u);
}

TEST(Nakayama, TruncatedResolutionThrows) {
    const ZalgFile f = load("dual_numbers.alg");
    EXPECT_THROW(nakayama_dual(f.algebra, f.modules.front().module, 3), InvalidInput);
}

TEST(Nakayama, SymmetricAlgebraFixesModules) {
    const ZalgFile f = load("group_z2.alg");
    for (const auto& m : f.modules) {
        const auto c = nakayama_dual(f.algebra, m.module, 4).cohomology;
        EXPECT_EQ(oracle::algebra_hom_dimension(f.algebra, c.at(0), m.module), 1u);
        EXPECT_EQ(c.at(0).dimension(), m.module.dimension());
    }
}

TEST(SerrePairing, AllPairs) {
    for (const char* name : {"group_z2.alg", "ut2.alg", "m2.alg"}) {
        const ZalgFile f = load(name);
        for (const auto& m : f.modules)
            for (const auto& n : f.modules) {
                const Report r = verify_serre_pairing(f.algebra, m.module, n.module, 4);
                EXPECT_TRUE(r.passed(false)) << name << " " << m.name << "," << n.name << "\n" << r.to_text();
            }
    }
}

TEST(RadicalBasis, Dimensions) {
    EXPECT_EQ(radical_basis(load("ut2.alg").algebra).cols(), 1u);
    EXPECT_EQ(radical_basis(load("m2.alg").algebra).cols(), 0u);
    EXPECT_EQ(radical_basis(load("dual_numbers.alg").algebra).cols(), 1u);
    EXPECT_EQ(radical_basis(load("group_z2.alg").algebra).cols(), 0u);
}

TEST(HomCenter, DoubleDualAndActions) {
    for (const char* name : {"m2.alg", "ut2.alg", "hecke_a1.alg"}) {
        const ZalgFile f = load(name);
        const HomCenter h = hom_center(f.algebra);
        EXPECT_EQ(h.rank, f.algebra.size());
        EXPECT_TRUE(h.double_dual_matches) << name;
        // left action is a representation: (xy).phi = x.(y.phi)
        for (std::size_t i = 0; i < f.algebra.size(); ++i)
            for (std::size_t j = 0; j < f.algebra.size(); ++j) {
                const auto prod = f.algebra.multiply(f.algebra.basis_element(i), f.algebra.basis_element(j));
                LaurentMatrix lhs(f.field, f.algebra.center().rank, f.algebra.size(), f.algebra.size());
                for (std::size_t k = 0; k < f.algebra.size(); ++k)
                    for (std::size_t r = 0; r < lhs.rows(); ++r)
                        for (std::size_t c = 0; c < lhs.cols(); ++c) lhs(r, c) += prod[k] * h.left[k](r, c);
                EXPECT_EQ(lhs, h.left[i] * h.left[j]) << name << " " << i << "," << j;
            }
    }
}

TEST(FsgProbe, FiniteDimensionalVerdicts) {
    EXPECT_EQ(fsg_probe(load("ut2.alg").algebra).kind, FsgVerdict::Kind::certified_no);
    for (const char* name : {"group_z2.alg", "m2.alg", "dual_numbers.alg"}) {
        const FsgVerdict v = fsg_probe(load(name).algebra);
        EXPECT_EQ(v.kind, FsgVerdict::Kind::certified_yes) << name;
        ASSERT_TRUE(v.gram.has_value());
        EXPECT_EQ(*v.gram, v.gram->transpose());
    }
}

TEST(FsgProbe, ThreadCountDoesNotChangeVerdict) {
    const ZFiniteAlgebra a = load("hecke_a1.alg").algebra;
    const FsgVerdict one = fsg_probe(a, 1, 1);
    const FsgVerdict four = fsg_probe(a, 1, 4);
    EXPECT_EQ(one.kind, four.kind);
    EXPECT_EQ(one.candidates_tested, four.candidates_tested);
}

TEST(Hecke, StructureAndCenter) {
    const ZalgFile f = load("hecke_a1.alg");
    EXPECT_EQ(f.algebra.size(), 4u);
    EXPECT_EQ(f.algebra.center().kind, CenterKind::polynomial);
    EXPECT_EQ(f.parameters.at("q"), "4");
    ASSERT_EQ(f.central_elements.size(), 2u);
    for (const auto& [name, z] : f.central_elements) EXPECT_TRUE(f.algebra.is_central(z)) << name;
    // quadratic relation T^2 = (q - 1) T + q
    const auto t = f.algebra.basis_element(2);
    const auto lhs = f.algebra.multiply(t, t);
    const Field q = f.field;
    const auto rhs = f.algebra.add(f.algebra.scale(LaurentElt::constant(q, 1, q.from_int(3)), t),
                                   f.algebra.scale(LaurentElt::constant(q, 1, q.from_int(4)), f.algebra.basis_element(0)));
    EXPECT_EQ(lhs, rhs);
}
