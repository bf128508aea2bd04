// Copyright 2026 The gencliff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gencliff/catalog.hpp"

#include <gtest/gtest.h>

#include <set>

#include "gencliff/error.hpp"

namespace gencliff {
namespace {

std::set<std::string> exact_set(const MatrixGroup &g) {
    std::set<std::string> out;
    for (const auto &e : g.elements()) {
        out.insert(e.canonical().str());
    }
    return out;
}

TEST(Catalog, FixedEntriesCloseToTheirLibraryOrder) {
    int fixed = 0;
    for (const auto &e : catalog_entries()) {
        if (!e.gap_id || e.name == "pauli") {
            continue;
        }
        fixed++;
        auto g = e.close();
        EXPECT_EQ(static_cast<int>(g.order()), e.gap_id->first) << e.name;
        EXPECT_TRUE(g.is_irreducible()) << e.name;
    }
    EXPECT_EQ(fixed, 8);
}

TEST(Catalog, GLRepresentationsUnitarize) {
    for (const char *name : {"dodecahedral-120-5-rep1", "dodecahedral-120-5-rep2"}) {
        auto g = find_entry(name)->close();
        bool unitary = true;
        for (const auto &gen : g.generators()) {
            unitary = unitary && gen.is_unitary();
        }
        EXPECT_FALSE(unitary) << name;
        auto u = unitarize(g, 1e-9);
        EXPECT_LT(u.residual, 1e-9);
    }
}

TEST(Catalog, FamiliesAreIrreducible) {
    for (const auto &e : catalog_entries()) {
        EXPECT_TRUE(e.close().is_irreducible()) << e.name;
    }
}

TEST(Catalog, BaseGroups) {
    for (int m = 2; m <= 4; m++) {
        auto b = base_group_of(gm(m).close());
        EXPECT_EQ(b.family, "dihedral");
        EXPECT_EQ(b.order, static_cast<std::size_t>(4 * m));
    }
    auto t = base_group_of(find_entry("tetrahedral-M1")->close());
    EXPECT_EQ(t.family, "tetrahedral");
    EXPECT_EQ(t.order, 12u);
    EXPECT_EQ(base_group_of(find_entry("octahedral-96-192")->close()).family, "octahedral");
    EXPECT_EQ(base_group_of(find_entry("dodecahedral-120-5-rep2")->close()).family, "dodecahedral");
    auto p = base_group_of(pauli().close());
    EXPECT_EQ(p.order, 4u);
    EXPECT_EQ(p.family, "klein-four");
    EXPECT_EQ(base_group_of(dihedral_odd(7).close()).order, 14u);
    try {
        base_group_of(tensor_square(pauli().close()));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnrecognizedBaseGroup);
    }
}

TEST(Catalog, SchurMultiplier) {
    EXPECT_EQ(schur_multiplier_dihedral(3), 1);
    EXPECT_EQ(schur_multiplier_dihedral(4), 2);
    EXPECT_EQ(schur_multiplier_dihedral(1), 1);
}

TEST(Catalog, OddDihedralRepsGiveOneMatrixSet) {
    EXPECT_EQ(exact_set(dihedral_odd(5, 1).close()), exact_set(dihedral_odd(5, 2).close()));
    EXPECT_EQ(exact_set(dihedral_odd(7, 1).close()), exact_set(dihedral_odd(7, 3).close()));
}

TEST(Catalog, BinaryDihedralRepsAgreeUpToPhase) {
    auto a = binary_dihedral(4, 1).close();
    auto b = binary_dihedral(4, 3).close();
    for (const auto &e : a.elements()) {
        EXPECT_TRUE(b.find_projective(e).has_value()) << e.str();
    }
    for (const auto &e : b.elements()) {
        EXPECT_TRUE(a.find_projective(e).has_value()) << e.str();
    }
}

TEST(Catalog, FindEntry) {
    EXPECT_EQ(find_entry("Gm(3)")->name, "Gm(3)");
    EXPECT_EQ(find_entry("dihedral-odd(5,2)")->name, "dihedral-odd(5,2)");
    EXPECT_EQ(find_entry("binary-dihedral(4,3)")->generators.size(), 2u);
    EXPECT_EQ(find_entry("octahedral-48-29")->gap_id->second, 29);
    EXPECT_FALSE(find_entry("nonsense").has_value());
    EXPECT_FALSE(find_entry("Gm(2,1)").has_value());
    EXPECT_THROW(find_entry("dihedral-odd(4)"), Error);
    EXPECT_THROW(find_entry("binary-dihedral(4,2)"), Error);
}

TEST(Catalog, PhaseRanges) {
    for (const char *name : {"tetrahedral-M1", "tetrahedral-M2", "tetrahedral-M3", "octahedral-48-29",
                             "dodecahedral-120-5-rep1", "dodecahedral-120-5-rep2", "dihedral-odd(3)", "dihedral-odd(5)",
                             "dihedral-odd(7)"}) {
        auto e = *find_entry(name);
        auto g = e.close();
        int s = static_cast<int>(g.scalars().size());
        auto got = phase_value_cosets(phase_values(compute_phase_functions(g)), s);
        EXPECT_EQ(got, phase_value_cosets(*e.expected_phase_values, s)) << name;
    }
}

TEST(Catalog, PhaseCosetsCompareModuloCentre) {
    // w6 and w3^2 differ by -1, so they agree once s = 2 phases are factored out.
    auto a = phase_value_cosets({Cyclo::root_of_unity(6, 1)}, 2);
    auto b = phase_value_cosets({Cyclo::root_of_unity(3, 2)}, 2);
    EXPECT_EQ(a, b);
    EXPECT_NE(phase_value_cosets({Cyclo::parse("i")}, 2), phase_value_cosets({Cyclo(1)}, 2));
}

TEST(Catalog, SmallVerdicts) {
    NormaliserOptions o;
    for (const char *name : {"Gm(1)", "Gm(2)", "dihedral-odd(3)", "tetrahedral-M1", "binary-dihedral(4,1)",
                             "binary-dihedral(3,1)", "pauli"}) {
        auto row = classify_entry(*find_entry(name), o);
        EXPECT_EQ(row.entangling, row.expected) << name;
        EXPECT_TRUE(row.matches()) << name;
    }
}

TEST(Catalog, RootOfZIsAProjectiveNormaliserOfGm) {
    for (int m = 1; m <= 4; m++) {
        auto g = gm(m).close();
        CMatrix root = CMatrix::diagonal({Cyclo(1), Cyclo::root_of_unity(4 * m, 1)});
        EXPECT_TRUE(normalises(root, g, Mode::Projective)) << m;
        auto rep = find_projective_normalisers(g);
        bool found = false;
        for (const auto &f : rep.found) {
            auto inv = f.matrix.inverse();
            found = found || g.find_projective(*inv * root).has_value();
        }
        EXPECT_TRUE(found) << m;
    }
}

TEST(Catalog, OddDihedralExtensionNormalisersArePermutationLike) {
    for (int n : {3, 5}) {
        auto rep = classify_entangling(dihedral_odd_ext(n).close());
        ASSERT_FALSE(rep.found.empty());
        for (const auto &f : rep.found) {
            EXPECT_TRUE(f.matrix.is_generalised_permutation()) << f.matrix.str();
            EXPECT_FALSE(f.entangling);
            if (f.matrix.is_diagonal()) {
                EXPECT_FALSE(is_entangling(f.matrix));
            }
        }
    }
}

}  // namespace
}  // namespace gencliff
