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

#include "gencliff/matrix_group.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gencliff/error.hpp"

namespace gencliff {
namespace {

CMatrix m2(const char *a, const char *b, const char *c, const char *d) {
    return CMatrix::parse({{a, b}, {c, d}});
}

const CMatrix kX = m2("0", "1", "1", "0");
const CMatrix kZ = m2("1", "0", "0", "-1");
const CMatrix kH = m2("w8", "w8", "w8", "-w8").scaled(Cyclo::parse("w8^7")).scaled(Cyclo::parse("w8+w8^7").inverse());
const CMatrix kP = m2("1", "0", "0", "i");

CMatrix iI(int d) {
    return CMatrix::identity(d).scaled(Cyclo::parse("i"));
}

// Naive closure with a linear-scan membership test; the oracle for order counts.
std::vector<CMatrix> naive_closure(const std::vector<CMatrix> &gens) {
    std::vector<CMatrix> out{CMatrix::identity(gens[0].dim())};
    for (std::size_t i = 0; i < out.size(); i++) {
        for (const auto &g : gens) {
            CMatrix p = out[i] * g;
            bool seen = false;
            for (const auto &e : out) {
                if (e == p) {
                    seen = true;
                    break;
                }
            }
            if (!seen) {
                out.push_back(p);
            }
        }
    }
    return out;
}

TEST(MatrixGroup, PauliOrders) {
    EXPECT_EQ(MatrixGroup::close({kX, kZ}).order(), 8u);
    EXPECT_EQ(MatrixGroup::close({kX, kZ, iI(2)}).order(), 16u);
    EXPECT_EQ(MatrixGroup::close({CMatrix::identity(2)}).order(), 1u);
    EXPECT_EQ(MatrixGroup::close({kH, kP}).order(), naive_closure({kH, kP}).size());
    EXPECT_EQ(MatrixGroup::close({kH, kP}).order(), 192u);
}

TEST(MatrixGroup, IdentityFirstAndWords) {
    auto g = MatrixGroup::close({kH, kP});
    EXPECT_TRUE(g.element(0).is_identity());
    for (std::size_t i = 0; i < g.order(); i++) {
        CMatrix p = CMatrix::identity(2);
        for (auto t : g.word(i)) {
            p = p * g.generators()[t];
        }
        ASSERT_EQ(p, g.element(i));
    }
}

TEST(MatrixGroup, ElementOrders) {
    auto pauli = MatrixGroup::close({kX, kZ, iI(2)});
    EXPECT_EQ(element_order(kX, pauli), 2);
    EXPECT_EQ(element_order(iI(2), pauli), 4);
    EXPECT_EQ(element_order(CMatrix::identity(2), pauli), 1);
    for (int m = 1; m <= 6; m++) {
        CMatrix root = CMatrix::diagonal({Cyclo(1), Cyclo::root_of_unity(2 * m, 1)});
        auto g = MatrixGroup::close({root});
        EXPECT_EQ(element_order(root, g), 2 * m) << m;
    }
    EXPECT_THROW(
        {
            try {
                element_order(kP, pauli);
            } catch (const Error &e) {
                EXPECT_EQ(e.kind(), ErrorKind::NotAMember);
                throw;
            }
        },
        Error);
}

TEST(MatrixGroup, InversesAndOrdersMatchExactPowers) {
    auto g = MatrixGroup::close({kH, kP});
    for (std::size_t i = 0; i < g.order(); i++) {
        const CMatrix &e = g.element(i);
        ASSERT_TRUE((e * g.element(g.inverse(i))).is_identity());
        int k = g.element_order(i);
        ASSERT_TRUE(e.pow(k).is_identity());
        for (int j = 1; j < k; j++) {
            if (k % j == 0) {
                ASSERT_FALSE(e.pow(j).is_identity());
            }
        }
    }
}

TEST(MatrixGroup, MultiplyMatchesMatrixProduct) {
    auto g = MatrixGroup::close({kH, kP});
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (int trial = 0; trial < 2000; trial++) {
        std::size_t a = pick(rng);
        std::size_t b = pick(rng);
        ASSERT_EQ(g.element(g.multiply(a, b)), g.element(a) * g.element(b));
    }
}

TEST(MatrixGroup, Centre) {
    auto pauli = compute_centre(MatrixGroup::close({kX, kZ, iI(2)}));
    EXPECT_EQ(pauli.s, 4);
    EXPECT_EQ(pauli.min_phase, Cyclo::parse("i"));
    EXPECT_EQ(compute_centre(MatrixGroup::close({kX, kZ})).s, 2);
    EXPECT_EQ(compute_centre(MatrixGroup::close({CMatrix::identity(2)})).s, 1);
    EXPECT_EQ(compute_centre(MatrixGroup::close({kH, kP})).s, 8);
    try {
        compute_centre(MatrixGroup::close({kZ}));
        FAIL() << "expected NonScalarCentre";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonScalarCentre);
    }
}

TEST(MatrixGroup, Irreducible) {
    EXPECT_TRUE(is_irreducible(MatrixGroup::close({kX, kZ, iI(2)})));
    EXPECT_FALSE(is_irreducible(MatrixGroup::close({kZ})));
    CMatrix z3 = CMatrix::diagonal({Cyclo(1), Cyclo::root_of_unity(6, 1)});
    EXPECT_TRUE(is_irreducible(MatrixGroup::close({kX, z3})));
    EXPECT_FALSE(is_irreducible(MatrixGroup::close({kX})));
}

TEST(MatrixGroup, TensorSquareMatchesGenericClosure) {
    for (auto gens : {std::vector<CMatrix>{kX, kZ, iI(2)}, std::vector<CMatrix>{kX, kZ}}) {
        auto g = MatrixGroup::close(gens);
        auto sq = tensor_square(g);
        std::vector<CMatrix> big;
        for (const auto &x : gens) {
            big.push_back(kron(x, CMatrix::identity(2)));
            big.push_back(kron(CMatrix::identity(2), x));
        }
        auto direct = MatrixGroup::close(big);
        ASSERT_EQ(sq.order(), direct.order());
        for (std::size_t i = 0; i < sq.order(); i++) {
            ASSERT_TRUE(direct.find(sq.element(i)).has_value());
            auto [a, b] = *sq.tensor_factors(i);
            ASSERT_EQ(sq.element(i), kron(g.element(a), g.element(b)));
        }
        for (std::size_t a = 0; a < sq.order(); a += 3) {
            for (std::size_t b = 0; b < sq.order(); b += 5) {
                ASSERT_EQ(sq.element(sq.multiply(a, b)), sq.element(a) * sq.element(b));
            }
        }
    }
    EXPECT_EQ(tensor_square(MatrixGroup::close({kX, kZ, iI(2)})).order(), 64u);
    EXPECT_EQ(tensor_square(MatrixGroup::close({kX, kZ})).order(), 32u);
}

TEST(MatrixGroup, CentralExtensionMatchesGenericClosure) {
    auto g = MatrixGroup::close({kX, kZ});
    for (int k : {1, 2, 3, 4, 6, 8}) {
        auto ext = central_extension(g, k);
        std::vector<CMatrix> gens{kX, kZ, CMatrix::identity(2).scaled(Cyclo::root_of_unity(k, 1))};
        auto direct = MatrixGroup::close(gens);
        ASSERT_EQ(ext.order(), direct.order()) << k;
        for (std::size_t a = 0; a < ext.order(); a++) {
            ASSERT_TRUE(direct.find(ext.element(a)).has_value());
            for (std::size_t t = 0; t < ext.num_generators(); t++) {
                ASSERT_EQ(ext.element(ext.right_multiply(a, t)), ext.element(a) * ext.generators()[t]);
            }
        }
    }
}

TEST(MatrixGroup, FindProjective) {
    auto pauli = MatrixGroup::close({kX, kZ, iI(2)});
    CMatrix y = (kX * kZ).scaled(Cyclo::parse("w8"));
    auto all = pauli.find_projective_all(y);
    ASSERT_EQ(all.size(), 4u);
    for (const auto &m : all) {
        EXPECT_EQ(pauli.element(m.index).scaled(m.scalar), y);
    }
    EXPECT_EQ(all.front().scalar, Cyclo::parse("w8"));
    EXPECT_FALSE(pauli.find_projective(kH).has_value());
    EXPECT_FALSE(pauli.find(y).has_value());
}

TEST(MatrixGroup, ProjectiveOrderAndClasses) {
    auto pauli = MatrixGroup::close({kX, kZ, iI(2)});
    for (std::size_t i = 0; i < pauli.order(); i++) {
        int expect = pauli.element(i).scalar_value() ? 1 : 2;
        EXPECT_EQ(pauli.projective_order(i), expect);
    }
    std::vector<std::size_t> all(pauli.order());
    for (std::size_t i = 0; i < all.size(); i++) {
        all[i] = i;
    }
    // 4 central classes plus {+-X}, {+-iX}, ... : 4 + 6 = 10.
    EXPECT_EQ(pauli.class_representatives(all).size(), 10u);
}

TEST(MatrixGroup, ReducedGenerators) {
    auto g = MatrixGroup::close({kX, kZ, kX * kZ, iI(2), iI(2) * iI(2)});
    auto kept = reduced_generator_set(g);
    std::vector<std::size_t> expect{0, 1, 3};
    EXPECT_EQ(kept, expect);
    EXPECT_EQ(g.subgroup_order(kept), g.order());
}

TEST(MatrixGroup, Budget) {
    ClosureOptions o;
    o.max_order = 100;
    try {
        MatrixGroup::close({kH, kP}, o);
        FAIL() << "expected ClosureBudgetExceeded";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ClosureBudgetExceeded);
    }
}

TEST(MatrixGroup, InvalidGenerators) {
    try {
        MatrixGroup::close({m2("1", "1", "1", "1")});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::SingularGenerator);
    }
    try {
        MatrixGroup::close({kX, CMatrix::identity(3)});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(MatrixGroup, Unitarize) {
    CMatrix a = m2("1", "1", "0", "2");
    CMatrix a_inv = *a.inverse();
    auto g = MatrixGroup::close({a_inv * kX * a, a_inv * kZ * a});
    ASSERT_EQ(g.order(), 8u);
    EXPECT_FALSE(g.element(g.generator_index(0)).is_unitary());
    auto u = unitarize(g, 1e-9);
    EXPECT_LT(u.residual, 1e-9);
    ASSERT_EQ(u.images.size(), g.order());
    for (std::size_t i = 0; i < g.order(); i++) {
        EXPECT_NEAR(std::abs(u.images[i].trace() - g.approx_trace(i)), 0.0, 1e-9);
    }
    auto already = unitarize(MatrixGroup::close({kH, kP}), 1e-9);
    EXPECT_LT(max_abs_diff(already.e, ComplexMatrix::identity(2)), 1e-9);
}

}  // namespace
}  // namespace gencliff
