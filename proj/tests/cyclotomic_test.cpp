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

#include "gencliff/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gencliff/error.hpp"

using gencliff::Cyclo;
using gencliff::Rational;

namespace {

Cyclo w(int n, int k) {
    return Cyclo::root_of_unity(n, k);
}

}  // namespace

TEST(cyclo, roots_of_unity) {
    ASSERT_TRUE(w(1, 0).is_one());
    Cyclo i = w(4, 1);
    ASSERT_EQ(i * i, Cyclo(-1));
    ASSERT_EQ(w(8, 2), i);
    ASSERT_EQ(w(8, 2).conductor(), 4);
    ASSERT_EQ(w(6, 1), -w(3, 2));
    ASSERT_EQ(w(6, 1).conductor(), 3);
    ASSERT_EQ(w(2, 1), Cyclo(-1));
    ASSERT_EQ(w(12, -1), w(12, 11));
}

TEST(cyclo, sqrt2_squares_to_two) {
    Cyclo r2 = w(8, 1) + w(8, 7);
    ASSERT_EQ(r2 * r2, Cyclo(2));
    ASSERT_FALSE(r2.is_rational());
}

TEST(cyclo, field_examples) {
    ASSERT_EQ(w(3, 1) + w(3, 2), Cyclo(-1));
    Cyclo a = w(24, 11).scaled(Rational(1, 2));
    ASSERT_TRUE((a * a.inverse()).is_one());
    ASSERT_EQ(w(4, 1).lifted(8), w(8, 2).lifted(8));
    ASSERT_EQ(w(4, 1).lifted(8).conductor(), 8);
    ASSERT_THROW(Cyclo().inverse(), gencliff::Error);
}

TEST(cyclo, conj_examples) {
    ASSERT_EQ(w(4, 1).conj(), -w(4, 1));
    Cyclo r = Cyclo(Rational(3, 7)) + w(8, 1) + w(8, 7);
    ASSERT_EQ(r.conj(), r);
    ASSERT_EQ(w(24, 11).conj(), w(24, 13));
}

TEST(cyclo, to_complex_examples) {
    ASSERT_EQ(Cyclo(1).to_complex(), std::complex<double>(1.0, 0.0));
    auto z = w(4, 1).to_complex();
    ASSERT_NEAR(z.real(), 0.0, 1e-12);
    ASSERT_NEAR(z.imag(), 1.0, 1e-12);
    auto c = (w(8, 1) + w(8, 7)).scaled(Rational(1, 2)).to_complex();
    ASSERT_NEAR(c.real(), std::cos(std::numbers::pi / 4), 1e-12);
    ASSERT_NEAR(c.imag(), 0.0, 1e-12);
}

TEST(cyclo, canonical_reduces_conductor) {
    Cyclo x = (w(8, 1) + w(8, 7)).lifted(120);
    ASSERT_EQ(x.conductor(), 120);
    ASSERT_EQ(x.canonical().conductor(), 8);
    Cyclo s3 = w(12, 1) + w(12, 11);  // sqrt(3)
    ASSERT_EQ(s3.canonical().conductor(), 12);
    ASSERT_EQ(s3 * s3, Cyclo(3));
    Cyclo half = (w(24, 11) * w(24, 13)).canonical();
    ASSERT_TRUE(half.is_one());
    ASSERT_EQ(half.conductor(), 1);
    // zeta_5 + zeta_5^4 is real but still needs conductor 5.
    ASSERT_EQ((w(5, 1) + w(5, 4)).lifted(15).canonical().conductor(), 5);
}

TEST(cyclo, printer_and_parser_round_trip) {
    Cyclo x = Cyclo::parse("1/2*w24^11 + 1/2*w24^17");
    ASSERT_EQ(x, (w(24, 11) + w(24, 17)).scaled(Rational(1, 2)));
    ASSERT_EQ(Cyclo::parse(x.str()), x);
    ASSERT_EQ(Cyclo::parse("i"), w(4, 1));
    ASSERT_EQ(Cyclo::parse("w4").str(), "w4^1");
    ASSERT_EQ(Cyclo::parse("-w8^-1"), -w(8, 7));
    ASSERT_EQ(Cyclo::parse("1/2*(w8 + w8^7)") * Cyclo::parse("1/2*(w8+w8^7)"), Cyclo(Rational(1, 2)));
    ASSERT_EQ(Cyclo::parse("3 - 5/2").str(), "1/2");
    ASSERT_EQ(Cyclo().str(), "0");
    ASSERT_THROW(Cyclo::parse("w"), gencliff::Error);
    ASSERT_THROW(Cyclo::parse("1 +"), gencliff::Error);
    ASSERT_THROW(Cyclo::parse("w8^1 w8^1"), gencliff::Error);
    ASSERT_THROW(Cyclo::parse("2/0"), gencliff::Error);
}

TEST(cyclo, root_of_unity_exponent) {
    auto e = w(24, 11).root_of_unity_exponent();
    ASSERT_TRUE(e.has_value());
    ASSERT_EQ(*e, std::make_pair(11, 24));
    ASSERT_EQ(*Cyclo(-1).root_of_unity_exponent(), std::make_pair(1, 2));
    ASSERT_EQ(*Cyclo(1).root_of_unity_exponent(), std::make_pair(0, 1));
    ASSERT_EQ(*w(6, 1).root_of_unity_exponent(), std::make_pair(1, 6));
    ASSERT_FALSE(Cyclo(2).root_of_unity_exponent().has_value());
    ASSERT_FALSE((w(8, 1) + w(8, 7)).scaled(Rational(1, 2)).root_of_unity_exponent().has_value());
}

TEST(cyclo, conductor_limit) {
    int old = gencliff::max_conductor();
    gencliff::set_max_conductor(100);
    EXPECT_THROW(w(120, 1), gencliff::Error);
    EXPECT_THROW(w(8, 1) * w(25, 1).lifted(25) * w(3, 1), gencliff::Error);
    gencliff::set_max_conductor(old);
    EXPECT_NO_THROW(w(120, 1));
}

TEST(cyclo, pow_and_galois) {
    ASSERT_TRUE(w(15, 4).pow(15).is_one());
    ASSERT_EQ(w(15, 4).pow(-1), w(15, 11));
    ASSERT_EQ(w(15, 1).galois(2), w(15, 2));
    Cyclo x = w(15, 1) + Cyclo(Rational(2, 3)) * w(15, 7);
    ASSERT_EQ(x.galois(7) * x.galois(7).inverse(), Cyclo(1));
}
