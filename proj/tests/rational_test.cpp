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

#include "gencliff/rational.hpp"

#include <gtest/gtest.h>

#include "gencliff/error.hpp"

using gencliff::Rational;

TEST(rational, normalizes_sign_and_gcd) {
    Rational r(6, -4);
    ASSERT_EQ(r.str(), "-3/2");
    ASSERT_EQ(Rational(0, 5).str(), "0");
    ASSERT_EQ(Rational(10, 5), Rational(2));
    ASSERT_THROW(Rational(1, 0), gencliff::Error);
}

TEST(rational, arithmetic) {
    Rational a(1, 3);
    Rational b(1, 6);
    ASSERT_EQ(a + b, Rational(1, 2));
    ASSERT_EQ(a - b, Rational(1, 6));
    ASSERT_EQ(a * b, Rational(1, 18));
    ASSERT_EQ(a / b, Rational(2));
    ASSERT_EQ(-a, Rational(-1, 3));
    ASSERT_LT(b, a);
    ASSERT_THROW(Rational().inverse(), gencliff::Error);
}

TEST(rational, promotes_past_64_bits_and_demotes_back) {
    Rational big(1LL << 40);
    Rational x = big * big * big;  // 2^120
    ASSERT_FALSE(x.is_small());
    ASSERT_EQ(x.to_mpq(), mpq_class(mpz_class(1) << 120));
    Rational back = x / (big * big);
    ASSERT_TRUE(back.is_small());
    ASSERT_EQ(back, big);
    Rational near((1LL << 61) + 1);
    Rational sum = near + near + near;
    ASSERT_EQ(sum.to_mpq(), 3 * mpq_class(mpz_class(static_cast<long>((1LL << 61) + 1))));
    ASSERT_EQ(sum - near - near, near);
}

TEST(rational, parse_round_trip) {
    for (const char *s : {"0", "7", "-7", "3/4", "-12/5", "123456789012345678901234567891/7"}) {
        ASSERT_EQ(Rational::parse(s).str(), s);
    }
    ASSERT_EQ(Rational::parse(" 4/8 "), Rational(1, 2));
    ASSERT_THROW(Rational::parse("1/"), gencliff::Error);
    ASSERT_THROW(Rational::parse("x"), gencliff::Error);
    ASSERT_THROW(Rational::parse("1/0"), gencliff::Error);
}

TEST(rational, matches_gmp_on_random_mixed_sizes) {
    uint64_t state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    };
    for (int i = 0; i < 2000; i++) {
        long long an = static_cast<long long>(next() >> (1 + next() % 60)) - (1LL << 20);
        long long ad = static_cast<long long>((next() >> (1 + next() % 60)) | 1);
        long long bn = static_cast<long long>(next() >> (1 + next() % 60)) - (1LL << 20);
        long long bd = static_cast<long long>((next() >> (1 + next() % 60)) | 1);
        Rational a(an, ad);
        Rational b(bn, bd);
        mpq_class qa(mpz_class(std::to_string(an)), mpz_class(std::to_string(ad)));
        mpq_class qb(mpz_class(std::to_string(bn)), mpz_class(std::to_string(bd)));
        qa.canonicalize();
        qb.canonicalize();
        ASSERT_EQ((a + b).to_mpq(), qa + qb);
        ASSERT_EQ((a - b).to_mpq(), qa - qb);
        ASSERT_EQ((a * b).to_mpq(), qa * qb);
        if (bn != 0) {
            ASSERT_EQ((a / b).to_mpq(), qa / qb);
        }
        ASSERT_EQ(a < b, qa < qb);
    }
}
