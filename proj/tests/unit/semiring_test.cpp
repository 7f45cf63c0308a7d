/*
 *   Copyright 2026 The shufcong Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "shufcong/errors.hpp"
#include "shufcong/semiring.hpp"

namespace shufcong {
namespace {

TEST(Semiring, ParseRoundTrip) {
    for (const char* text : {"N", "B", "Z", "Z/2", "Z/6", "Z/97"}) {
        EXPECT_EQ(Semiring::parse(text).to_string(), text);
    }
    EXPECT_THROW(Semiring::parse("Q"), ParseError);
    EXPECT_THROW(Semiring::parse("Z/1"), UsageError);
    EXPECT_THROW(Semiring::parse("Z/x"), ParseError);
}

TEST(Semiring, BooleanIsIdempotent) {
    const Semiring b = Semiring::boolean();
    EXPECT_EQ(b.add(b.one(), b.one()), b.one());
    EXPECT_EQ(b.from_integer(5), b.one());
    EXPECT_EQ(b.mul(b.one(), b.zero()), b.zero());
    EXPECT_FALSE(b.is_ring());
    EXPECT_THROW(b.neg(b.one()), UsageError);
}

TEST(Semiring, NaturalsRejectNegatives) {
    const Semiring n = Semiring::naturals();
    EXPECT_EQ(n.add(2, 3), 5);
    EXPECT_THROW(n.from_integer(-1), UsageError);
    EXPECT_THROW(n.neg(1), UsageError);
}

TEST(Semiring, ModularArithmetic) {
    const Semiring z6 = Semiring::integers_mod(6);
    EXPECT_EQ(z6.from_integer(-1), 5);
    EXPECT_EQ(z6.add(4, 5), 3);
    EXPECT_EQ(z6.mul(4, 5), 2);
    EXPECT_EQ(z6.neg(2), 4);
    EXPECT_EQ(z6.inverse(5), Value(5));
    EXPECT_FALSE(z6.inverse(2).has_value());
    const Semiring z3 = Semiring::integers_mod(3);
    EXPECT_EQ(z3.inverse(2), Value(2));
}

TEST(Semiring, ExactIntegers) {
    const Semiring z = Semiring::integers();
    BigInt big = 1;
    for (int i = 0; i < 100; ++i) big = z.mul(big, 2);
    EXPECT_EQ(z.sub(big, big), 0);
    EXPECT_EQ(z.inverse(-1), Value(-1));
    EXPECT_FALSE(z.inverse(2).has_value());
}

TEST(Semiring, Classification) {
    using K = SemiringClass::Kind;
    EXPECT_EQ(classify_semiring(Semiring::boolean()).kind, K::BooleanIdempotent);
    EXPECT_EQ(classify_semiring(Semiring::naturals()).kind, K::NonRing);
    EXPECT_EQ(classify_semiring(Semiring::integers()).kind, K::RingChar0);
    EXPECT_EQ(classify_semiring(Semiring::integers_mod(7)), (SemiringClass{K::RingCharPrime, 7}));
    EXPECT_EQ(classify_semiring(Semiring::integers_mod(6)), (SemiringClass{K::RingCharComposite, 6}));
    EXPECT_EQ(classify_semiring(Semiring::integers_mod(4)).kind, K::RingCharComposite);
}

TEST(Semiring, PrimalityAgreesWithSieve) {
    std::vector<bool> composite(500, false);
    for (std::uint64_t i = 2; i < 500; ++i) {
        if (!composite[i]) {
            for (std::uint64_t j = i * i; j < 500; j += i) composite[j] = true;
        }
        EXPECT_EQ(is_prime(i), !composite[i]) << i;
    }
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
}

} // namespace
} // namespace shufcong
