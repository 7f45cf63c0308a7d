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

#include <random>

#include "oracles.hpp"
#include "shufcong/errors.hpp"
#include "shufcong/poly.hpp"

namespace shufcong {
namespace {

using testing::Counts;

const Alphabet kAb({"a", "b"});
const Semiring kZ = Semiring::integers();

Word w(const char* text) { return kAb.parse_word(text); }

Poly from_counts(const Semiring& k, const Counts& counts) {
    Poly p(k);
    for (const auto& [word, c] : counts) p.add_term(word, k.from_integer(c));
    return p;
}

TEST(Poly, ShuffleMatchesInterleavings) {
    for (const auto& u : words_up_to(2, 4)) {
        for (const auto& v : words_up_to(2, 3)) {
            const Poly got = shuffle_product(Poly::monomial(kZ, u), Poly::monomial(kZ, v));
            EXPECT_EQ(got, from_counts(kZ, testing::interleavings(u, v)))
                << kAb.format(u) << " sh " << kAb.format(v);
        }
    }
}

TEST(Poly, InfiltrationMatchesPositionOracle) {
    for (std::int64_t q : {1, 2, -1}) {
        for (const auto& u : words_up_to(2, 3)) {
            for (const auto& v : words_up_to(2, 3)) {
                const Poly got = cq_product(Poly::monomial(kZ, u), Poly::monomial(kZ, v), q);
                EXPECT_EQ(got, from_counts(kZ, testing::infiltration_oracle(u, v, q)))
                    << kAb.format(u) << " q=" << q << " " << kAb.format(v);
            }
        }
    }
}

TEST(Poly, KnownProducts) {
    EXPECT_EQ(format_poly(kAb, shuffle_product(Poly::monomial(kZ, w("a")), Poly::monomial(kZ, w("ab")))),
              "2*aab + aba");
    EXPECT_EQ(format_poly(kAb, infiltration_product(Poly::monomial(kZ, w("a")), Poly::monomial(kZ, w("a")))),
              "a + 2*aa");
    const Semiring z2 = Semiring::integers_mod(2);
    EXPECT_EQ(format_poly(kAb, shuffle_product(Poly::monomial(z2, w("a")), Poly::monomial(z2, w("a")))), "0");
}

TEST(Poly, CoproductMatchesSplittings) {
    for (const auto& word : words_up_to(2, 6)) {
        TensorPoly expected(kZ);
        for (const auto& [key, c] : testing::splittings(word)) expected.add_term(key.first, key.second, c);
        EXPECT_EQ(coproduct(Poly::monomial(kZ, word)), expected) << kAb.format(word);
    }
}

TEST(Poly, ShuffleIsCommutativeAndAssociative) {
    std::mt19937_64 rng(20261018);
    for (int i = 0; i < 40; ++i) {
        Poly p = testing::random_poly(rng, kZ, 2, 3, 3);
        Poly q = testing::random_poly(rng, kZ, 2, 3, 3);
        Poly r = testing::random_poly(rng, kZ, 2, 2, 2);
        EXPECT_EQ(shuffle_product(p, q), shuffle_product(q, p));
        EXPECT_EQ(shuffle_product(shuffle_product(p, q), r), shuffle_product(p, shuffle_product(q, r)));
        EXPECT_EQ(cq_product(cq_product(p, q, 3), r, 3), cq_product(p, cq_product(q, r, 3), 3));
    }
}

TEST(Poly, CoproductIsConcatenationMorphism) {
    for (std::int64_t q : {0, 1}) {
        for (const auto& u : words_up_to(2, 3)) {
            for (const auto& v : words_up_to(2, 3)) {
                const TensorPoly lhs = cq_coproduct(Poly::monomial(kZ, u + v), q);
                const TensorPoly rhs =
                    tensor_concat(cq_coproduct(Poly::monomial(kZ, u), q), cq_coproduct(Poly::monomial(kZ, v), q));
                EXPECT_EQ(lhs, rhs);
            }
        }
    }
}

TEST(Poly, SemiringMismatchIsRejected) {
    Poly p = Poly::monomial(kZ, w("a"));
    Poly q = Poly::monomial(Semiring::integers_mod(2), w("a"));
    EXPECT_THROW(p += q, UsageError);
    EXPECT_THROW(shuffle_product(p, q), UsageError);
}

TEST(Poly, ParseFormatRoundTrip) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Poly p = testing::random_poly(rng, kZ, 2, 4, 4);
        EXPECT_EQ(parse_poly(kAb, kZ, format_poly(kAb, p)), p) << format_poly(kAb, p);
    }
    EXPECT_EQ(format_poly(kAb, parse_poly(kAb, kZ, "3 - 2*ab + ba")), "3 - 2*ab + ba");
    EXPECT_THROW(parse_poly(kAb, kZ, "2*"), ParseError);
    EXPECT_THROW(parse_poly(kAb, kZ, "ac"), ParseError);
}

TEST(Poly, NegativeCoefficientsNormalizeModN) {
    const Semiring z3 = Semiring::integers_mod(3);
    Poly p = parse_poly(kAb, z3, "a - b");
    EXPECT_EQ(p.coefficient(w("b")), 2);
    EXPECT_THROW(parse_poly(kAb, Semiring::naturals(), "a - b"), UsageError);
}

TEST(Poly, HadamardIsPointwise) {
    Poly p = parse_poly(kAb, kZ, "2*a + 3*ab");
    Poly q = parse_poly(kAb, kZ, "5*ab - b");
    EXPECT_EQ(format_poly(kAb, hadamard_product(p, q)), "15*ab");
}

} // namespace
} // namespace shufcong
