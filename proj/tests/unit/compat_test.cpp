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

#include "oracles.hpp"
#include "shufcong/compat.hpp"

namespace shufcong {
namespace {

using testing::pres;

const char* const kCommute = "alphabet a b\nrelator a b = b a\n";
const char* const kSquares = "alphabet a b\nrelator a a = b b\n";
const char* const kErase = "alphabet a b\nrelator a = 1\n";
const char* const kPowerPair = "alphabet a b\nrelator a^2 = b^4\n";
const char* const kPowerCommutations =
    "alphabet a b\n"
    "relator a^2 b^2 a^2 b^2 = b^2 a^2 b^2 a^2\n"
    "relator a^4 b^2 = b^2 a^4\n"
    "relator b^4 a^2 = a^2 b^4\n";

bool compatible(const char* text, const Semiring& k) {
    QuotientContext ctx(pres(text));
    return check_compatibility(ctx, k).compatible;
}

TEST(Compat, CommutationIsCompatibleEverywhere) {
    for (const char* k : {"N", "B", "Z", "Z/2", "Z/6"}) EXPECT_TRUE(compatible(kCommute, Semiring::parse(k))) << k;
}

TEST(Compat, SquaresOnlyInCharacteristicTwo) {
    EXPECT_TRUE(compatible(kSquares, Semiring::integers_mod(2)));
    for (const char* k : {"Z", "Z/3", "Z/6", "N"}) EXPECT_FALSE(compatible(kSquares, Semiring::parse(k))) << k;
}

TEST(Compat, ErasureOnlyOverBooleans) {
    EXPECT_TRUE(compatible(kErase, Semiring::boolean()));
    for (const char* k : {"N", "Z", "Z/2"}) EXPECT_FALSE(compatible(kErase, Semiring::parse(k))) << k;
}

TEST(Compat, WitnessesVerifyIndependently) {
    for (const char* text : {kSquares, kErase, kPowerPair, kPowerCommutations, "alphabet a b\nrelator a = a b\n"}) {
        for (const char* k : {"Z", "Z/6", "N"}) {
            const Semiring ring = Semiring::parse(k);
            QuotientContext ctx(pres(text));
            CompatReport r = check_compatibility(ctx, ring);
            ASSERT_FALSE(r.compatible) << text << k;
            ASSERT_TRUE(r.witness.has_value());
            EXPECT_TRUE(verify_witness(ctx, ring, *r.witness)) << text << k;
            CompatWitness forged = *r.witness;
            forged.coeff_v = forged.coeff_u;
            EXPECT_FALSE(verify_witness(ctx, ring, forged));
        }
    }
}

TEST(Compat, SplitCoefficientMatchesCoproduct) {
    const auto p = pres(kCommute);
    QuotientContext ctx(p);
    const Alphabet& ab = p.alphabet();
    const Semiring z = Semiring::integers();
    const Word w = ab.parse_word("abab");
    const TensorPoly reduced = ctx.reduce_tensor(coproduct(Poly::monomial(z, w)));
    for (const auto& [key, c] : reduced.terms()) {
        EXPECT_EQ(split_coefficient(ctx, z, w, key.first, key.second), c);
    }
    EXPECT_EQ(split_coefficient(ctx, z, w, ab.parse_word("ab"), ab.parse_word("ab")), 4);
}

// The binomial fact behind characteristic-p compatibility: C(p^a, p^(a-1))
// is 0 mod p but not mod p^2.
TEST(Compat, BinomialFactForPrimePowers) {
    for (std::int64_t p : {2, 3, 5}) {
        for (std::int64_t alpha : {1, 2}) {
            std::int64_t n = 1;
            for (std::int64_t i = 0; i < alpha; ++i) n *= p;
            const std::int64_t c = testing::binomial(n, n / p);
            EXPECT_EQ(c % p, 0) << p << "^" << alpha;
            EXPECT_NE(c % (p * p), 0) << p << "^" << alpha;
        }
    }
}

TEST(Compat, PrimitiveElements) {
    const auto p = pres(kCommute);
    QuotientContext ctx(p);
    const Alphabet& ab = p.alphabet();
    const Semiring z = Semiring::integers();
    EXPECT_TRUE(is_primitive(ctx, z, parse_poly(ab, z, "a")));
    EXPECT_FALSE(is_primitive(ctx, z, parse_poly(ab, z, "ab")));
    QuotientContext free_ctx{Presentation(ab)};
    EXPECT_TRUE(is_primitive(free_ctx, z, parse_poly(ab, z, "ab - ba")));
    const Semiring z2 = Semiring::integers_mod(2);
    EXPECT_TRUE(is_primitive(free_ctx, z2, parse_poly(ab, z2, "aa")));
    EXPECT_FALSE(is_primitive(free_ctx, z, parse_poly(ab, z, "aa")));
    QuotientContext squares(pres(kSquares));
    EXPECT_THROW(is_primitive(squares, z, parse_poly(ab, z, "a")), PreconditionViolated);
}

TEST(Partition, ExampleOneHasDepthOne) {
    const auto p = pres(kPowerPair);
    const Semiring z2 = Semiring::integers_mod(2);
    for (auto conv : {PartitionConvention::AsWritten, PartitionConvention::Cumulative}) {
        PrimitivePartition part = primitive_partition(p, z2, {}, conv);
        EXPECT_EQ(part.depth(), 1U);
        const Alphabet& ab = p.alphabet();
        const Relator generator = oriented(ab.parse_word("aa"), ab.parse_word("bbbb"));
        EXPECT_NE(std::find(part.layers[0].begin(), part.layers[0].end(), generator), part.layers[0].end());
        EXPECT_TRUE(verify_partition(p, z2, part));
        EXPECT_TRUE(part.leftover.empty());
    }
}

TEST(Partition, ExampleTwoHasDepthTwo) {
    const auto p = pres(kPowerCommutations);
    const Semiring z2 = Semiring::integers_mod(2);
    for (auto conv : {PartitionConvention::AsWritten, PartitionConvention::Cumulative}) {
        PrimitivePartition part = primitive_partition(p, z2, {}, conv);
        EXPECT_EQ(part.depth(), 2U);
        EXPECT_TRUE(verify_partition(p, z2, part));
        const Alphabet& ab = p.alphabet();
        const Relator long_relator = oriented(ab.parse_word("aabbaabb"), ab.parse_word("bbaabbaa"));
        EXPECT_EQ(std::count(part.layers[0].begin(), part.layers[0].end(), long_relator), 0);
        EXPECT_EQ(std::count(part.layers[1].begin(), part.layers[1].end(), long_relator), 1);
    }
}

TEST(Partition, CommutationHasOneLayer) {
    const auto p = pres(kCommute);
    PrimitivePartition part = primitive_partition(p, Semiring::integers_mod(2));
    ASSERT_EQ(part.depth(), 1U);
    EXPECT_EQ(part.layers[0].size(), 1U);
}

TEST(Partition, Preconditions) {
    EXPECT_THROW(primitive_partition(pres(kPowerPair), Semiring::integers()), NonPrimeCharacteristic);
    EXPECT_THROW(primitive_partition(pres(kPowerPair), Semiring::integers_mod(6)), NonPrimeCharacteristic);
    EXPECT_THROW(primitive_partition(pres(kSquares), Semiring::integers_mod(3)), PreconditionViolated);
    EXPECT_EQ(primitive_partition(Presentation(Alphabet({"a"})), Semiring::integers_mod(2)).depth(), 0U);
}

TEST(Partition, LayersAndAbsorbedSetsCoverTheClosure) {
    for (const char* text : {kPowerPair, kPowerCommutations, kCommute, "alphabet a b c\nrelator a a = b b\nrelator b b = c c\n"}) {
        const auto p = pres(text);
        PrimitivePartition part = primitive_partition(p, Semiring::integers_mod(2));
        std::size_t covered = part.leftover.size();
        for (const auto& l : part.layers) covered += l.size();
        for (const auto& s : part.absorbed) covered += s.size();
        EXPECT_EQ(covered, part.closure.size()) << text;
        EXPECT_TRUE(part.leftover.empty()) << text;
    }
}

TEST(Classify, CaseSplit) {
    auto kind = [](const char* text, const char* k) {
        return classify_quotient(pres(text), Semiring::parse(k)).index();
    };
    EXPECT_EQ(kind(kCommute, "Z"), 0U);
    EXPECT_EQ(kind(kCommute, "N"), 0U);
    EXPECT_EQ(kind(kCommute, "Z/6"), 0U);
    EXPECT_EQ(kind(kCommute, "Z/2"), 1U);
    EXPECT_EQ(kind(kPowerPair, "Z/2"), 1U);
    EXPECT_EQ(kind(kPowerPair, "Z"), 2U);
    EXPECT_EQ(kind(kPowerPair, "Z/6"), 2U);
    EXPECT_EQ(kind(kSquares, "Z/3"), 2U);
    EXPECT_EQ(kind(kErase, "B"), 0U);
    EXPECT_EQ(kind(kErase, "N"), 2U);
    EXPECT_EQ(kind("alphabet a b c\nrelator a = b\nrelator a c = c b\n", "Z"), 0U);
}

TEST(Classify, PartiallyCommutativeDetails) {
    const auto p = pres("alphabet a b c\nrelator a = b\nrelator a c = c b\nrelator c = 1\n");
    auto c = classify_quotient(p, Semiring::boolean());
    auto* pc = std::get_if<PartiallyCommutative>(&c);
    ASSERT_NE(pc, nullptr);
    EXPECT_EQ(pc->erasures, (std::vector<Letter>{2}));
    ASSERT_EQ(pc->identifications.size(), 1U);
    EXPECT_EQ(pc->identifications[0], (std::vector<Letter>{0, 1}));
    EXPECT_TRUE(pc->theta.pairs().empty());
}

TEST(Classify, IncompatibleCarriesVerifiableWitness) {
    const auto p = pres("alphabet a b\nrelator a b = b b\n");
    const Semiring b = Semiring::boolean();
    auto c = boolean_classify(p);
    auto* inc = std::get_if<IncompatibleQuotient>(&c);
    ASSERT_NE(inc, nullptr);
    QuotientContext ctx(p);
    EXPECT_TRUE(verify_witness(ctx, b, *inc->report.witness));
}

// Pairs (u, v) of shapes (x^(p^i), y^(p^j)) and (x^(p^i) y^(p^j), y^(p^j) x^(p^i)).
bool power_shape(const Word& u, const Word& v, std::uint64_t p) {
    auto power_of_p = [p](std::size_t n) {
        if (n == 0) return false;
        while (n % p == 0) n /= p;
        return n == 1;
    };
    auto block = [&](const Word& w) -> std::optional<std::pair<Letter, std::size_t>> {
        if (w.empty() || w.count(w[0]) != w.size()) return std::nullopt;
        return std::make_pair(w[0], w.size());
    };
    auto bu = block(u);
    auto bv = block(v);
    if (bu && bv) return power_of_p(bu->second) && power_of_p(bv->second);
    if (u.size() != v.size() || u.empty()) return false;
    std::size_t m = 1;
    while (m < u.size() && u[m] == u[0]) ++m;
    auto rest = block(u.substr(m));
    if (!rest || rest->first == u[0]) return false;
    return power_of_p(m) && power_of_p(rest->second) && v == u.substr(m) + u.substr(0, m);
}

TEST(Binomials, FreeCaseMatchesShapePredicate) {
    const Alphabet ab({"a", "b"});
    for (auto [p, maxlen] : {std::pair<std::uint64_t, std::size_t>{2, 4}, {3, 3}}) {
        auto got = classify_primitive_binomials(p, ab, ThetaGraph(2), maxlen);
        std::vector<std::pair<Word, Word>> expected;
        const auto words = words_up_to(2, maxlen);
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                if (power_shape(words[i], words[j], p) || power_shape(words[j], words[i], p)) {
                    expected.emplace_back(words[i], words[j]);
                }
            }
        }
        EXPECT_EQ(got, expected) << "p=" << p;
    }
}

TEST(Binomials, CommutingAlphabet) {
    const Alphabet ab({"a", "b"});
    const ThetaGraph theta(2, {{0, 1}});
    auto got = classify_primitive_binomials(2, ab, theta, 2);
    auto has = [&](const char* u, const char* v) {
        return std::find(got.begin(), got.end(), std::make_pair(ab.parse_word(u), ab.parse_word(v))) != got.end();
    };
    EXPECT_TRUE(has("a", "b"));
    EXPECT_TRUE(has("aa", "bb"));
    EXPECT_FALSE(has("a", "ab"));
    for (const auto& [u, v] : got) EXPECT_EQ(canonical_word(theta, u), u);
}

TEST(PowerRelators, ConsistentSystemGivesWeights) {
    auto r = pli_consistency(pres("alphabet a b\nrelator a^2 = b^4\nrelator a^4 = b^8\n"), 2);
    auto* ok = std::get_if<PliConsistent>(&r);
    ASSERT_NE(ok, nullptr);
    EXPECT_EQ(ok->d.at({0, 1}), -1);
    EXPECT_EQ(ok->h, (std::vector<std::int64_t>{2, 1}));
    EXPECT_EQ(ok->omega, WeightFn({4, 2}));
    const Alphabet ab({"a", "b"});
    EXPECT_EQ(ok->omega(ab.parse_word("aa")), ok->omega(ab.parse_word("bbbb")));
}

TEST(PowerRelators, Inconsistencies) {
    auto r = pli_consistency(pres("alphabet a b\nrelator a^2 = b^2\nrelator a^4 = b^2\n"), 2);
    ASSERT_TRUE(std::holds_alternative<NonCancellable>(r));
    auto same = pli_consistency(pres("alphabet a\nrelator a^2 = a^4\n"), 2);
    ASSERT_TRUE(std::holds_alternative<NonCancellable>(same));
    auto cycle = pli_consistency(
        pres("alphabet a b c\nrelator a^2 = b\nrelator b^2 = c\nrelator c^2 = a\n"), 2);
    ASSERT_TRUE(std::holds_alternative<NonCancellable>(cycle));
    EXPECT_THROW(pli_consistency(pres("alphabet a b\nrelator a^3 = b\n"), 2), ShapeError);
    EXPECT_THROW(pli_consistency(pres("alphabet a b\nrelator a b = 1\n"), 2), ShapeError);
}

TEST(PowerRelators, CommutationShapeIsAccepted) {
    auto r = pli_consistency(pres("alphabet a b\nrelator a^2 b = b a^2\n"), 2);
    auto* ok = std::get_if<PliConsistent>(&r);
    ASSERT_NE(ok, nullptr);
    EXPECT_TRUE(ok->d.empty());
    EXPECT_EQ(ok->h, (std::vector<std::int64_t>{1, 1}));
    EXPECT_EQ(ok->omega, WeightFn({2, 2}));
}

TEST(Cancellation, FindsFailure) {
    const auto p = pres("alphabet a b\nrelator a^2 = b^2\nrelator a^4 = b^2\n");
    QuotientContext ctx(p);
    auto found = cancellability_search(ctx, 4);
    ASSERT_TRUE(found.has_value());
    const Alphabet& ab = p.alphabet();
    EXPECT_EQ(found->x, ab.parse_word("aa"));
    EXPECT_EQ(found->u, ab.parse_word("aa"));
    EXPECT_EQ(found->v, Word{});
    EXPECT_TRUE(ctx.equivalent(found->x + found->u, found->x + found->v));
    EXPECT_FALSE(ctx.equivalent(found->u, found->v));
}

TEST(Cancellation, TraceMonoidsAreCancellable) {
    QuotientContext ctx(pres(kCommute));
    EXPECT_FALSE(cancellability_search(ctx, 3).has_value());
}

} // namespace
} // namespace shufcong
