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
#include "shufcong/presentation.hpp"

namespace shufcong {
namespace {

TEST(Presentation, ParsesFile) {
    const auto pf = parse_presentation_file(
        "# squares\n"
        "alphabet a b\n"
        "semiring Z/2\n"
        "relator a a = b b b b\n"
        "relator a b = b a   # commutation\n");
    EXPECT_EQ(pf.presentation.alphabet().size(), 2U);
    EXPECT_EQ(pf.semiring, Semiring::integers_mod(2));
    EXPECT_EQ(pf.presentation.size(), 2U);
    const Alphabet& ab = pf.presentation.alphabet();
    EXPECT_TRUE(pf.presentation.contains(ab.parse_word("bbbb"), ab.parse_word("aa")));
    EXPECT_EQ(pf.presentation.max_relator_length(), 4U);
}

TEST(Presentation, RelatorsAreOrientedAndDeduplicated) {
    Presentation p(Alphabet({"a", "b"}));
    const Alphabet& ab = p.alphabet();
    EXPECT_TRUE(p.add_relator(ab.parse_word("a"), ab.parse_word("bb")));
    EXPECT_FALSE(p.add_relator(ab.parse_word("bb"), ab.parse_word("a")));
    EXPECT_FALSE(p.add_relator(ab.parse_word("ab"), ab.parse_word("ab")));
    EXPECT_EQ(p.relators().begin()->first, ab.parse_word("bb"));
}

TEST(Presentation, EmptyWordAndPowers) {
    const auto p = parse_presentation("alphabet x y\nrelator x = 1\nrelator x^3 = y^2\n");
    EXPECT_EQ(p.size(), 2U);
    EXPECT_EQ(format_presentation(p), "alphabet x y\nrelator x = 1\nrelator x x x = y y\n");
}

TEST(Presentation, FormatParseRoundTrip) {
    const auto p = parse_presentation("alphabet s1 s2\nrelator s1 s2 s1 = s2 s1 s2\nrelator s1 s1 = 1\n");
    EXPECT_EQ(parse_presentation(format_presentation(p)), p);
}

TEST(Presentation, ErrorsCarryLineNumbers) {
    try {
        parse_presentation("alphabet a b\n\nrelator a = c\n");
        FAIL() << "expected UnknownLetter";
    } catch (const UnknownLetter& e) {
        EXPECT_EQ(e.line(), 3U);
        EXPECT_EQ(e.token(), "c");
    }
    try {
        parse_presentation("alphabet a\nrelator a a\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2U);
    }
    EXPECT_THROW(parse_presentation("relator a = b\n"), ParseError);
    EXPECT_THROW(parse_presentation("alphabet a\nalphabet b\n"), ParseError);
    EXPECT_THROW(parse_presentation("alphabet a\nfoo\n"), ParseError);
    EXPECT_THROW(parse_presentation_file("alphabet a\nsemiring Q\n"), ParseError);
    EXPECT_THROW(parse_presentation("alphabet a\nrelator a = a = a\n"), ParseError);
}

} // namespace
} // namespace shufcong
