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

#ifndef SHUFCONG_TRACE_HPP
#define SHUFCONG_TRACE_HPP

#include <set>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "shufcong/poly.hpp"
#include "shufcong/presentation.hpp"
#include "shufcong/word.hpp"

namespace shufcong {

/// Commutation graph: an undirected loop-free set of letter pairs that commute.
class ThetaGraph {
public:
    ThetaGraph() = default;
    explicit ThetaGraph(std::size_t letters) : letters_(letters) {}
    /// Throws UsageError on loops or letters out of range.
    ThetaGraph(std::size_t letters, const std::vector<std::pair<Letter, Letter>>& pairs);

    /// `a:b,a:c`
    static ThetaGraph parse(const Alphabet& alphabet, std::string_view text);
    /// Commutations a b = b a found among the relators; other relators are ignored.
    static ThetaGraph from_presentation(const Presentation& p);

    std::size_t letters() const noexcept { return letters_; }
    bool commute(Letter a, Letter b) const;
    /// Stored with first < second.
    const std::set<std::pair<Letter, Letter>>& pairs() const noexcept { return pairs_; }

    /// <A | ab = ba for (a,b) in theta>
    Presentation presentation(const Alphabet& alphabet) const;

    friend bool operator==(const ThetaGraph&, const ThetaGraph&) = default;

private:
    std::size_t letters_ = 0;
    std::set<std::pair<Letter, Letter>> pairs_;
};

std::string format_theta(const Alphabet& alphabet, const ThetaGraph& theta);

/// All words obtained from w by swapping adjacent commuting letters.
std::set<Word> commutation_class(const ThetaGraph& theta, const Word& w);

/// Lexicographically least word of the commutation class; used as the trace's
/// canonical representative.
Word canonical_word(const ThetaGraph& theta, const Word& w);

/// Lexicographically greatest word of the commutation class.
Word std_word(const ThetaGraph& theta, const Word& w);

/// t <_std t' iff std(t) <_lex std(t')
bool std_less(const ThetaGraph& theta, const Word& t, const Word& u);

/// Element of the free partially commutative monoid M(A, theta).
class Trace {
public:
    Trace(ThetaGraph theta, const Word& representative)
        : theta_(std::move(theta)), word_(canonical_word(theta_, representative)) {}

    const Word& word() const noexcept { return word_; }
    const ThetaGraph& theta() const noexcept { return theta_; }
    std::size_t size() const noexcept { return word_.size(); }
    Word std_word() const { return shufcong::std_word(theta_, word_); }

    friend bool operator==(const Trace& a, const Trace& b) { return a.word_ == b.word_; }

private:
    ThetaGraph theta_;
    Word word_;
};

/// Alph(t) induces a connected subgraph of the non-commutation graph.
bool is_connected_trace(const ThetaGraph& theta, const Word& t);
/// t is not s^n for a trace s and n >= 2.
bool is_primitive_trace(const ThetaGraph& theta, const Word& t);
/// Canonical words of every trace vu with t = uv, closed under repetition.
std::set<Word> conjugacy_class(const ThetaGraph& theta, const Word& t);
bool is_lyndon_trace(const ThetaGraph& theta, const Word& t);

/// Lyndon traces of length 1..maxlen, sorted by <_std.
std::vector<Trace> lyndon_traces(const ThetaGraph& theta, std::size_t maxlen);

class NotLyndon : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Standard factorization l = l1 l2 into Lyndon traces with |l2| minimal
/// (ties: least l2 for <_std). Throws NotLyndon for letters or non-Lyndon traces.
std::pair<Word, Word> standard_factorization(const ThetaGraph& theta, const Word& l);

/// Bracketing of a Lyndon trace: a for letters, [Lambda(l1), Lambda(l2)]
/// on the standard factorization. Words of the result are canonical
/// trace representatives; coefficients are integers.
Poly lalonde_lambda(const ThetaGraph& theta, const Trace& l);

} // namespace shufcong

#endif
