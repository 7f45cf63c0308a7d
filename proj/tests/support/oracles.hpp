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

// Brute-force reference implementations used by the tests. None of them
// shares code with the library routines they check.

#ifndef SHUFCONG_TESTS_ORACLES_HPP
#define SHUFCONG_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "shufcong/congruence.hpp"
#include "shufcong/poly.hpp"
#include "shufcong/presentation.hpp"
#include "shufcong/word.hpp"

namespace shufcong::testing {

using Counts = std::map<Word, std::int64_t>;
using PairCounts = std::map<std::pair<Word, Word>, std::int64_t>;

inline Presentation pres(const std::string& text) { return parse_presentation(text); }

// All choices of |u| positions among |u|+|v| receive u, the rest v.
inline Counts interleavings(const Word& u, const Word& v) {
    Counts out;
    const std::size_t n = u.size() + v.size();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != u.size()) continue;
        Word w;
        std::size_t i = 0;
        std::size_t j = 0;
        for (std::size_t pos = 0; pos < n; ++pos) w.push_back(mask >> pos & 1U ? u[i++] : v[j++]);
        ++out[w];
    }
    return out;
}

// Pairs of increasing position sets I, J covering 0..n-1, u written on I and
// v on J, agreeing where they overlap; weighted by q^|I cap J|.
inline Counts infiltration_oracle(const Word& u, const Word& v, std::int64_t q) {
    Counts out;
    const std::size_t lo = std::max(u.size(), v.size());
    for (std::size_t n = lo; n <= u.size() + v.size(); ++n) {
        for (std::uint32_t I = 0; I < (1U << n); ++I) {
            if (static_cast<std::size_t>(__builtin_popcount(I)) != u.size()) continue;
            for (std::uint32_t J = 0; J < (1U << n); ++J) {
                if (static_cast<std::size_t>(__builtin_popcount(J)) != v.size()) continue;
                if ((I | J) != (1U << n) - 1) continue;
                std::vector<int> letters(n, -1);
                bool ok = true;
                std::size_t i = 0;
                std::size_t j = 0;
                for (std::size_t pos = 0; pos < n && ok; ++pos) {
                    if (I >> pos & 1U) letters[pos] = u[i++];
                    if (J >> pos & 1U) {
                        if (letters[pos] >= 0 && letters[pos] != v[j]) ok = false;
                        letters[pos] = v[j++];
                    }
                }
                if (!ok) continue;
                Word w;
                for (int a : letters) w.push_back(static_cast<Letter>(a));
                std::int64_t weight = 1;
                for (int k = 0; k < __builtin_popcount(I & J); ++k) weight *= q;
                if (weight != 0) out[w] += weight;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Every splitting of the positions of w into two complementary subwords.
inline PairCounts splittings(const Word& w) {
    PairCounts out;
    for (std::uint32_t mask = 0; mask < (1U << w.size()); ++mask) {
        Word l;
        Word r;
        for (std::size_t i = 0; i < w.size(); ++i) (mask >> i & 1U ? l : r).push_back(w[i]);
        ++out[{l, r}];
    }
    return out;
}

// Duval's algorithm: Lyndon words over k letters of length 1..n, in lexicographic order.
inline std::vector<Word> duval_lyndon(std::size_t k, std::size_t n) {
    std::vector<Word> out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        Word word;
        for (int a : w) word.push_back(static_cast<Letter>(a));
        out.push_back(word);
        const std::size_t m = w.size();
        while (w.size() < n) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == static_cast<int>(k) - 1) w.pop_back();
    }
    return out;
}

// Classes of the congruence on the words of one weight, by union-find over
// single relator applications. Exact for homogeneous presentations.
class BruteClasses {
public:
    BruteClasses(const Presentation& p, const WeightFn& omega, std::uint64_t weight) {
        Word prefix;
        collect(omega, weight, prefix);
        for (std::size_t i = 0; i < words_.size(); ++i) index_[words_[i]] = i;
        parent_.resize(words_.size());
        std::iota(parent_.begin(), parent_.end(), 0);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            const Word& w = words_[i];
            for (const auto& [u, v] : p.relators()) {
                for (const auto* from : {&u, &v}) {
                    const Word& to = from == &u ? v : u;
                    for (std::size_t pos = w.find(*from); pos != Word::npos; pos = w.find(*from, pos + 1)) {
                        unite(i, index_.at(w.replace(pos, from->size(), to)));
                        if (from->empty()) break;
                    }
                }
            }
        }
    }

    bool same(const Word& a, const Word& b) { return find(index_.at(a)) == find(index_.at(b)); }
    const std::vector<Word>& words() const { return words_; }

    Word least(const Word& a) {
        Word best = a;
        for (const auto& w : words_) {
            if (same(w, a) && w < best) best = w;
        }
        return best;
    }

private:
    void collect(const WeightFn& omega, std::uint64_t budget, Word& prefix) {
        if (budget == 0) {
            words_.push_back(prefix);
            return;
        }
        for (std::size_t a = 0; a < omega.size(); ++a) {
            if (omega(static_cast<Letter>(a)) > budget) continue;
            Word next = prefix;
            next.push_back(static_cast<Letter>(a));
            collect(omega, budget - omega(static_cast<Letter>(a)), next);
        }
    }
    std::size_t find(std::size_t i) {
        while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
        return i;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

    std::vector<Word> words_;
    std::map<Word, std::size_t> index_;
    std::vector<std::size_t> parent_;
};

inline Word random_word(std::mt19937_64& rng, std::size_t letters, std::size_t maxlen) {
    std::uniform_int_distribution<std::size_t> len(0, maxlen);
    std::uniform_int_distribution<int> letter(0, static_cast<int>(letters) - 1);
    Word w;
    for (std::size_t i = len(rng); i > 0; --i) w.push_back(static_cast<Letter>(letter(rng)));
    return w;
}

inline Poly random_poly(std::mt19937_64& rng, const Semiring& k, std::size_t letters, std::size_t maxlen,
                        std::size_t terms) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Poly p(k);
    for (std::size_t i = 0; i < terms; ++i) {
        int c = coeff(rng);
        if (!k.is_ring()) c = c < 0 ? -c : c;
        p.add_term(random_word(rng, letters, maxlen), k.from_integer(c));
    }
    return p;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace shufcong::testing

#endif
