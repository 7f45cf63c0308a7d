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

#include "shufcong/trace.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "shufcong/errors.hpp"

namespace shufcong {

ThetaGraph::ThetaGraph(std::size_t letters, const std::vector<std::pair<Letter, Letter>>& pairs)
    : letters_(letters) {
    for (auto [a, b] : pairs) {
        if (a == b) throw UsageError("commutation graph has no loops");
        if (a >= letters || b >= letters) throw UsageError("commutation pair outside the alphabet");
        pairs_.insert({std::min(a, b), std::max(a, b)});
    }
}

ThetaGraph ThetaGraph::parse(const Alphabet& alphabet, std::string_view text) {
    std::vector<std::pair<Letter, Letter>> pairs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(start, comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) {
            auto colon = item.find(':');
            if (colon == std::string_view::npos) throw ParseError(0, "expected a:b in theta list");
            pairs.emplace_back(alphabet.letter(item.substr(0, colon)), alphabet.letter(item.substr(colon + 1)));
        }
        start = comma + 1;
    }
    return ThetaGraph(alphabet.size(), pairs);
}

ThetaGraph ThetaGraph::from_presentation(const Presentation& p) {
    std::vector<std::pair<Letter, Letter>> pairs;
    for (const auto& [u, v] : p.relators()) {
        if (u.size() == 2 && v.size() == 2 && u[0] != u[1] && u[0] == v[1] && u[1] == v[0]) {
            pairs.emplace_back(u[0], u[1]);
        }
    }
    return ThetaGraph(p.alphabet().size(), pairs);
}

bool ThetaGraph::commute(Letter a, Letter b) const {
    return pairs_.count({std::min(a, b), std::max(a, b)}) > 0;
}

Presentation ThetaGraph::presentation(const Alphabet& alphabet) const {
    Presentation p(alphabet);
    for (auto [a, b] : pairs_) p.add_relator(Word{a, b}, Word{b, a});
    return p;
}

std::string format_theta(const Alphabet& alphabet, const ThetaGraph& theta) {
    std::string out;
    for (auto [a, b] : theta.pairs()) {
        if (!out.empty()) out += ',';
        out += alphabet.token(a) + ":" + alphabet.token(b);
    }
    return out;
}

std::set<Word> commutation_class(const ThetaGraph& theta, const Word& w) {
    std::set<Word> seen{w};
    std::deque<Word> todo{w};
    while (!todo.empty()) {
        Word x = std::move(todo.front());
        todo.pop_front();
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            if (x[i] == x[i + 1] || !theta.commute(x[i], x[i + 1])) continue;
            Word y = x.replace(i, 2, Word{x[i + 1], x[i]});
            if (seen.insert(y).second) todo.push_back(std::move(y));
        }
    }
    return seen;
}

namespace {

// Repeatedly extracts a letter that can be moved to the front (it commutes
// with everything before its first occurrence), choosing the least or the
// greatest such letter.
Word greedy_representative(const ThetaGraph& theta, const Word& w, bool greatest) {
    std::vector<Letter> rest = w.letters();
    Word out;
    while (!rest.empty()) {
        std::size_t pick = rest.size();
        for (std::size_t i = 0; i < rest.size(); ++i) {
            bool movable = true;
            for (std::size_t j = 0; j < i && movable; ++j) {
                if (rest[j] == rest[i] || !theta.commute(rest[j], rest[i])) movable = false;
            }
            if (!movable) continue;
            if (pick == rest.size() || (greatest ? rest[i] > rest[pick] : rest[i] < rest[pick])) pick = i;
        }
        out.push_back(rest[pick]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

Word rotate(const Word& w, std::size_t k) { return w.substr(k) + w.substr(0, k); }

} // namespace

Word canonical_word(const ThetaGraph& theta, const Word& w) { return greedy_representative(theta, w, false); }

Word std_word(const ThetaGraph& theta, const Word& w) { return greedy_representative(theta, w, true); }

bool std_less(const ThetaGraph& theta, const Word& t, const Word& u) {
    return lex_less(std_word(theta, t), std_word(theta, u));
}

bool is_connected_trace(const ThetaGraph& theta, const Word& t) {
    std::vector<Letter> alph;
    for (std::size_t i = 0; i < t.size(); ++i) alph.push_back(t[i]);
    std::sort(alph.begin(), alph.end());
    alph.erase(std::unique(alph.begin(), alph.end()), alph.end());
    if (alph.empty()) return false;
    std::vector<bool> reached(alph.size(), false);
    std::deque<std::size_t> todo{0};
    reached[0] = true;
    while (!todo.empty()) {
        std::size_t i = todo.front();
        todo.pop_front();
        for (std::size_t j = 0; j < alph.size(); ++j) {
            if (!reached[j] && !theta.commute(alph[i], alph[j])) {
                reached[j] = true;
                todo.push_back(j);
            }
        }
    }
    return std::all_of(reached.begin(), reached.end(), [](bool r) { return r; });
}

bool is_primitive_trace(const ThetaGraph& theta, const Word& t) {
    if (t.empty()) return false;
    const Word canon = canonical_word(theta, t);
    const auto cls = commutation_class(theta, canon);
    for (std::size_t n = 2; n <= t.size(); ++n) {
        if (t.size() % n != 0) continue;
        const std::size_t len = t.size() / n;
        // if t = s^n then s^n is a representative, so s is a prefix of one
        std::set<Word> roots;
        for (const auto& x : cls) roots.insert(x.substr(0, len));
        for (const auto& s : roots) {
            Word power;
            for (std::size_t k = 0; k < n; ++k) power += s;
            if (canonical_word(theta, power) == canon) return false;
        }
    }
    return true;
}

std::set<Word> conjugacy_class(const ThetaGraph& theta, const Word& t) {
    std::set<Word> seen{canonical_word(theta, t)};
    std::deque<Word> todo(seen.begin(), seen.end());
    while (!todo.empty()) {
        Word s = std::move(todo.front());
        todo.pop_front();
        for (const auto& x : commutation_class(theta, s)) {
            for (std::size_t k = 1; k < x.size(); ++k) {
                Word c = canonical_word(theta, rotate(x, k));
                if (seen.insert(c).second) todo.push_back(std::move(c));
            }
        }
    }
    return seen;
}

bool is_lyndon_trace(const ThetaGraph& theta, const Word& t) {
    if (t.empty() || !is_connected_trace(theta, t) || !is_primitive_trace(theta, t)) return false;
    const Word canon = canonical_word(theta, t);
    const Word top = std_word(theta, canon);
    for (const auto& c : conjugacy_class(theta, canon)) {
        if (c != canon && !lex_less(top, std_word(theta, c))) return false;
    }
    return true;
}

std::vector<Trace> lyndon_traces(const ThetaGraph& theta, std::size_t maxlen) {
    std::vector<Word> found;
    for (const auto& w : words_up_to(theta.letters(), maxlen)) {
        if (w.empty() || canonical_word(theta, w) != w) continue;
        if (is_lyndon_trace(theta, w)) found.push_back(w);
    }
    std::sort(found.begin(), found.end(),
              [&](const Word& a, const Word& b) { return std_less(theta, a, b); });
    std::vector<Trace> out;
    out.reserve(found.size());
    for (const auto& w : found) out.emplace_back(theta, w);
    return out;
}

std::pair<Word, Word> standard_factorization(const ThetaGraph& theta, const Word& l) {
    const Word canon = canonical_word(theta, l);
    if (canon.size() < 2 || !is_lyndon_trace(theta, canon)) {
        throw NotLyndon("no standard factorization for this trace");
    }
    std::optional<std::pair<Word, Word>> best;
    for (const auto& x : commutation_class(theta, canon)) {
        for (std::size_t k = 1; k < x.size(); ++k) {
            Word l1 = canonical_word(theta, x.substr(0, k));
            Word l2 = canonical_word(theta, x.substr(k));
            if (best) {
                const Word& b2 = best->second;
                if (l2.size() > b2.size()) continue;
                if (l2.size() == b2.size() && !std_less(theta, l2, b2)) continue;
            }
            if (!is_lyndon_trace(theta, l1) || !is_lyndon_trace(theta, l2)) continue;
            best = {std::move(l1), std::move(l2)};
        }
    }
    if (!best) throw NotLyndon("Lyndon trace without a Lyndon factorization");
    return *best;
}

namespace {

Poly canonicalize(const ThetaGraph& theta, const Poly& p) {
    Poly out(p.semiring());
    for (const auto& [w, c] : p.terms()) out.add_term(canonical_word(theta, w), c);
    return out;
}

Poly lambda_rec(const ThetaGraph& theta, const Word& l, std::map<Word, Poly>& memo) {
    if (auto it = memo.find(l); it != memo.end()) return it->second;
    const Semiring z = Semiring::integers();
    Poly out(z);
    if (l.size() == 1) {
        out.add_term(l, 1);
    } else {
        auto [l1, l2] = standard_factorization(theta, l);
        Poly p = lambda_rec(theta, l1, memo);
        Poly q = lambda_rec(theta, l2, memo);
        out = canonicalize(theta, concat_product(p, q) - concat_product(q, p));
    }
    memo.emplace(l, out);
    return out;
}

} // namespace

Poly lalonde_lambda(const ThetaGraph& theta, const Trace& l) {
    if (!is_lyndon_trace(theta, l.word())) throw NotLyndon("not a Lyndon trace");
    std::map<Word, Poly> memo;
    return lambda_rec(theta, l.word(), memo);
}

} // namespace shufcong
