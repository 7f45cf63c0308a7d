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

#include "shufcong/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "shufcong/errors.hpp"

namespace shufcong {

Relator oriented(Word u, Word v) {
    if (u < v) std::swap(u, v);
    return {std::move(u), std::move(v)};
}

Presentation::Presentation(Alphabet alphabet, const std::vector<Relator>& relators)
    : alphabet_(std::move(alphabet)) {
    for (const auto& [u, v] : relators) add_relator(u, v);
}

bool Presentation::add_relator(Word u, Word v) {
    for (const Word* w : {&u, &v}) {
        for (std::size_t i = 0; i < w->size(); ++i) {
            if ((*w)[i] >= alphabet_.size()) throw UsageError("relator letter outside the alphabet");
        }
    }
    if (u == v) return false;
    return relators_.insert(oriented(std::move(u), std::move(v))).second;
}

bool Presentation::contains(const Word& u, const Word& v) const {
    return relators_.count(oriented(u, v)) > 0;
}

std::size_t Presentation::max_relator_length() const {
    std::size_t n = 0;
    for (const auto& [u, v] : relators_) n = std::max({n, u.size(), v.size()});
    return n;
}

std::optional<Word> Presentation::max_relator_element() const {
    std::optional<Word> best;
    for (const auto& r : relators_) {
        if (!best || *best < r.first) best = r.first;
    }
    return best;
}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

Word parse_side(const Alphabet& alphabet, const std::vector<std::string>& tokens, std::size_t line) {
    if (tokens.empty()) throw ParseError(line, "empty side in relator (write 1 for the empty word)");
    Word w;
    for (const auto& tok : tokens) {
        try {
            w += alphabet.parse_word(tok);
        } catch (const UnknownLetter& e) {
            throw UnknownLetter(line, e.token());
        } catch (const ParseError& e) {
            throw ParseError(line, e.what());
        }
    }
    return w;
}

} // namespace

PresentationFile parse_presentation_file(std::string_view text) {
    std::optional<Alphabet> alphabet;
    std::optional<Semiring> semiring;
    std::vector<std::pair<std::vector<std::string>, std::size_t>> pending;  // relator lines

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split_ws(line);
        if (tokens.empty()) {
            if (nl == text.size()) break;
            continue;
        }
        const std::string keyword = tokens.front();
        tokens.erase(tokens.begin());
        if (keyword == "alphabet") {
            if (alphabet) throw ParseError(line_no, "duplicate 'alphabet' line");
            if (tokens.empty()) throw ParseError(line_no, "empty alphabet");
            try {
                alphabet.emplace(tokens);
            } catch (const UsageError& e) {
                throw ParseError(line_no, e.what());
            }
        } else if (keyword == "semiring") {
            if (semiring) throw ParseError(line_no, "duplicate 'semiring' line");
            if (tokens.size() != 1) throw ParseError(line_no, "expected 'semiring N|B|Z|Z/<n>'");
            try {
                semiring = Semiring::parse(tokens.front());
            } catch (const ParseError& e) {
                throw ParseError(line_no, e.what());
            } catch (const UsageError& e) {
                throw ParseError(line_no, e.what());
            }
        } else if (keyword == "relator") {
            pending.emplace_back(std::move(tokens), line_no);
        } else {
            throw ParseError(line_no, "unknown keyword '" + keyword + "'");
        }
        if (nl == text.size()) break;
    }
    if (!alphabet) throw ParseError(0, "missing 'alphabet' line (empty alphabet)");

    Presentation p(*alphabet);
    for (const auto& [tokens, line] : pending) {
        auto eq = std::find(tokens.begin(), tokens.end(), "=");
        if (eq == tokens.end() || std::count(tokens.begin(), tokens.end(), "=") != 1) {
            throw ParseError(line, "expected 'relator <word> = <word>'");
        }
        Word u = parse_side(*alphabet, {tokens.begin(), eq}, line);
        Word v = parse_side(*alphabet, {eq + 1, tokens.end()}, line);
        p.add_relator(std::move(u), std::move(v));
    }
    return {std::move(p), semiring};
}

Presentation parse_presentation(std::string_view text) { return parse_presentation_file(text).presentation; }

std::string format_relator(const Alphabet& alphabet, const Relator& r) {
    return alphabet.format(r.first) + " = " + alphabet.format(r.second);
}

std::string format_presentation(const Presentation& p, const std::optional<Semiring>& k) {
    std::ostringstream out;
    out << "alphabet";
    for (const auto& t : p.alphabet().tokens()) out << ' ' << t;
    out << '\n';
    if (k) out << "semiring " << k->to_string() << '\n';
    auto side = [&](const Word& w) {
        if (w.empty()) return std::string("1");
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += ' ';
            s += p.alphabet().token(w[i]);
        }
        return s;
    };
    for (const auto& [u, v] : p.relators()) out << "relator " << side(u) << " = " << side(v) << '\n';
    return out.str();
}

} // namespace shufcong
