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

#include "shufcong/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "shufcong/errors.hpp"

namespace shufcong {

Word::Word(std::initializer_list<Letter> letters) {
    data_.reserve(letters.size());
    for (Letter a : letters) data_.push_back(static_cast<char>(a));
}

Word::Word(std::span<const Letter> letters) {
    data_.reserve(letters.size());
    for (Letter a : letters) data_.push_back(static_cast<char>(a));
}

Word Word::power(Letter a, std::size_t n) {
    Word w;
    w.data_.assign(n, static_cast<char>(a));
    return w;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
    Word w;
    w.data_ = data_.substr(pos, len);
    return w;
}

Word Word::replace(std::size_t pos, std::size_t len, const Word& replacement) const {
    Word w;
    w.data_.reserve(data_.size() - len + replacement.size());
    w.data_.append(data_, 0, pos);
    w.data_ += replacement.data_;
    w.data_.append(data_, pos + len, std::string::npos);
    return w;
}

std::size_t Word::count(Letter a) const {
    return static_cast<std::size_t>(std::count(data_.begin(), data_.end(), static_cast<char>(a)));
}

std::vector<Letter> Word::letters() const {
    std::vector<Letter> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
    return out;
}

bool lex_less(const Word& a, const Word& b) {
    // std::string compare is byte-wise unsigned and treats a proper prefix as smaller
    return a.bytes() < b.bytes();
}

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.size() > 255) throw UsageError("alphabets are limited to 255 letters");
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        const auto& t = tokens_[i];
        if (t.empty()) throw UsageError("empty letter token");
        if (t == "1") throw UsageError("'1' is reserved for the empty word");
        for (char c : t) {
            if (std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == '^' || c == '*' ||
                c == '+' || c == '-' || c == '=' || c == '#' || c == ',' || c == ':') {
                throw UsageError("letter token '" + t + "' contains a reserved character");
            }
        }
        if (!index_.emplace(t, static_cast<Letter>(i)).second) {
            throw UsageError("duplicate letter token '" + t + "'");
        }
        if (t.size() != 1) single_char_ = false;
    }
}

bool Alphabet::contains(std::string_view token) const {
    return index_.find(std::string(token)) != index_.end();
}

Letter Alphabet::letter(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) throw UnknownLetter(0, std::string(token));
    return it->second;
}

std::string Alphabet::format(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !single_char_) out += '.';
        out += tokens_.at(w[i]);
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Word Alphabet::parse_word(std::string_view text) const {
    text = trim(text);
    if (text.empty()) throw ParseError(0, "empty word (write 1 for the unit)");
    if (text == "1") return {};

    // split into pieces on '.' and whitespace; each piece is tok or tok^n
    std::vector<std::string_view> pieces;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '.' || std::isspace(static_cast<unsigned char>(text[i]))) {
            if (i > start) pieces.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }

    Word w;
    auto append = [&](std::string_view tok, std::size_t times) {
        Letter a = letter(tok);
        for (std::size_t k = 0; k < times; ++k) w.push_back(a);
    };
    for (auto piece : pieces) {
        std::size_t times = 1;
        if (auto caret = piece.find('^'); caret != std::string_view::npos) {
            auto exp = piece.substr(caret + 1);
            auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), times);
            if (ec != std::errc() || ptr != exp.data() + exp.size() || exp.empty()) {
                throw ParseError(0, "bad exponent in '" + std::string(piece) + "'");
            }
            piece = piece.substr(0, caret);
        }
        if (piece == "1") continue;
        if (contains(piece)) {
            append(piece, times);
        } else if (single_char_ && times == 1) {
            // concatenated single-character tokens, e.g. "aab"
            for (char c : piece) append(std::string_view(&c, 1), 1);
        } else if (single_char_) {
            // "ab^2" means a b b
            for (std::size_t i = 0; i + 1 < piece.size(); ++i) append(piece.substr(i, 1), 1);
            append(piece.substr(piece.size() - 1), times);
        } else {
            throw UnknownLetter(0, std::string(piece));
        }
    }
    return w;
}

std::vector<Word> words_of_length(std::size_t k, std::size_t n) {
    std::vector<Word> out;
    if (k == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    std::vector<Letter> digits(n, 0);
    while (true) {
        out.emplace_back(std::span<const Letter>(digits));
        std::size_t i = n;
        while (i > 0 && digits[i - 1] + 1u == k) {
            digits[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        ++digits[i - 1];
    }
    return out;
}

std::vector<Word> words_up_to(std::size_t k, std::size_t n) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= n; ++len) {
        auto layer = words_of_length(k, len);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace shufcong
