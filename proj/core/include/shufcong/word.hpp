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

#ifndef SHUFCONG_WORD_HPP
#define SHUFCONG_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace shufcong {

using Letter = std::uint8_t;

/// A finite word over letter indices. The empty word is the unit.
///
/// Letters are packed one per byte, so words hash and compare at memcmp speed.
/// The built-in ordering is length-lex: shorter words first, then
/// lexicographic in the declared letter order.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters);
    explicit Word(std::span<const Letter> letters);

    static Word letter(Letter a) { return Word{a}; }
    /// a^n
    static Word power(Letter a, std::size_t n);

    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }
    Letter operator[](std::size_t i) const { return static_cast<Letter>(data_[i]); }
    Letter back() const { return static_cast<Letter>(data_.back()); }

    void push_back(Letter a) { data_.push_back(static_cast<char>(a)); }
    Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
    /// Occurrence search; `npos` when absent.
    std::size_t find(const Word& pattern, std::size_t from = 0) const {
        return data_.find(pattern.data_, from);
    }
    static constexpr std::size_t npos = std::string::npos;

    /// this[0, pos) + replacement + this[pos + len, ...)
    Word replace(std::size_t pos, std::size_t len, const Word& replacement) const;

    Word& operator+=(const Word& other) {
        data_ += other.data_;
        return *this;
    }
    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

    /// Number of occurrences of letter a.
    std::size_t count(Letter a) const;

    std::vector<Letter> letters() const;
    std::string_view bytes() const noexcept { return data_; }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        int c = a.data_.compare(b.data_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    std::string data_;
};

/// Pure lexicographic order (a proper prefix is smaller), as opposed to the
/// length-lex order built into Word.
bool lex_less(const Word& a, const Word& b);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        return std::hash<std::string_view>{}(w.bytes());
    }
};

/// Ordered list of distinct letter tokens.
class Alphabet {
public:
    Alphabet() = default;
    /// Throws UsageError on duplicate or empty tokens, or more than 255 letters.
    explicit Alphabet(std::vector<std::string> tokens);

    std::size_t size() const noexcept { return tokens_.size(); }
    bool empty() const noexcept { return tokens_.empty(); }
    const std::string& token(Letter a) const { return tokens_.at(a); }
    const std::vector<std::string>& tokens() const noexcept { return tokens_; }
    bool contains(std::string_view token) const;
    /// Throws UnknownLetter.
    Letter letter(std::string_view token) const;

    /// Tokens concatenated when all are one character, joined by '.' otherwise;
    /// the empty word prints as `1`.
    std::string format(const Word& w) const;
    /// Inverse of format. Also accepts whitespace-separated tokens and
    /// `tok^n` powers.
    Word parse_word(std::string_view text) const;

    bool single_char_tokens() const noexcept { return single_char_; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.tokens_ == b.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, Letter> index_;
    bool single_char_ = true;
};

/// All words over {0..k-1} of length exactly n, in lexicographic order.
std::vector<Word> words_of_length(std::size_t k, std::size_t n);
/// All words of length <= n, in length-lex order.
std::vector<Word> words_up_to(std::size_t k, std::size_t n);

} // namespace shufcong

#endif
