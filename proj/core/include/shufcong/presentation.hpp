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

#ifndef SHUFCONG_PRESENTATION_HPP
#define SHUFCONG_PRESENTATION_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shufcong/semiring.hpp"
#include "shufcong/word.hpp"

namespace shufcong {

/// A defining pair u = v, stored with first >= second in length-lex order.
using Relator = std::pair<Word, Word>;

Relator oriented(Word u, Word v);

/// Finite monoid presentation <A | R>.
///
/// Relators are kept oriented, deduplicated and sorted; tautologies u = u are dropped.
class Presentation {
public:
    Presentation() = default;
    explicit Presentation(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
    Presentation(Alphabet alphabet, const std::vector<Relator>& relators);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::set<Relator>& relators() const noexcept { return relators_; }
    std::size_t size() const noexcept { return relators_.size(); }

    /// Returns false when the pair was already present or is a tautology.
    bool add_relator(Word u, Word v);
    bool contains(const Word& u, const Word& v) const;

    std::size_t max_relator_length() const;
    /// Largest word (length-lex) occurring in any relator.
    std::optional<Word> max_relator_element() const;

    friend bool operator==(const Presentation&, const Presentation&) = default;

private:
    Alphabet alphabet_;
    std::set<Relator> relators_;
};

/// Parsed contents of a presentation file.
struct PresentationFile {
    Presentation presentation;
    std::optional<Semiring> semiring;
};

/// Line-oriented format:
///
///     # comment
///     alphabet a b c
///     semiring Z/2
///     relator a a = b b
///     relator a = 1
///
/// Errors carry the 1-based line number.
PresentationFile parse_presentation_file(std::string_view text);
Presentation parse_presentation(std::string_view text);

std::string format_presentation(const Presentation& p, const std::optional<Semiring>& k = std::nullopt);
std::string format_relator(const Alphabet& alphabet, const Relator& r);

} // namespace shufcong

#endif
