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

#ifndef SHUFCONG_CONGRUENCE_HPP
#define SHUFCONG_CONGRUENCE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shufcong/poly.hpp"
#include "shufcong/presentation.hpp"
#include "shufcong/word.hpp"

namespace shufcong {

/// Strictly positive integer weight per letter, extended additively to words.
class WeightFn {
public:
    WeightFn() = default;
    /// Throws UsageError if a weight is 0.
    explicit WeightFn(std::vector<std::uint64_t> weights);
    static WeightFn uniform(std::size_t letters) {
        return WeightFn(std::vector<std::uint64_t>(letters, 1));
    }

    std::uint64_t operator()(Letter a) const { return weights_.at(a); }
    std::uint64_t operator()(const Word& w) const;
    const std::vector<std::uint64_t>& weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }
    std::uint64_t min_weight() const;

    friend bool operator==(const WeightFn&, const WeightFn&) = default;

private:
    std::vector<std::uint64_t> weights_;
};

/// Every relator has both sides of equal weight.
bool is_homogeneous(const Presentation& p, const WeightFn& w);

/// Smallest (by maximal letter weight) strictly positive weight found making
/// every relator homogeneous, or nothing when none exists.
std::optional<WeightFn> find_weight(const Presentation& p);

class CocycleViolation : public std::runtime_error {
public:
    CocycleViolation(std::size_t a, std::size_t b, std::size_t c)
        : std::runtime_error("d(a,b)+d(b,c)+d(c,a) != 0 on (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")"),
          a(a), b(b), c(c) {}

    std::size_t a, b, c;
};

/// Potential h with d(a,b) = h(b) - h(a) on every given edge, shifted so that
/// min h = 1 on each connected component (isolated vertices get 1).
/// `d` lives on the graph of an equivalence relation over 0..vertex_count-1.
std::vector<std::int64_t> letg_potential(std::size_t vertex_count,
                                         const std::map<std::pair<std::size_t, std::size_t>, std::int64_t>& d);

/// Letter-level morphism A* -> A*: each letter is erased or sent to a letter.
class LetterSubstitution {
public:
    LetterSubstitution() = default;
    explicit LetterSubstitution(std::size_t letters);

    std::optional<Letter> image(Letter a) const { return image_.at(a); }
    bool erased(Letter a) const { return !image_.at(a).has_value(); }
    Word apply(const Word& w) const;
    bool is_identity() const;

    void erase(Letter a);
    /// Sends every letter currently mapped to `from` onto `to`.
    void merge(Letter from, Letter to);

private:
    std::vector<std::optional<Letter>> image_;
};

/// Result of splitting a congruence into letter erasures (a = 1),
/// letter identifications (a = b) and what remains.
struct PreNormalization {
    std::vector<Letter> erasures;
    /// Blocks of size >= 2; the first (smallest) letter represents the block.
    std::vector<std::vector<Letter>> identifications;
    /// Presentation over the surviving letters only (erased letters and
    /// non-representatives removed from the alphabet).
    Presentation residual;
    /// residual letter i is `survivors[i]` in the original alphabet.
    std::vector<Letter> survivors;
    LetterSubstitution substitution;
    /// Residual relators written over the original alphabet.
    std::set<Relator> residual_relators;
};

struct ContextOptions {
    /// Maximal word length during class exploration; default
    /// max relator length * 4 (at least 4).
    std::optional<std::size_t> cap;
    /// Must make the presentation homogeneous. Found automatically when absent.
    std::optional<WeightFn> weight;
    /// Exploration of one class gives up past this many words.
    std::size_t max_class_size = 200000;
};

std::size_t default_cap(const Presentation& p);

/// Bounded oracle for the quotient A*/= of a presentation.
///
/// Erasures and identifications that follow syntactically from the relators
/// are applied first; classes are then explored breadth-first by applying
/// every relator in both directions at every position. When the residual
/// relators are homogeneous for some weight, every class is finite and the
/// exploration is exact. Otherwise words longer than the cap are not
/// visited and a class that touched the cap is reported as open.
///
/// Explored classes are cached. The cache is guarded by a mutex, so a
/// context can be shared between threads; clone() gives an independent copy.
class QuotientContext {
public:
    explicit QuotientContext(Presentation p, ContextOptions options = {});
    QuotientContext(QuotientContext&&) noexcept;
    QuotientContext& operator=(QuotientContext&&) noexcept;
    ~QuotientContext();

    QuotientContext clone() const;

    const Presentation& presentation() const noexcept { return presentation_; }
    const Alphabet& alphabet() const noexcept { return presentation_.alphabet(); }
    std::size_t cap() const noexcept { return cap_; }
    const ContextOptions& options() const noexcept { return options_; }
    /// The weight in force (given or found for the residual relators).
    const std::optional<WeightFn>& weight() const noexcept { return weight_; }
    /// True when every class is finite and explored completely.
    bool exact() const noexcept { return weight_.has_value(); }
    const LetterSubstitution& substitution() const noexcept { return substitution_; }
    const std::set<Relator>& residual_relators() const noexcept { return residual_; }

    /// Length-lex least element of the class of w. Throws Inconclusive.
    Word normal_form(const Word& w) const;
    std::optional<Word> try_normal_form(const Word& w) const;

    /// Throws Inconclusive when neither equality nor a separating argument
    /// is found within the cap.
    bool equivalent(const Word& u, const Word& v) const;
    std::optional<bool> try_equivalent(const Word& u, const Word& v) const;

    /// Members of the class of w over the surviving letters (the whole class
    /// when nothing is erased or identified), in length-lex order.
    std::vector<Word> class_members(const Word& w) const;

    Poly reduce_poly(const Poly& p) const;
    TensorPoly reduce_tensor(const TensorPoly& t) const;

private:
    struct Cache;

    std::size_t explore(const Word& reduced) const;

    Presentation presentation_;
    ContextOptions options_;
    std::size_t cap_ = 0;
    LetterSubstitution substitution_;
    std::set<Relator> residual_;
    std::optional<WeightFn> weight_;
    std::unique_ptr<Cache> cache_;
};

/// Erasures first, then identifications, to a fixpoint. Beyond the letters
/// forced syntactically, every surviving letter is tested against the empty
/// word and every pair of letters against each other within the cap.
/// Throws Inconclusive when such a test cannot be settled.
PreNormalization pre_normalize(const Presentation& p, std::size_t cap);

/// Adds every pair u = v with max(u, v) <= the largest relator element
/// (length-lex). The result generates the same congruence.
Presentation closure_of_relators(const QuotientContext& ctx);

struct JoinMeet {
    Presentation join;
    Presentation meet;
};

/// Join is the union of the relator sets. Meet lists every pair of words of
/// length <= bound identified by both congruences.
JoinMeet lattice_join_meet(const Presentation& p1, const Presentation& p2, std::size_t bound,
                           const ContextOptions& options = {});

/// All pairs of words over `letters`, of length <= bound, equivalent in ctx,
/// as a presentation over the sub-alphabet `letters` (in alphabet order).
Presentation restrict_bounded(const QuotientContext& ctx, const std::vector<Letter>& letters, std::size_t bound);

} // namespace shufcong

#endif
