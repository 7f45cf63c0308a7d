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

#ifndef SHUFCONG_MAGNUS_HPP
#define SHUFCONG_MAGNUS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shufcong/congruence.hpp"
#include "shufcong/errors.hpp"
#include "shufcong/poly.hpp"
#include "shufcong/semiring.hpp"

namespace shufcong {

/// Coefficient arithmetic over one of the semirings.
struct SemiringArith {
    using value_type = Value;
    Semiring k;

    Value zero() const { return k.zero(); }
    Value one() const { return k.one(); }
    Value from_integer(const BigInt& n) const { return k.from_integer(n); }
    Value add(const Value& a, const Value& b) const { return k.add(a, b); }
    Value mul(const Value& a, const Value& b) const { return k.mul(a, b); }
    Value neg(const Value& a) const { return k.neg(a); }
    bool is_ring() const { return k.is_ring(); }
    std::optional<Value> inverse(const Value& a) const { return k.inverse(a); }
    std::string format(const Value& a) const { return k.format(a); }
    friend bool operator==(const SemiringArith&, const SemiringArith&) = default;
};

/// Exact rationals.
struct RationalArith {
    using value_type = BigRational;

    BigRational zero() const { return 0; }
    BigRational one() const { return 1; }
    BigRational from_integer(const BigInt& n) const { return BigRational(n); }
    BigRational add(const BigRational& a, const BigRational& b) const { return a + b; }
    BigRational mul(const BigRational& a, const BigRational& b) const { return a * b; }
    BigRational neg(const BigRational& a) const { return -a; }
    bool is_ring() const { return true; }
    std::optional<BigRational> inverse(const BigRational& a) const {
        if (a == 0) return std::nullopt;
        return 1 / a;
    }
    std::string format(const BigRational& a) const { return a.str(); }
    friend bool operator==(const RationalArith&, const RationalArith&) = default;
};

/// Truncated series in the completed algebra of A*/=, graded by a weight.
/// Keys are (grade, normal form); terms above the truncation degree are
/// dropped. The congruence must be exact (homogeneous for the weight).
template <class Arith>
class GradedSeries {
public:
    using value_type = typename Arith::value_type;
    using Key = std::pair<std::uint64_t, Word>;
    using Terms = std::map<Key, value_type>;

    GradedSeries(std::shared_ptr<const QuotientContext> ctx, WeightFn weight, std::uint64_t degree, Arith arith)
        : ctx_(std::move(ctx)), weight_(std::move(weight)), degree_(degree), arith_(std::move(arith)) {
        if (!ctx_) throw UsageError("series needs a quotient context");
        if (!is_homogeneous(ctx_->presentation(), weight_)) {
            throw PreconditionViolated("presentation is not homogeneous for the series weight");
        }
    }

    static GradedSeries one(std::shared_ptr<const QuotientContext> ctx, WeightFn weight, std::uint64_t degree,
                            Arith arith) {
        GradedSeries s(std::move(ctx), std::move(weight), degree, std::move(arith));
        s.add_term(Word{}, s.arith_.one());
        return s;
    }

    const std::shared_ptr<const QuotientContext>& context() const noexcept { return ctx_; }
    const WeightFn& weight() const noexcept { return weight_; }
    std::uint64_t degree() const noexcept { return degree_; }
    const Arith& arith() const noexcept { return arith_; }
    const Terms& terms() const noexcept { return terms_; }

    /// Adds c [w]; ignored when the weight of w exceeds the degree.
    void add_term(const Word& w, const value_type& c) {
        const std::uint64_t g = weight_(w);
        if (g > degree_) return;
        auto it = terms_.try_emplace(Key{g, ctx_->normal_form(w)}, arith_.zero()).first;
        it->second = arith_.add(it->second, c);
        if (it->second == arith_.zero()) terms_.erase(it);
    }

    value_type coefficient(const Word& w) const {
        const std::uint64_t g = weight_(w);
        auto it = terms_.find(Key{g, ctx_->normal_form(w)});
        return it == terms_.end() ? arith_.zero() : it->second;
    }

    value_type constant_term() const { return coefficient(Word{}); }

    /// The homogeneous component of grade g, as (normal form, coefficient).
    std::map<Word, value_type> component(std::uint64_t g) const {
        std::map<Word, value_type> out;
        for (auto it = terms_.lower_bound(Key{g, Word{}}); it != terms_.end() && it->first.first == g; ++it) {
            out.emplace(it->first.second, it->second);
        }
        return out;
    }

    GradedSeries truncated(std::uint64_t degree) const {
        GradedSeries out(ctx_, weight_, std::min(degree, degree_), arith_);
        for (const auto& [key, c] : terms_) {
            if (key.first <= out.degree_) out.terms_.emplace(key, c);
        }
        return out;
    }

    GradedSeries& operator+=(const GradedSeries& other) {
        check_same(other);
        for (const auto& [key, c] : other.terms_) add_term(key.second, c);
        return *this;
    }

    GradedSeries scaled(const value_type& c) const {
        GradedSeries out(ctx_, weight_, degree_, arith_);
        for (const auto& [key, v] : terms_) out.add_term(key.second, arith_.mul(c, v));
        return out;
    }

    GradedSeries negated() const { return scaled(arith_.neg(arith_.one())); }

    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a += b.negated(); }

    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
        a.check_same(b);
        GradedSeries out(a.ctx_, a.weight_, a.degree_, a.arith_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                if (ka.first + kb.first > a.degree_) break;
                out.add_term(ka.second + kb.second, a.arith_.mul(ca, cb));
            }
        }
        return out;
    }

    friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
        return a.degree_ == b.degree_ && a.weight_ == b.weight_ && a.terms_ == b.terms_;
    }

private:
    void check_same(const GradedSeries& other) const {
        if (ctx_ != other.ctx_ || weight_ != other.weight_ || degree_ != other.degree_) {
            throw UsageError("series live in different truncated algebras");
        }
    }

    std::shared_ptr<const QuotientContext> ctx_;
    WeightFn weight_;
    std::uint64_t degree_;
    Arith arith_;
    Terms terms_;
};

using TruncSeries = GradedSeries<SemiringArith>;
using RationalSeries = GradedSeries<RationalArith>;

/// Product of (1 + a) over the letters of w, truncated at degree D.
/// Requires the congruence to be homogeneous for omega and compatible over k.
TruncSeries magnus_transform(std::shared_ptr<const QuotientContext> ctx, const Semiring& k, const WeightFn& omega,
                             const Word& w, std::uint64_t degree);

/// The same series computed as (Id (x) ev)(c(w)): the sum of every subword
/// of w with the multiplicity of its embeddings.
TruncSeries magnus_via_coproduct(std::shared_ptr<const QuotientContext> ctx, const Semiring& k,
                                 const WeightFn& omega, const Word& w, std::uint64_t degree);

template <class Arith>
GradedSeries<Arith> series_pow(const GradedSeries<Arith>& s, std::uint64_t q) {
    auto result = GradedSeries<Arith>::one(s.context(), s.weight(), s.degree(), s.arith());
    GradedSeries<Arith> base = s;
    while (q > 0) {
        if (q & 1U) result = result * base;
        q >>= 1U;
        if (q > 0) base = base * base;
    }
    return result;
}

/// The unique T with constant term 1 and T^q = S. Throws ConstantTermNotOne
/// and NotInvertible (q not a unit of the coefficients).
template <class Arith>
GradedSeries<Arith> q_root(const GradedSeries<Arith>& s, std::uint64_t q) {
    const Arith& ar = s.arith();
    if (s.constant_term() != ar.one()) throw ConstantTermNotOne();
    if (q == 0) throw NotInvertible("q = 0");
    auto inv = ar.inverse(ar.from_integer(BigInt(q)));
    if (!inv) throw NotInvertible(std::to_string(q) + " is not invertible in the coefficients");
    if (!ar.is_ring()) throw NotInvertible("q-th roots need additive inverses");
    auto t = GradedSeries<Arith>::one(s.context(), s.weight(), s.degree(), ar);
    for (std::uint64_t d = 1; d <= s.degree(); ++d) {
        auto target = s.component(d);
        const auto power = series_pow(t.truncated(d), q).component(d);
        std::map<Word, typename Arith::value_type> diff = target;
        for (const auto& [w, c] : power) {
            auto it = diff.find(w);
            auto value = it == diff.end() ? ar.neg(c) : ar.add(it->second, ar.neg(c));
            diff[w] = value;
        }
        for (const auto& [w, c] : diff) {
            if (c != ar.zero()) t.add_term(w, ar.mul(*inv, c));
        }
    }
    return t;
}

/// S^(-1) for S with constant term 1; requires a ring.
template <class Arith>
GradedSeries<Arith> group_inverse(const GradedSeries<Arith>& s) {
    const Arith& ar = s.arith();
    if (s.constant_term() != ar.one()) throw ConstantTermNotOne();
    if (!ar.is_ring()) throw PreconditionViolated("group inverse needs a ring");
    auto t = GradedSeries<Arith>::one(s.context(), s.weight(), s.degree(), ar);
    for (std::uint64_t d = 1; d <= s.degree(); ++d) {
        for (const auto& [w, c] : (s * t).component(d)) t.add_term(w, ar.neg(c));
    }
    return t;
}

/// Integer series viewed over the rationals.
RationalSeries to_rational(const TruncSeries& s);

/// q-th root over the rationals of an integer series; with q > 0.
RationalSeries q_root_rational(const TruncSeries& s, std::uint64_t q);

struct EmbedReport {
    std::size_t classes = 0;
    /// Two distinct classes with the same truncated image.
    std::optional<std::pair<Word, Word>> collision;
    /// A class whose top component is not the class itself with coefficient 1.
    std::optional<Word> not_unitriangular;

    bool ok() const noexcept { return !collision && !not_unitriangular; }
};

/// Checks that the Magnus transform is unitriangular and injective on all
/// classes of weight <= max_weight.
EmbedReport embed_check(std::shared_ptr<const QuotientContext> ctx, const Semiring& k, const WeightFn& omega,
                        std::uint64_t max_weight);

/// One line per nonzero grade, `[g] terms`.
template <class Arith>
std::vector<std::pair<std::uint64_t, std::string>> format_series(const Alphabet& alphabet,
                                                                  const GradedSeries<Arith>& s) {
    std::vector<std::pair<std::uint64_t, std::string>> out;
    for (const auto& [key, c] : s.terms()) {
        std::string term;
        const std::string coeff = s.arith().format(c);
        if (key.second.empty()) {
            term = coeff;
        } else if (coeff == "1") {
            term = alphabet.format(key.second);
        } else if (coeff == "-1") {
            term = "-" + alphabet.format(key.second);
        } else {
            term = coeff + "*" + alphabet.format(key.second);
        }
        if (out.empty() || out.back().first != key.first) {
            out.emplace_back(key.first, term);
        } else if (term.front() == '-') {
            out.back().second += " - " + term.substr(1);
        } else {
            out.back().second += " + " + term;
        }
    }
    return out;
}

} // namespace shufcong

#endif
