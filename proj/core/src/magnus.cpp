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

#include "shufcong/magnus.hpp"

#include <set>

#include "shufcong/compat.hpp"

namespace shufcong {

namespace {

void require_series_setting(const QuotientContext& ctx, const Semiring& k, const WeightFn& omega) {
    if (omega.size() != ctx.alphabet().size()) throw UsageError("weight and alphabet differ in size");
    if (!is_homogeneous(ctx.presentation(), omega)) {
        throw PreconditionViolated("presentation is not homogeneous for the weight");
    }
    if (!check_compatibility(ctx, k).compatible) {
        throw PreconditionViolated("congruence is not compatible with the coproduct over " + k.to_string());
    }
}

TruncSeries letterwise_product(const std::shared_ptr<const QuotientContext>& ctx, const Semiring& k,
                               const WeightFn& omega, const Word& w, std::uint64_t degree) {
    const SemiringArith ar{k};
    auto s = TruncSeries::one(ctx, omega, degree, ar);
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto factor = TruncSeries::one(ctx, omega, degree, ar);
        factor.add_term(Word{w[i]}, k.one());
        s = s * factor;
    }
    return s;
}

} // namespace

TruncSeries magnus_transform(std::shared_ptr<const QuotientContext> ctx, const Semiring& k, const WeightFn& omega,
                             const Word& w, std::uint64_t degree) {
    require_series_setting(*ctx, k, omega);
    return letterwise_product(ctx, k, omega, w, degree);
}

TruncSeries magnus_via_coproduct(std::shared_ptr<const QuotientContext> ctx, const Semiring& k,
                                 const WeightFn& omega, const Word& w, std::uint64_t degree) {
    require_series_setting(*ctx, k, omega);
    const TensorPoly c = ctx->reduce_tensor(coproduct(Poly::monomial(k, w)));
    TruncSeries s(ctx, omega, degree, SemiringArith{k});
    for (const auto& [key, coeff] : c.terms()) s.add_term(key.first, coeff);
    return s;
}

RationalSeries to_rational(const TruncSeries& s) {
    if (s.arith().k != Semiring::integers()) throw UsageError("rational view needs integer coefficients");
    RationalSeries out(s.context(), s.weight(), s.degree(), RationalArith{});
    for (const auto& [key, c] : s.terms()) out.add_term(key.second, BigRational(c));
    return out;
}

RationalSeries q_root_rational(const TruncSeries& s, std::uint64_t q) { return q_root(to_rational(s), q); }

namespace {

void words_of_weight_at_most(const WeightFn& omega, std::uint64_t budget, Word& prefix, std::vector<Word>& out) {
    out.push_back(prefix);
    for (std::size_t a = 0; a < omega.size(); ++a) {
        const std::uint64_t wa = omega(static_cast<Letter>(a));
        if (wa > budget) continue;
        prefix.push_back(static_cast<Letter>(a));
        words_of_weight_at_most(omega, budget - wa, prefix, out);
        prefix = prefix.substr(0, prefix.size() - 1);
    }
}

} // namespace

EmbedReport embed_check(std::shared_ptr<const QuotientContext> ctx, const Semiring& k, const WeightFn& omega,
                        std::uint64_t max_weight) {
    require_series_setting(*ctx, k, omega);
    std::vector<Word> words;
    Word prefix;
    words_of_weight_at_most(omega, max_weight, prefix, words);
    std::set<Word> classes;
    for (const auto& w : words) classes.insert(ctx->normal_form(w));

    EmbedReport report;
    report.classes = classes.size();
    std::map<TruncSeries::Terms, Word> images;
    for (const auto& cls : classes) {
        TruncSeries s = letterwise_product(ctx, k, omega, cls, max_weight);
        const auto top = s.component(omega(cls));
        if (!report.not_unitriangular && (top.size() != 1 || top.begin()->first != cls || top.begin()->second != k.one())) {
            report.not_unitriangular = cls;
        }
        auto [it, fresh] = images.emplace(s.terms(), cls);
        if (!fresh && !report.collision) report.collision = std::make_pair(it->second, cls);
    }
    return report;
}

} // namespace shufcong
