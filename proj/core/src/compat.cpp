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

#include "shufcong/compat.hpp"

#include <algorithm>
#include <set>

namespace shufcong {

namespace {

// Coefficient of the class pair ([x], [y]) in t, by summing every term whose
// components are equivalent to x and y. Nothing when some comparison is open.
std::optional<Value> class_pair_sum(const QuotientContext& ctx, const Semiring& k, const TensorPoly& t,
                                    const Word& x, const Word& y) {
    Value sum = k.zero();
    for (const auto& [key, c] : t.terms()) {
        auto l = ctx.try_equivalent(key.first, x);
        if (!l) return std::nullopt;
        if (!*l) continue;
        auto r = ctx.try_equivalent(key.second, y);
        if (!r) return std::nullopt;
        if (*r) sum = k.add(sum, c);
    }
    return sum;
}

Word representative(const QuotientContext& ctx, const Word& w) {
    auto nf = ctx.try_normal_form(w);
    return nf ? *nf : w;
}

// Witness for one relator, nothing when c(u) and c(v) agree; throws
// Inconclusive when neither can be shown.
std::optional<CompatWitness> relator_witness(const QuotientContext& ctx, const Semiring& k, const Relator& rel) {
    const auto& [u, v] = rel;
    const TensorPoly cu = coproduct(Poly::monomial(k, u));
    const TensorPoly cv = coproduct(Poly::monomial(k, v));

    bool all_closed = true;
    for (const auto* t : {&cu, &cv}) {
        for (const auto& [key, c] : t->terms()) {
            if (!ctx.try_normal_form(key.first) || !ctx.try_normal_form(key.second)) {
                all_closed = false;
                break;
            }
        }
        if (!all_closed) break;
    }

    if (all_closed) {
        const TensorPoly ru = ctx.reduce_tensor(cu);
        const TensorPoly rv = ctx.reduce_tensor(cv);
        if (ru == rv) return std::nullopt;
        std::set<TensorPoly::Key> keys;
        for (const auto& [key, c] : ru.terms()) keys.insert(key);
        for (const auto& [key, c] : rv.terms()) keys.insert(key);
        for (const auto& key : keys) {
            Value a = ru.coefficient(key.first, key.second);
            Value b = rv.coefficient(key.first, key.second);
            if (a != b) return CompatWitness{rel, key.first, key.second, a, b};
        }
        return std::nullopt;
    }

    std::set<TensorPoly::Key> candidates;
    for (const auto& [key, c] : cu.terms()) candidates.insert(key);
    for (const auto& [key, c] : cv.terms()) candidates.insert(key);
    bool undecided = false;
    for (const auto& [x, y] : candidates) {
        auto a = class_pair_sum(ctx, k, cu, x, y);
        auto b = class_pair_sum(ctx, k, cv, x, y);
        if (!a || !b) {
            undecided = true;
            continue;
        }
        if (*a != *b) return CompatWitness{rel, representative(ctx, x), representative(ctx, y), *a, *b};
    }
    if (undecided) throw Inconclusive(ctx.cap(), "coproduct comparison for a relator is open");
    return std::nullopt;
}

} // namespace

CompatReport check_compatibility(const QuotientContext& ctx, const Semiring& k) {
    bool undecided = false;
    for (const auto& rel : ctx.presentation().relators()) {
        try {
            if (auto w = relator_witness(ctx, k, rel)) return CompatReport{false, std::move(w)};
        } catch (const Inconclusive&) {
            undecided = true;
        }
    }
    if (undecided) throw Inconclusive(ctx.cap(), "compatibility could not be settled");
    return CompatReport{true, std::nullopt};
}

Value split_coefficient(const QuotientContext& ctx, const Semiring& k, const Word& w, const Word& x,
                        const Word& y) {
    if (w.size() >= 26) throw UsageError("word too long for split enumeration");
    Value sum = k.zero();
    const std::uint64_t count = std::uint64_t{1} << w.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        Word left;
        Word right;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (mask >> i & 1U) {
                left.push_back(w[i]);
            } else {
                right.push_back(w[i]);
            }
        }
        if (ctx.equivalent(left, x) && ctx.equivalent(right, y)) sum = k.add(sum, k.one());
    }
    return sum;
}

bool verify_witness(const QuotientContext& ctx, const Semiring& k, const CompatWitness& w) {
    const auto& [u, v] = w.relator;
    if (!ctx.presentation().contains(u, v) && !ctx.equivalent(u, v)) return false;
    Value a = split_coefficient(ctx, k, u, w.left, w.right);
    Value b = split_coefficient(ctx, k, v, w.left, w.right);
    return a == w.coeff_u && b == w.coeff_v && a != b;
}

PrimitivityOracle::PrimitivityOracle(const QuotientContext& ctx, Semiring k) : ctx_(&ctx), k_(k) {
    if (!check_compatibility(ctx, k).compatible) {
        throw PreconditionViolated("congruence is not compatible with the coproduct over " + k.to_string());
    }
}

bool PrimitivityOracle::operator()(const Poly& p) const {
    if (p.semiring() != k_) throw UsageError("polynomial over the wrong semiring");
    const TensorPoly lhs = ctx_->reduce_tensor(coproduct(p));
    const Poly unit = Poly::monomial(k_, Word{});
    const TensorPoly rhs = ctx_->reduce_tensor(tensor(p, unit) + tensor(unit, p));
    return lhs == rhs;
}

bool is_primitive(const QuotientContext& ctx, const Semiring& k, const Poly& p) {
    return PrimitivityOracle(ctx, k)(p);
}

namespace {

Poly binomial(const Semiring& k, const Word& u, const Word& v) {
    Poly p = Poly::monomial(k, u);
    p -= Poly::monomial(k, v);
    return p;
}

bool generates(const QuotientContext& ctx, const std::vector<Relator>& pairs) {
    return std::all_of(pairs.begin(), pairs.end(),
                       [&](const Relator& r) { return ctx.equivalent(r.first, r.second); });
}

Presentation presentation_of(const Alphabet& alphabet, const std::vector<Relator>& pairs) {
    Presentation p(alphabet);
    for (const auto& [u, v] : pairs) p.add_relator(u, v);
    return p;
}

bool contains(const std::set<Relator>& s, const Relator& r) { return s.count(r) > 0; }

} // namespace

PrimitivePartition primitive_partition(const Presentation& p, const Semiring& k, const ContextOptions& options,
                                       PartitionConvention convention) {
    const SemiringClass cls = classify_semiring(k);
    if (cls.kind != SemiringClass::Kind::RingCharPrime) throw NonPrimeCharacteristic(k);

    ContextOptions opts = options;
    if (!opts.cap) opts.cap = default_cap(p);
    QuotientContext ctx(p, opts);
    if (!check_compatibility(ctx, k).compatible) {
        throw PreconditionViolated("congruence is not compatible with the coproduct over " + k.to_string());
    }

    PrimitivePartition out;
    const Presentation closed = closure_of_relators(ctx);
    out.closure.assign(closed.relators().begin(), closed.relators().end());
    const Alphabet& alphabet = p.alphabet();

    std::set<Relator> in_layers;
    std::set<Relator> in_absorbed;
    std::vector<Relator> generated;
    for (std::size_t stage = 1;; ++stage) {
        QuotientContext prev(presentation_of(alphabet, generated), opts);
        if (generates(prev, out.closure)) break;

        PrimitivityOracle primitive(prev, k);
        std::vector<Relator> layer;
        for (const auto& r : out.closure) {
            if (contains(in_layers, r)) continue;
            if (contains(in_absorbed, r)) continue;
            if (primitive(binomial(k, r.first, r.second))) layer.push_back(r);
        }
        if (layer.empty()) throw NoProgress(stage);

        generated.insert(generated.end(), layer.begin(), layer.end());
        in_layers.insert(layer.begin(), layer.end());

        QuotientContext by(presentation_of(alphabet, convention == PartitionConvention::AsWritten ? layer : generated),
                           opts);
        std::vector<Relator> absorbed;
        for (const auto& r : out.closure) {
            if (contains(in_layers, r)) continue;
            if (convention == PartitionConvention::Cumulative && contains(in_absorbed, r)) continue;
            if (by.equivalent(r.first, r.second)) absorbed.push_back(r);
        }
        in_absorbed.insert(absorbed.begin(), absorbed.end());
        out.layers.push_back(std::move(layer));
        out.absorbed.push_back(std::move(absorbed));
    }
    for (const auto& r : out.closure) {
        if (!contains(in_layers, r) && !contains(in_absorbed, r)) out.leftover.push_back(r);
    }
    return out;
}

bool verify_partition(const Presentation& p, const Semiring& k, const PrimitivePartition& partition,
                      const ContextOptions& options) {
    ContextOptions opts = options;
    if (!opts.cap) opts.cap = default_cap(p);
    std::vector<Relator> generated;
    std::set<Relator> seen;
    for (const auto& layer : partition.layers) {
        QuotientContext prev(presentation_of(p.alphabet(), generated), opts);
        PrimitivityOracle primitive(prev, k);
        for (const auto& r : layer) {
            if (!seen.insert(r).second) return false;
            if (!primitive(binomial(k, r.first, r.second))) return false;
        }
        generated.insert(generated.end(), layer.begin(), layer.end());
    }
    QuotientContext all(presentation_of(p.alphabet(), generated), opts);
    QuotientContext original(p, opts);
    if (!generates(all, std::vector<Relator>(p.relators().begin(), p.relators().end()))) return false;
    return generates(original, generated);
}

namespace {

// Theta such that the residual congruence is the partially commutative one,
// or nothing.
std::optional<ThetaGraph> trace_shape(const Presentation& p, const PreNormalization& pn, const ContextOptions& options) {
    const std::size_t n = p.alphabet().size();
    for (const auto& [u, v] : pn.residual_relators) {
        for (std::size_t a = 0; a < n; ++a) {
            if (u.count(static_cast<Letter>(a)) != v.count(static_cast<Letter>(a))) return std::nullopt;
        }
    }
    Presentation residual(p.alphabet());
    for (const auto& [u, v] : pn.residual_relators) residual.add_relator(u, v);
    ContextOptions opts = options;
    opts.weight = WeightFn::uniform(n);
    QuotientContext ctx(residual, opts);
    std::vector<std::pair<Letter, Letter>> pairs;
    for (std::size_t i = 0; i < pn.survivors.size(); ++i) {
        for (std::size_t j = i + 1; j < pn.survivors.size(); ++j) {
            Letter a = pn.survivors[i];
            Letter b = pn.survivors[j];
            if (ctx.equivalent(Word{a, b}, Word{b, a})) pairs.emplace_back(a, b);
        }
    }
    ThetaGraph theta(n, pairs);
    for (const auto& [u, v] : pn.residual_relators) {
        if (canonical_word(theta, u) != canonical_word(theta, v)) return std::nullopt;
    }
    return theta;
}

Classification incompatible_or_fail(const Presentation& p, const Semiring& k, const ContextOptions& options) {
    QuotientContext ctx(p, options);
    CompatReport report = check_compatibility(ctx, k);
    if (report.compatible) {
        throw std::logic_error("congruence over " + k.to_string() +
                               " is compatible but not partially commutative");
    }
    return IncompatibleQuotient{std::move(report)};
}

} // namespace

Classification boolean_classify(const Presentation& p, const ContextOptions& options) {
    const std::size_t cap = options.cap.value_or(default_cap(p));
    PreNormalization pn = pre_normalize(p, cap);
    if (auto theta = trace_shape(p, pn, options)) {
        return PartiallyCommutative{std::move(*theta), pn.identifications, pn.erasures};
    }
    return incompatible_or_fail(p, Semiring::boolean(), options);
}

Classification classify_quotient(const Presentation& p, const Semiring& k, const ContextOptions& options) {
    const SemiringClass cls = classify_semiring(k);
    switch (cls.kind) {
    case SemiringClass::Kind::BooleanIdempotent:
        return boolean_classify(p, options);
    case SemiringClass::Kind::RingCharPrime: {
        QuotientContext ctx(p, options);
        CompatReport report = check_compatibility(ctx, k);
        if (!report.compatible) return IncompatibleQuotient{std::move(report)};
        return PrimeDecomposition{cls.characteristic, primitive_partition(p, k, options)};
    }
    default:
        break;
    }
    const std::size_t cap = options.cap.value_or(default_cap(p));
    PreNormalization pn = pre_normalize(p, cap);
    if (pn.erasures.empty()) {
        if (auto theta = trace_shape(p, pn, options)) {
            return PartiallyCommutative{std::move(*theta), pn.identifications, {}};
        }
    }
    return incompatible_or_fail(p, k, options);
}

std::vector<std::pair<Word, Word>> classify_primitive_binomials(std::uint64_t p, const Alphabet& alphabet,
                                                                const ThetaGraph& theta, std::size_t maxlen) {
    if (!is_prime(p)) throw UsageError("p must be prime");
    if (theta.letters() != alphabet.size()) throw UsageError("commutation graph and alphabet differ in size");
    const Semiring k = Semiring::integers_mod(p);
    QuotientContext ctx(theta.presentation(alphabet));
    PrimitivityOracle primitive(ctx, k);
    std::vector<Word> traces;
    for (const auto& w : words_up_to(alphabet.size(), maxlen)) {
        if (canonical_word(theta, w) == w) traces.push_back(w);
    }
    std::vector<std::pair<Word, Word>> out;
    for (std::size_t i = 0; i < traces.size(); ++i) {
        for (std::size_t j = i + 1; j < traces.size(); ++j) {
            if (primitive(binomial(k, traces[i], traces[j]))) out.emplace_back(traces[i], traces[j]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// e = p^k for some k >= 0
std::optional<std::int64_t> log_p(std::size_t e, std::uint64_t p) {
    if (e == 0) return std::nullopt;
    std::int64_t k = 0;
    while (e % p == 0) {
        e /= p;
        ++k;
    }
    if (e != 1) return std::nullopt;
    return k;
}

// a^n
std::optional<std::pair<Letter, std::size_t>> as_power(const Word& w) {
    if (w.empty()) return std::nullopt;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] != w[0]) return std::nullopt;
    }
    return std::make_pair(w[0], w.size());
}

// a^m b^n with a != b
std::optional<std::pair<std::pair<Letter, std::size_t>, std::pair<Letter, std::size_t>>> as_two_blocks(const Word& w) {
    if (w.empty()) return std::nullopt;
    std::size_t m = 1;
    while (m < w.size() && w[m] == w[0]) ++m;
    if (m == w.size()) return std::nullopt;
    auto rest = as_power(w.substr(m));
    if (!rest) return std::nullopt;
    return std::make_pair(std::make_pair(w[0], m), *rest);
}

} // namespace

PliResult pli_consistency(const Presentation& p, std::uint64_t prime) {
    if (!is_prime(prime)) throw UsageError("p must be prime");
    const Alphabet& alphabet = p.alphabet();
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> d;
    std::map<std::pair<std::size_t, std::size_t>, Relator> source;

    for (const auto& rel : p.relators()) {
        const auto& [u, v] = rel;
        auto pu = as_power(u);
        auto pv = as_power(v);
        if (pu && pv) {
            auto alpha = log_p(pu->second, prime);
            auto beta = log_p(pv->second, prime);
            if (!alpha || !beta) throw ShapeError(format_relator(alphabet, rel));
            if (pu->first == pv->first) return NonCancellable{rel, rel};
            // a^(p^alpha) = b^(p^beta) gives d(a, b) = alpha - beta
            std::size_t a = pu->first;
            std::size_t b = pv->first;
            std::int64_t value = *alpha - *beta;
            if (a > b) {
                std::swap(a, b);
                value = -value;
            }
            auto [it, fresh] = d.emplace(std::make_pair(a, b), value);
            if (!fresh && it->second != value) return NonCancellable{source.at({a, b}), rel};
            source.emplace(std::make_pair(a, b), rel);
            continue;
        }
        auto bu = as_two_blocks(u);
        auto bv = as_two_blocks(v);
        if (bu && bv && bu->first == bv->second && bu->second == bv->first && log_p(bu->first.second, prime) &&
            log_p(bu->second.second, prime)) {
            continue;
        }
        throw ShapeError(format_relator(alphabet, rel));
    }

    std::vector<std::int64_t> h;
    try {
        h = letg_potential(alphabet.size(), d);
    } catch (const CocycleViolation& e) {
        auto find = [&](std::size_t x, std::size_t y) -> std::optional<Relator> {
            auto it = source.find({std::min(x, y), std::max(x, y)});
            if (it == source.end()) return std::nullopt;
            return it->second;
        };
        std::vector<Relator> involved;
        for (auto [x, y] : {std::pair{e.a, e.b}, std::pair{e.b, e.c}, std::pair{e.c, e.a}}) {
            if (auto r = find(x, y)) involved.push_back(*r);
        }
        if (involved.empty()) throw;
        return NonCancellable{involved.front(), involved.size() > 1 ? involved[1] : involved.front()};
    }

    std::vector<std::uint64_t> weights;
    for (std::int64_t hv : h) {
        std::uint64_t w = 1;
        for (std::int64_t i = 0; i < hv; ++i) w *= prime;
        weights.push_back(w);
    }
    std::map<std::pair<Letter, Letter>, std::int64_t> dl;
    for (const auto& [key, value] : d) dl.emplace(std::make_pair(Letter(key.first), Letter(key.second)), value);
    return PliConsistent{std::move(dl), std::move(h), WeightFn(std::move(weights))};
}

std::optional<CancellationFailure> cancellability_search(const QuotientContext& ctx, std::size_t bound) {
    const std::vector<Word> words = words_up_to(ctx.alphabet().size(), bound);
    bool undecided = false;
    for (std::size_t vi = 0; vi < words.size(); ++vi) {
        for (std::size_t ui = vi + 1; ui < words.size(); ++ui) {
            const Word& u = words[ui];
            const Word& v = words[vi];
            auto same = ctx.try_equivalent(u, v);
            if (!same) undecided = true;
            if (!same || *same) continue;
            for (const auto& x : words) {
                if (x.empty()) continue;
                auto l = ctx.try_equivalent(x + u, x + v);
                if (l && *l) return CancellationFailure{x, u, v, true};
                auto r = ctx.try_equivalent(u + x, v + x);
                if (r && *r) return CancellationFailure{x, u, v, false};
                if (!l || !r) undecided = true;
            }
        }
    }
    if (undecided) throw Inconclusive(ctx.cap(), "cancellability search left comparisons open");
    return std::nullopt;
}

} // namespace shufcong
