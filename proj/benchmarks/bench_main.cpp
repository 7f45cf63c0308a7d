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

#include <benchmark/benchmark.h>

#include "shufcong/compat.hpp"
#include "shufcong/poly.hpp"

namespace {

using namespace shufcong;

void BM_Shuffle(benchmark::State& state) {
    const Semiring z = Semiring::integers();
    const auto n = static_cast<std::size_t>(state.range(0));
    Word u;
    Word v;
    for (std::size_t i = 0; i < n; ++i) {
        u.push_back(static_cast<Letter>(i % 2));
        v.push_back(static_cast<Letter>((i + 1) % 2));
    }
    const Poly p = Poly::monomial(z, u);
    const Poly r = Poly::monomial(z, v);
    for (auto _ : state) benchmark::DoNotOptimize(shuffle_product(p, r));
}
BENCHMARK(BM_Shuffle)->DenseRange(2, 8, 2);

void BM_Infiltration(benchmark::State& state) {
    const Semiring z = Semiring::integers();
    Word u;
    for (std::int64_t i = 0; i < state.range(0); ++i) u.push_back(Letter(0));
    const Poly p = Poly::monomial(z, u);
    for (auto _ : state) benchmark::DoNotOptimize(infiltration_product(p, p));
}
BENCHMARK(BM_Infiltration)->DenseRange(2, 8, 2);

Presentation power_commutations() {
    return parse_presentation(
        "alphabet a b\n"
        "relator a^2 b^2 a^2 b^2 = b^2 a^2 b^2 a^2\n"
        "relator a^4 b^2 = b^2 a^4\n"
        "relator b^4 a^2 = a^2 b^4\n");
}

void BM_NormalForms(benchmark::State& state) {
    const auto words = words_up_to(2, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        QuotientContext ctx(power_commutations());
        for (const auto& w : words) benchmark::DoNotOptimize(ctx.normal_form(w));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_NormalForms)->Arg(6)->Arg(8)->Arg(10);

void BM_Compatibility(benchmark::State& state) {
    const Semiring k = state.range(0) == 0 ? Semiring::integers_mod(2) : Semiring::integers();
    for (auto _ : state) {
        QuotientContext ctx(power_commutations());
        benchmark::DoNotOptimize(check_compatibility(ctx, k));
    }
}
BENCHMARK(BM_Compatibility)->Arg(0)->Arg(1);

} // namespace

BENCHMARK_MAIN();
