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

#include "shufcong/semiring.hpp"

#include <charconv>

#include "shufcong/errors.hpp"

namespace shufcong {

std::string to_string(SemiringClass::Kind kind) {
    switch (kind) {
    case SemiringClass::Kind::BooleanIdempotent: return "BooleanIdempotent";
    case SemiringClass::Kind::NonRing: return "NonRing";
    case SemiringClass::Kind::RingChar0: return "RingChar0";
    case SemiringClass::Kind::RingCharPrime: return "RingCharPrime";
    case SemiringClass::Kind::RingCharComposite: return "RingCharComposite";
    }
    return "?";
}

Semiring Semiring::integers_mod(std::uint64_t n) {
    if (n < 2) {
        throw UsageError("Z/n requires n >= 2, got " + std::to_string(n));
    }
    return Semiring(SemiringKind::IntegersMod, n);
}

Semiring Semiring::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text == "N") return naturals();
    if (text == "B") return boolean();
    if (text == "Z") return integers();
    if (text.starts_with("Z/")) {
        auto digits = text.substr(2);
        std::uint64_t n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
            return integers_mod(n);
        }
    }
    throw ParseError(0, "unknown semiring '" + std::string(text) + "' (expected N, B, Z or Z/n)");
}

Value Semiring::from_integer(const BigInt& n) const {
    switch (kind_) {
    case SemiringKind::Boolean:
        if (n < 0) throw UsageError("negative integer has no image in B");
        return n == 0 ? Value(0) : Value(1);
    case SemiringKind::Naturals:
        if (n < 0) throw UsageError("negative integer has no image in N");
        return n;
    case SemiringKind::Integers:
        return n;
    case SemiringKind::IntegersMod: {
        BigInt r = n % modulus_;
        if (r < 0) r += modulus_;
        return r;
    }
    }
    return n;
}

Value Semiring::add(const Value& a, const Value& b) const {
    switch (kind_) {
    case SemiringKind::Boolean: return (a != 0 || b != 0) ? Value(1) : Value(0);
    case SemiringKind::IntegersMod: {
        Value s = a + b;
        if (s >= modulus_) s -= modulus_;
        return s;
    }
    default: return a + b;
    }
}

Value Semiring::mul(const Value& a, const Value& b) const {
    switch (kind_) {
    case SemiringKind::Boolean: return (a != 0 && b != 0) ? Value(1) : Value(0);
    case SemiringKind::IntegersMod: return Value((a * b) % modulus_);
    default: return a * b;
    }
}

Value Semiring::neg(const Value& a) const {
    switch (kind_) {
    case SemiringKind::Integers: return -a;
    case SemiringKind::IntegersMod: return a == 0 ? Value(0) : Value(modulus_ - a);
    default: throw UsageError("subtraction is undefined in " + to_string());
    }
}

std::optional<Value> Semiring::inverse(const Value& a) const {
    switch (kind_) {
    case SemiringKind::Boolean:
    case SemiringKind::Naturals:
    case SemiringKind::Integers:
        if (a == 1) return Value(1);
        if (kind_ == SemiringKind::Integers && a == -1) return Value(-1);
        return std::nullopt;
    case SemiringKind::IntegersMod: {
        // extended Euclid on (a, n)
        BigInt r0 = modulus_, r1 = a, t0 = 0, t1 = 1;
        while (r1 != 0) {
            BigInt q = r0 / r1;
            BigInt r2 = r0 - q * r1;
            r0 = r1;
            r1 = r2;
            BigInt t2 = t0 - q * t1;
            t0 = t1;
            t1 = t2;
        }
        if (r0 != 1) return std::nullopt;
        return from_integer(t0);
    }
    }
    return std::nullopt;
}

std::string Semiring::to_string() const {
    switch (kind_) {
    case SemiringKind::Naturals: return "N";
    case SemiringKind::Boolean: return "B";
    case SemiringKind::Integers: return "Z";
    case SemiringKind::IntegersMod: return "Z/" + std::to_string(modulus_);
    }
    return "?";
}

std::string Semiring::format(const Value& v) const { return v.str(); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

SemiringClass classify_semiring(const Semiring& k) {
    using Kind = SemiringClass::Kind;
    switch (k.kind()) {
    case SemiringKind::Boolean: return {Kind::BooleanIdempotent, 0};
    case SemiringKind::Naturals: return {Kind::NonRing, 0};
    case SemiringKind::Integers: return {Kind::RingChar0, 0};
    case SemiringKind::IntegersMod:
        return {is_prime(k.modulus()) ? Kind::RingCharPrime : Kind::RingCharComposite, k.modulus()};
    }
    return {Kind::NonRing, 0};
}

} // namespace shufcong
