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

#ifndef SHUFCONG_SEMIRING_HPP
#define SHUFCONG_SEMIRING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace shufcong {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Coefficient value. Always stored normalized for the semiring it belongs to:
/// 0/1 for the booleans, a residue in [0,n) for Z/n, nonnegative for N.
using Value = BigInt;

enum class SemiringKind { Naturals, Boolean, Integers, IntegersMod };

/// Where the subsemiring generated by 1 sits in the compatibility case split.
struct SemiringClass {
    enum class Kind { BooleanIdempotent, NonRing, RingChar0, RingCharPrime, RingCharComposite };

    Kind kind;
    std::uint64_t characteristic = 0;  // p or n for the two modular kinds

    friend bool operator==(const SemiringClass&, const SemiringClass&) = default;
};

std::string to_string(SemiringClass::Kind kind);

/// One of N, B, Z, Z/n with exact arithmetic.
class Semiring {
public:
    static Semiring naturals() { return Semiring(SemiringKind::Naturals, 0); }
    static Semiring boolean() { return Semiring(SemiringKind::Boolean, 0); }
    static Semiring integers() { return Semiring(SemiringKind::Integers, 0); }
    /// Throws UsageError when n < 2.
    static Semiring integers_mod(std::uint64_t n);

    /// Parses `N`, `B`, `Z` or `Z/n`.
    static Semiring parse(std::string_view text);

    SemiringKind kind() const noexcept { return kind_; }
    /// n for Z/n, 0 otherwise.
    std::uint64_t modulus() const noexcept { return modulus_; }
    bool is_ring() const noexcept {
        return kind_ == SemiringKind::Integers || kind_ == SemiringKind::IntegersMod;
    }

    Value zero() const { return Value(0); }
    Value one() const { return Value(1); }
    bool is_zero(const Value& v) const { return v == 0; }

    /// Image of an integer under Z -> K. Negative integers require a ring.
    Value from_integer(const BigInt& n) const;
    Value add(const Value& a, const Value& b) const;
    Value mul(const Value& a, const Value& b) const;
    /// Additive inverse; throws UsageError outside rings.
    Value neg(const Value& a) const;
    Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }
    /// Multiplicative inverse when it exists in K.
    std::optional<Value> inverse(const Value& a) const;

    std::string to_string() const;
    std::string format(const Value& v) const;

    friend bool operator==(const Semiring&, const Semiring&) = default;
    friend auto operator<=>(const Semiring&, const Semiring&) = default;

private:
    Semiring(SemiringKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    SemiringKind kind_;
    std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

SemiringClass classify_semiring(const Semiring& k);

} // namespace shufcong

#endif
