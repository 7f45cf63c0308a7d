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

#ifndef SHUFCONG_POLY_HPP
#define SHUFCONG_POLY_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "shufcong/semiring.hpp"
#include "shufcong/word.hpp"

namespace shufcong {

/// Finite linear combination of words with coefficients in a semiring.
/// Zero coefficients are never stored; terms iterate in length-lex order.
class Poly {
public:
    using Terms = std::map<Word, Value>;

    explicit Poly(Semiring k) : ring_(k) {}
    static Poly monomial(Semiring k, const Word& w, const Value& c = Value(1));

    const Semiring& semiring() const noexcept { return ring_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Value coefficient(const Word& w) const;

    /// Adds c*w (c is normalized into the semiring first).
    void add_term(const Word& w, const Value& c);

    Poly& operator+=(const Poly& other);
    /// Requires a ring.
    Poly& operator-=(const Poly& other);
    Poly scaled(const Value& c) const;
    Poly negated() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    Semiring ring_;
    Terms terms_;
};

/// Finite linear combination of pairs of words, i.e. an element of K<A> (x) K<A>.
class TensorPoly {
public:
    using Key = std::pair<Word, Word>;
    using Terms = std::map<Key, Value>;

    explicit TensorPoly(Semiring k) : ring_(k) {}

    const Semiring& semiring() const noexcept { return ring_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Value coefficient(const Word& left, const Word& right) const;

    void add_term(const Word& left, const Word& right, const Value& c);

    TensorPoly& operator+=(const TensorPoly& other);
    TensorPoly& operator-=(const TensorPoly& other);
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend bool operator==(const TensorPoly&, const TensorPoly&) = default;

private:
    Semiring ring_;
    Terms terms_;
};

/// Bilinear extension of concatenation.
Poly concat_product(const Poly& p, const Poly& q);

/// The q-infiltration product, dual to c_q = a(x)1 + 1(x)a + q a(x)a.
/// q = 0 is the shuffle, q = 1 the infiltration product.
Poly cq_product(const Poly& p, const Poly& r, const Value& q);
inline Poly shuffle_product(const Poly& p, const Poly& r) { return cq_product(p, r, Value(0)); }
inline Poly infiltration_product(const Poly& p, const Poly& r) { return cq_product(p, r, Value(1)); }

/// Concatenation-multiplicative extension of c_q on letters, linear in p.
TensorPoly cq_coproduct(const Poly& p, const Value& q);
/// The unshuffle coproduct c = c_0.
inline TensorPoly coproduct(const Poly& p) { return cq_coproduct(p, Value(0)); }

/// Pointwise coefficient product.
Poly hadamard_product(const Poly& p, const Poly& r);

/// p (x) r
TensorPoly tensor(const Poly& p, const Poly& r);
/// Componentwise concatenation (x (x) y)(x' (x) y') = xx' (x) yy'.
TensorPoly tensor_concat(const TensorPoly& s, const TensorPoly& t);

/// `2*aab + aba - b`; `0` for the zero polynomial; the unit prints as `1`
/// and c times the unit as `c`.
std::string format_poly(const Alphabet& alphabet, const Poly& p);
/// Terms `c*x|y`, with `|` separating the tensor factors.
std::string format_tensor(const Alphabet& alphabet, const TensorPoly& t);

/// Inverse of format_poly. Coefficients are integers mapped into k.
Poly parse_poly(const Alphabet& alphabet, const Semiring& k, std::string_view text);

} // namespace shufcong

#endif
