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

#include "shufcong/poly.hpp"

#include <cctype>
#include <vector>

#include "shufcong/errors.hpp"

namespace shufcong {

namespace {

void require_same_ring(const Semiring& a, const Semiring& b) {
    if (a != b) {
        throw UsageError("semiring mismatch: " + a.to_string() + " vs " + b.to_string());
    }
}

template <typename Map, typename Key>
void accumulate(const Semiring& k, Map& terms, const Key& key, const Value& c) {
    Value v = k.from_integer(c);
    if (k.is_zero(v)) return;
    auto [it, inserted] = terms.try_emplace(key, v);
    if (!inserted) {
        it->second = k.add(it->second, v);
        if (k.is_zero(it->second)) terms.erase(it);
    }
}

} // namespace

Poly Poly::monomial(Semiring k, const Word& w, const Value& c) {
    Poly p(k);
    p.add_term(w, c);
    return p;
}

Value Poly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Value(0) : it->second;
}

void Poly::add_term(const Word& w, const Value& c) { accumulate(ring_, terms_, w, c); }

Poly& Poly::operator+=(const Poly& other) {
    require_same_ring(ring_, other.ring_);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    require_same_ring(ring_, other.ring_);
    for (const auto& [w, c] : other.terms_) add_term(w, ring_.neg(c));
    return *this;
}

Poly Poly::scaled(const Value& c) const {
    Poly out(ring_);
    Value s = ring_.from_integer(c);
    for (const auto& [w, v] : terms_) out.add_term(w, ring_.mul(v, s));
    return out;
}

Poly Poly::negated() const {
    Poly out(ring_);
    for (const auto& [w, v] : terms_) out.add_term(w, ring_.neg(v));
    return out;
}

Value TensorPoly::coefficient(const Word& left, const Word& right) const {
    auto it = terms_.find(Key(left, right));
    return it == terms_.end() ? Value(0) : it->second;
}

void TensorPoly::add_term(const Word& left, const Word& right, const Value& c) {
    accumulate(ring_, terms_, Key(left, right), c);
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& other) {
    require_same_ring(ring_, other.ring_);
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& other) {
    require_same_ring(ring_, other.ring_);
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, ring_.neg(c));
    return *this;
}

Poly concat_product(const Poly& p, const Poly& q) {
    require_same_ring(p.semiring(), q.semiring());
    const auto& k = p.semiring();
    Poly out(k);
    for (const auto& [u, a] : p.terms()) {
        for (const auto& [v, b] : q.terms()) out.add_term(u + v, k.mul(a, b));
    }
    return out;
}

namespace {

// u[0,i) * v[0,j) for all i, j, filled row by row:
//   ua * vb = (u * vb)a + (ua * v)b + q[a = b](u * v)a
Poly word_cq_product(const Semiring& k, const Word& u, const Word& v, const Value& q) {
    const std::size_t n = u.size(), m = v.size();
    std::vector<std::vector<Poly>> table(n + 1, std::vector<Poly>(m + 1, Poly(k)));
    for (std::size_t i = 0; i <= n; ++i) table[i][0].add_term(u.substr(0, i), 1);
    for (std::size_t j = 1; j <= m; ++j) table[0][j].add_term(v.substr(0, j), 1);

    for (std::size_t i = 1; i <= n; ++i) {
        const Word a = Word::letter(u[i - 1]);
        for (std::size_t j = 1; j <= m; ++j) {
            const Word b = Word::letter(v[j - 1]);
            Poly& cell = table[i][j];
            for (const auto& [w, c] : table[i - 1][j].terms()) cell.add_term(w + a, c);
            for (const auto& [w, c] : table[i][j - 1].terms()) cell.add_term(w + b, c);
            if (u[i - 1] == v[j - 1] && !k.is_zero(q)) {
                for (const auto& [w, c] : table[i - 1][j - 1].terms()) cell.add_term(w + a, k.mul(q, c));
            }
        }
    }
    return std::move(table[n][m]);
}

} // namespace

Poly cq_product(const Poly& p, const Poly& r, const Value& q) {
    require_same_ring(p.semiring(), r.semiring());
    const auto& k = p.semiring();
    const Value qk = k.from_integer(q);
    Poly out(k);
    for (const auto& [u, a] : p.terms()) {
        for (const auto& [v, b] : r.terms()) {
            out += word_cq_product(k, u, v, qk).scaled(k.mul(a, b));
        }
    }
    return out;
}

TensorPoly cq_coproduct(const Poly& p, const Value& q) {
    const auto& k = p.semiring();
    const Value qk = k.from_integer(q);
    TensorPoly out(k);
    for (const auto& [w, c] : p.terms()) {
        // expand prod over letters of (a(x)1 + 1(x)a + q a(x)a)
        TensorPoly acc(k);
        acc.add_term(Word(), Word(), c);
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Word a = Word::letter(w[i]);
            TensorPoly next(k);
            for (const auto& [key, v] : acc.terms()) {
                next.add_term(key.first + a, key.second, v);
                next.add_term(key.first, key.second + a, v);
                if (!k.is_zero(qk)) next.add_term(key.first + a, key.second + a, k.mul(qk, v));
            }
            acc = std::move(next);
        }
        out += acc;
    }
    return out;
}

Poly hadamard_product(const Poly& p, const Poly& r) {
    require_same_ring(p.semiring(), r.semiring());
    const auto& k = p.semiring();
    Poly out(k);
    for (const auto& [w, a] : p.terms()) {
        auto it = r.terms().find(w);
        if (it != r.terms().end()) out.add_term(w, k.mul(a, it->second));
    }
    return out;
}

TensorPoly tensor(const Poly& p, const Poly& r) {
    require_same_ring(p.semiring(), r.semiring());
    const auto& k = p.semiring();
    TensorPoly out(k);
    for (const auto& [u, a] : p.terms()) {
        for (const auto& [v, b] : r.terms()) out.add_term(u, v, k.mul(a, b));
    }
    return out;
}

TensorPoly tensor_concat(const TensorPoly& s, const TensorPoly& t) {
    require_same_ring(s.semiring(), t.semiring());
    const auto& k = s.semiring();
    TensorPoly out(k);
    for (const auto& [x, a] : s.terms()) {
        for (const auto& [y, b] : t.terms()) {
            out.add_term(x.first + y.first, x.second + y.second, k.mul(a, b));
        }
    }
    return out;
}

namespace {

template <typename Terms, typename WriteKey>
std::string format_terms(const Semiring& k, const Terms& terms, WriteKey write_key) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms) {
        Value mag = c;
        bool negative = false;
        if (k.kind() == SemiringKind::Integers && c < 0) {
            negative = true;
            mag = -c;
        }
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string body = write_key(key);
        if (body == "1") {
            out += mag.str();
        } else if (mag == 1) {
            out += body;
        } else {
            out += mag.str() + "*" + body;
        }
    }
    return out;
}

} // namespace

std::string format_poly(const Alphabet& alphabet, const Poly& p) {
    return format_terms(p.semiring(), p.terms(), [&](const Word& w) { return alphabet.format(w); });
}

std::string format_tensor(const Alphabet& alphabet, const TensorPoly& t) {
    return format_terms(t.semiring(), t.terms(), [&](const TensorPoly::Key& key) {
        return alphabet.format(key.first) + "|" + alphabet.format(key.second);
    });
}

Poly parse_poly(const Alphabet& alphabet, const Semiring& k, std::string_view text) {
    Poly out(k);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (text.substr(i) == "0") return out;
    bool expect_term = true;
    int sign = 1;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -sign;
            ++i;
            expect_term = true;
            continue;
        }
        if (!expect_term) throw ParseError(0, "expected '+' or '-' in polynomial '" + std::string(text) + "'");
        std::size_t end = i;
        while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
        std::string_view term = text.substr(i, end - i);
        while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back()))) term.remove_suffix(1);
        i = end;

        BigInt coeff = 1;
        std::string_view word_text = term;
        auto all_digits = [](std::string_view s) {
            if (s.empty()) return false;
            for (char ch : s) {
                if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
            }
            return true;
        };
        if (auto star = term.find('*'); star != std::string_view::npos) {
            std::string_view num = term.substr(0, star);
            while (!num.empty() && std::isspace(static_cast<unsigned char>(num.back()))) num.remove_suffix(1);
            if (!all_digits(num)) throw ParseError(0, "bad coefficient '" + std::string(num) + "'");
            coeff = BigInt(std::string(num));
            word_text = term.substr(star + 1);
        } else if (all_digits(term) && !alphabet.contains(term)) {
            coeff = BigInt(std::string(term));
            word_text = "1";
        }
        Word w = alphabet.parse_word(word_text);
        out.add_term(w, k.from_integer(sign < 0 ? BigInt(-coeff) : coeff));
        sign = 1;
        expect_term = false;
    }
    if (expect_term && !out.is_zero()) throw ParseError(0, "dangling operator in polynomial");
    return out;
}

} // namespace shufcong
