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

#include "integer_lattice.hpp"

#include <algorithm>
#include <utility>

namespace shufcong::detail {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt gcd_big(BigInt a, BigInt b) {
    a = abs_big(a);
    b = abs_big(b);
    while (b != 0) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0
void ext_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
    BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    g = r0;
    x = s0;
    y = t0;
}

} // namespace

BigInt gcd_of(const IntVector& v) {
    BigInt g = 0;
    for (const auto& x : v) g = gcd_big(g, x);
    return g;
}

std::size_t IntegerLattice::pivot_of(const IntVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) return i;
    }
    return v.size();
}

void IntegerLattice::add_generator(IntVector v) {
    v.resize(dim_);
    for (std::size_t r = 0; r < rows_.size();) {
        std::size_t c = pivot_of(rows_[r]);
        std::size_t pv = pivot_of(v);
        if (pv == dim_) return;
        if (pv < c) {
            // v has an earlier pivot: it becomes a row itself, the old one continues down
            if (v[pv] < 0) {
                for (auto& x : v) x = -x;
            }
            std::swap(v, rows_[r]);
            ++r;
            continue;
        }
        if (pv > c) {
            ++r;
            continue;
        }
        // same pivot: replace the row by the gcd combination, keep the remainder in v
        BigInt g, x, y;
        ext_gcd(rows_[r][c], v[c], g, x, y);
        BigInt a = rows_[r][c] / g, b = v[c] / g;
        IntVector row(dim_), rest(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            row[i] = x * rows_[r][i] + y * v[i];
            rest[i] = a * v[i] - b * rows_[r][i];
        }
        rows_[r] = std::move(row);
        v = std::move(rest);
        ++r;
    }
    if (pivot_of(v) == dim_) return;
    if (v[pivot_of(v)] < 0) {
        for (auto& x : v) x = -x;
    }
    rows_.push_back(std::move(v));
}

bool IntegerLattice::contains(IntVector v) const {
    v.resize(dim_);
    for (const auto& row : rows_) {
        std::size_t c = pivot_of(row);
        if (pivot_of(v) < c) return false;
        if (v[c] == 0) continue;
        if (v[c] % row[c] != 0) return false;
        BigInt f = v[c] / row[c];
        for (std::size_t i = c; i < dim_; ++i) v[i] -= f * row[i];
    }
    return pivot_of(v) == dim_;
}

std::vector<IntVector> kernel_basis(const std::vector<IntVector>& rows, std::size_t dim) {
    std::vector<IntVector> m;
    for (const auto& r : rows) {
        IntVector row = r;
        row.resize(dim);
        m.push_back(std::move(row));
    }

    // fraction-free reduction to reduced echelon form: row_i <- p*row_i - row_i[c]*pivot_row
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < dim && rank < m.size(); ++c) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c] == 0) continue;
            BigInt p = m[rank][c], f = m[i][c];
            for (std::size_t j = 0; j < dim; ++j) m[i][j] = p * m[i][j] - f * m[rank][j];
            BigInt g = gcd_of(m[i]);
            if (g > 1) {
                for (auto& x : m[i]) x /= g;
            }
        }
        pivot_cols.push_back(c);
        ++rank;
    }

    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        // x_f = L, x_c = -m[r][f] * L / m[r][c] for each pivot row r
        BigInt lcm = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            BigInt p = abs_big(m[r][pivot_cols[r]]);
            lcm = lcm / gcd_big(lcm, p) * p;
        }
        IntVector x(dim, 0);
        x[f] = lcm;
        for (std::size_t r = 0; r < rank; ++r) {
            std::size_t c = pivot_cols[r];
            x[c] = -m[r][f] * lcm / m[r][c];
        }
        BigInt g = gcd_of(x);
        if (g > 1) {
            for (auto& v : x) v /= g;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace shufcong::detail
