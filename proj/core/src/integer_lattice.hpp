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

#ifndef SHUFCONG_INTEGER_LATTICE_HPP
#define SHUFCONG_INTEGER_LATTICE_HPP

#include <cstddef>
#include <vector>

#include "shufcong/semiring.hpp"

namespace shufcong::detail {

using IntVector = std::vector<BigInt>;

/// Sub-lattice of Z^n kept in row echelon (Hermite-style) form so that
/// membership is decided exactly.
class IntegerLattice {
public:
    explicit IntegerLattice(std::size_t dim) : dim_(dim) {}

    void add_generator(IntVector v);
    bool contains(IntVector v) const;
    std::size_t rank() const noexcept { return rows_.size(); }

private:
    static std::size_t pivot_of(const IntVector& v);

    std::size_t dim_;
    std::vector<IntVector> rows_;  // sorted by pivot column, pivots positive
};

/// Integer basis of the rational kernel {x : r.x = 0 for every row r},
/// each vector primitive (gcd 1). Computed by fraction-free elimination.
std::vector<IntVector> kernel_basis(const std::vector<IntVector>& rows, std::size_t dim);

BigInt gcd_of(const IntVector& v);

} // namespace shufcong::detail

#endif
