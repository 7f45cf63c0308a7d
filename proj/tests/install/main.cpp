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

#include <iostream>

#include "shufcong/compat.hpp"
int main() {
    auto p = shufcong::parse_presentation("alphabet a b\nrelator a b = b a\n");
    shufcong::QuotientContext ctx(p);
    std::cout << shufcong::check_compatibility(ctx, shufcong::Semiring::integers()).compatible << "\n";
}
