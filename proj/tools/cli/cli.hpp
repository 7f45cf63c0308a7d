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

#ifndef SHUFCONG_TOOLS_CLI_HPP
#define SHUFCONG_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace shufcong::cli {

enum ExitCode : int { kDefinite = 0, kUsage = 1, kInconclusive = 2 };

/// Runs one analysis. `args` excludes the program name. The report goes to
/// `out`, diagnostics and usage text to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a, 64 bits, as 16 lowercase hex digits.
std::string digest(std::string_view bytes);

} // namespace shufcong::cli

#endif
