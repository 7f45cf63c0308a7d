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

#ifndef SHUFCONG_ERRORS_HPP
#define SHUFCONG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shufcong {

/// Malformed call: mismatched semirings, invalid letters, unsupported arguments.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Syntax error in a presentation file or a textual word/polynomial.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    /// 1-based line number, 0 when the input is not line-oriented.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A word mentions a token that is not in the alphabet.
class UnknownLetter : public ParseError {
public:
    UnknownLetter(std::size_t line, const std::string& token)
        : ParseError(line, "unknown letter '" + token + "'"), token_(token) {}

    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

/// The bounded congruence engine could not settle a question within its cap.
class Inconclusive : public std::runtime_error {
public:
    Inconclusive(std::size_t cap, const std::string& what)
        : std::runtime_error(what + " (exploration cap " + std::to_string(cap) + ")"), cap_(cap) {}

    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

class PreconditionViolated : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ConstantTermNotOne : public std::domain_error {
public:
    ConstantTermNotOne() : std::domain_error("series constant term is not 1") {}
};

} // namespace shufcong

#endif
