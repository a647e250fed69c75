// Copyright 2026 The streamift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STREAMIFT_PARSER_HPP
#define STREAMIFT_PARSER_HPP

#include <streamift/system.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace streamift
{

// Syntax or semantic error in an input document. Line and column are
// 1-based; 0 means the error is not tied to a position.
class parse_error : public std::runtime_error
{
public:
    parse_error(const std::string &msg, std::size_t line, std::size_t column);

    std::size_t line() const
    {
        return line_;
    }
    std::size_t column() const
    {
        return column_;
    }

private:
    std::size_t line_;
    std::size_t column_;
};

using SymbolTable = std::map<std::string, VarId, std::less<>>;

// Expression grammar:
//
//   expr    := expr ('+' | '-') expr | expr '*' expr | '-' expr
//            | expr '^' INT | '(' expr ')' | NUMBER | IDENT
//   NUMBER  := digits ('/' digits)?
//
// Usual precedence: '^' binds tightest (left-associative, nonnegative integer
// literal exponent), then unary minus, then '*', then '+'/'-'. Products need
// an explicit '*'. The identifier x is always the distinguished variable.
Polynomial parse_expr(std::string_view text, const std::vector<std::string> &names);
Polynomial parse_expr(std::string_view text, const SymbolTable &symbols);

// System document:
//
//   # comment
//   vars: y1 y2 y3
//   order: y1 y2 y3          (optional, least first)
//   order 2: y3 y1 y2        (optional override for equation 2)
//   eqs:
//     y1 - x - (y2 + y3)^2
//     y2 = (y3 + y1)^2
//   init: 0 0 0
//
// An equation continues on the next line while parentheses are open or the
// line ends with an operator. `lhs = rhs` is stored as lhs - rhs.
PolySystem parse_system(std::string_view document);

// SDE document, as written by format_sde:
//
//   vars: y w
//   inverse: w               (optional; marks the inverse variable)
//   sde:
//     y' = -x*w
//     w' = 1/2*x*w^2
//   init:
//     y(0) = 1
//     w(0) = 1/2
//
// `init:` also accepts a plain list of rationals in declaration order.
SdeSystem parse_sde(std::string_view document);

// True when the document has an `sde:` section.
bool is_sde_document(std::string_view document);

std::variant<PolySystem, SdeSystem> parse_document(std::string_view document);

std::string format_system(const PolySystem &sys);
std::string format_sde(const SdeSystem &sys);

// Reads a whole file; throws std::runtime_error if unreadable.
std::string read_file(const std::string &path);

} // namespace streamift

#endif
