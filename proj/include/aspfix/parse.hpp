// Copyright 2026 The Aspfix Authors. All rights reserved.
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

#ifndef ASPFIX_PARSE_HPP
#define ASPFIX_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aspfix/ast.hpp"

namespace aspfix {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, const std::string& expected);
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

class ArityMismatch : public std::runtime_error {
 public:
  ArityMismatch(std::string predicate, int first, int second);
  const std::string& predicate() const { return predicate_; }
  int first_arity() const { return first_; }
  int second_arity() const { return second_; }

 private:
  std::string predicate_;
  int first_, second_;
};

/// Parses UTF-8 source into a Program. `%` comments are stripped and
/// statements are split on terminating dots. Only `#const name = int.`
/// directives are accepted; anything else starting with `#` is rejected.
Program parse(std::string_view text);

/// Parses a single statement (without trailing program context). Throws the
/// same errors as parse().
Statement parse_statement(std::string_view text);

/// Parses a ground predicate atom such as "sel(2)" or "e(1,a)".
Atom parse_ground_atom(std::string_view text);

}  // namespace aspfix

#endif  // ASPFIX_PARSE_HPP
