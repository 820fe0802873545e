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

#ifndef ASPFIX_PRINT_HPP
#define ASPFIX_PRINT_HPP

#include <string>

#include "aspfix/ast.hpp"

namespace aspfix {

std::string to_text(const Term& t);
std::string to_text(const Atom& a);
std::string to_text(const Literal& l);
std::string to_text(const Head& h);

/// Canonical single-line form of a statement, e.g. "a :- b, not c."
/// Predicate arguments are printed tight ("e(X,Y)"); statement-level lists
/// use a single space after commas.
std::string to_text(const Statement& st);

/// One statement per line; #const directives first, sorted by name.
/// print(parse(t)) re-parses to a structurally equal Program.
std::string print(const Program& p);

}  // namespace aspfix

#endif  // ASPFIX_PRINT_HPP
