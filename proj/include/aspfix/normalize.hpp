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

#ifndef ASPFIX_NORMALIZE_HPP
#define ASPFIX_NORMALIZE_HPP

#include "aspfix/ast.hpp"

namespace aspfix {

/// Canonical form: a choice lower bound of literal 0 is erased, operands of
/// commutative operators (add, mul, =, !=) are put into the fixed total
/// order, and the body literal list is sorted. Idempotent.
Statement normalize(const Statement& st);

/// normalize() applied to every statement; line indices are preserved.
Program normalize(const Program& p);

}  // namespace aspfix

#endif  // ASPFIX_NORMALIZE_HPP
