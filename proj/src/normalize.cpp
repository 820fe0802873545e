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

#include "aspfix/normalize.hpp"

#include <algorithm>
#include <utility>

namespace aspfix {

namespace {

void norm_term(Term& t) {
  for (Term& a : t.args) norm_term(a);
  if (t.kind == TermKind::BinOp && (t.op == ArithOp::Add || t.op == ArithOp::Mul)) {
    if (compare(t.args[0], t.args[1]) == std::strong_ordering::greater) {
      std::swap(t.args[0], t.args[1]);
    }
  }
}

void norm_atom(Atom& a) {
  for (Term& t : a.args) norm_term(t);
  if (a.comparison && (a.cmp == CmpOp::Eq || a.cmp == CmpOp::Neq)) {
    if (compare(a.args[0], a.args[1]) == std::strong_ordering::greater) {
      std::swap(a.args[0], a.args[1]);
    }
  }
}

void norm_literal(Literal& l) { norm_atom(l.atom); }

bool is_zero(const Term& t) { return t.kind == TermKind::Integer && t.value == 0; }

}  // namespace

Statement normalize(const Statement& st) {
  Statement out = st;
  switch (out.head.kind) {
    case HeadKind::None:
      break;
    case HeadKind::Atom:
      norm_atom(out.head.atom);
      break;
    case HeadKind::Choice:
      if (out.head.lower) {
        norm_term(*out.head.lower);
        if (is_zero(*out.head.lower)) out.head.lower.reset();
      }
      if (out.head.upper) norm_term(*out.head.upper);
      for (ChoiceElement& e : out.head.elements) {
        norm_atom(e.atom);
        for (Literal& l : e.condition) norm_literal(l);
      }
      break;
  }
  for (Literal& l : out.body) norm_literal(l);
  std::stable_sort(out.body.begin(), out.body.end(), [](const Literal& a, const Literal& b) {
    return compare(a, b) == std::strong_ordering::less;
  });
  return out;
}

Program normalize(const Program& p) {
  Program out = p;
  for (Statement& st : out.statements) st = normalize(st);
  return out;
}

}  // namespace aspfix
