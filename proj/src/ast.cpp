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

#include "aspfix/ast.hpp"

#include <utility>

namespace aspfix {

Term Term::integer(long long v) {
  Term t;
  t.kind = TermKind::Integer;
  t.value = v;
  return t;
}

Term Term::sym(std::string n) {
  Term t;
  t.kind = TermKind::SymConst;
  t.name = std::move(n);
  return t;
}

Term Term::var(std::string n) {
  Term t;
  t.kind = TermKind::Variable;
  t.name = std::move(n);
  return t;
}

Term Term::anon() {
  Term t;
  t.kind = TermKind::Anonymous;
  return t;
}

Term Term::binop(ArithOp o, Term lhs, Term rhs) {
  Term t;
  t.kind = TermKind::BinOp;
  t.op = o;
  t.args.push_back(std::move(lhs));
  t.args.push_back(std::move(rhs));
  return t;
}

Term Term::abs(Term inner) {
  Term t;
  t.kind = TermKind::Abs;
  t.args.push_back(std::move(inner));
  return t;
}

Term Term::interval(Term lo, Term hi) {
  Term t;
  t.kind = TermKind::Interval;
  t.args.push_back(std::move(lo));
  t.args.push_back(std::move(hi));
  return t;
}

Term Term::pool(std::vector<Term> alternatives) {
  Term t;
  t.kind = TermKind::Pool;
  t.args = std::move(alternatives);
  return t;
}

Atom Atom::predicate(std::string name, std::vector<Term> args) {
  Atom a;
  a.pred = std::move(name);
  a.args = std::move(args);
  return a;
}

Atom Atom::compare_atom(CmpOp op, Term lhs, Term rhs) {
  Atom a;
  a.comparison = true;
  a.cmp = op;
  a.args.push_back(std::move(lhs));
  a.args.push_back(std::move(rhs));
  return a;
}

Head Head::none() { return Head{}; }

Head Head::of(Atom a) {
  Head h;
  h.kind = HeadKind::Atom;
  h.atom = std::move(a);
  return h;
}

Head Head::choice(std::optional<Term> lower, std::vector<ChoiceElement> elements,
                  std::optional<Term> upper) {
  Head h;
  h.kind = HeadKind::Choice;
  h.lower = std::move(lower);
  h.upper = std::move(upper);
  h.elements = std::move(elements);
  return h;
}

namespace {

template <typename T, typename Cmp>
std::strong_ordering compare_seq(const std::vector<T>& a, const std::vector<T>& b, Cmp cmp) {
  std::size_t n = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = cmp(a[i], b[i]); c != std::strong_ordering::equal) return c;
  }
  return a.size() <=> b.size();
}

std::strong_ordering compare_opt(const std::optional<Term>& a, const std::optional<Term>& b) {
  if (a.has_value() != b.has_value()) return a.has_value() <=> b.has_value();
  if (!a) return std::strong_ordering::equal;
  return compare(*a, *b);
}

}  // namespace

std::strong_ordering compare(const Term& a, const Term& b) {
  if (auto c = a.kind <=> b.kind; c != std::strong_ordering::equal) return c;
  switch (a.kind) {
    case TermKind::Integer:
      return a.value <=> b.value;
    case TermKind::SymConst:
    case TermKind::Variable:
      return a.name.compare(b.name) <=> 0;
    case TermKind::Anonymous:
      return std::strong_ordering::equal;
    case TermKind::BinOp:
      if (auto c = a.op <=> b.op; c != std::strong_ordering::equal) return c;
      break;
    default:
      break;
  }
  return compare_seq(a.args, b.args, [](const Term& x, const Term& y) { return compare(x, y); });
}

std::strong_ordering compare(const Atom& a, const Atom& b) {
  if (auto c = a.comparison <=> b.comparison; c != std::strong_ordering::equal) return c;
  if (a.comparison) {
    if (auto c = a.cmp <=> b.cmp; c != std::strong_ordering::equal) return c;
  } else {
    if (auto c = a.pred.compare(b.pred) <=> 0; c != std::strong_ordering::equal) return c;
    if (auto c = a.args.size() <=> b.args.size(); c != std::strong_ordering::equal) return c;
  }
  return compare_seq(a.args, b.args, [](const Term& x, const Term& y) { return compare(x, y); });
}

std::strong_ordering compare(const Literal& a, const Literal& b) {
  if (auto c = compare(a.atom, b.atom); c != std::strong_ordering::equal) return c;
  if (auto c = a.default_neg <=> b.default_neg; c != std::strong_ordering::equal) return c;
  return a.classical_neg <=> b.classical_neg;
}

std::strong_ordering compare(const ChoiceElement& a, const ChoiceElement& b) {
  if (auto c = compare(a.atom, b.atom); c != std::strong_ordering::equal) return c;
  return compare_seq(a.condition, b.condition,
                     [](const Literal& x, const Literal& y) { return compare(x, y); });
}

std::strong_ordering compare(const Head& a, const Head& b) {
  if (auto c = a.kind <=> b.kind; c != std::strong_ordering::equal) return c;
  switch (a.kind) {
    case HeadKind::None:
      return std::strong_ordering::equal;
    case HeadKind::Atom:
      return compare(a.atom, b.atom);
    case HeadKind::Choice: {
      if (auto c = compare_opt(a.lower, b.lower); c != std::strong_ordering::equal) return c;
      if (auto c = compare_seq(a.elements, b.elements,
                               [](const ChoiceElement& x, const ChoiceElement& y) {
                                 return compare(x, y);
                               });
          c != std::strong_ordering::equal)
        return c;
      return compare_opt(a.upper, b.upper);
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Statement& a, const Statement& b) {
  if (auto c = compare(a.head, b.head); c != std::strong_ordering::equal) return c;
  return compare_seq(a.body, b.body,
                     [](const Literal& x, const Literal& y) { return compare(x, y); });
}

bool equal(const Term& a, const Term& b) { return compare(a, b) == std::strong_ordering::equal; }
bool equal(const Atom& a, const Atom& b) { return compare(a, b) == std::strong_ordering::equal; }
bool equal(const Literal& a, const Literal& b) {
  return compare(a, b) == std::strong_ordering::equal;
}
bool equal(const Head& a, const Head& b) { return compare(a, b) == std::strong_ordering::equal; }
bool equal(const Statement& a, const Statement& b) {
  return compare(a, b) == std::strong_ordering::equal;
}

bool equal(const Program& a, const Program& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t i = 0; i < a.statements.size(); ++i) {
    if (!equal(a.statements[i], b.statements[i])) return false;
  }
  return a.const_directives == b.const_directives;
}

}  // namespace aspfix
