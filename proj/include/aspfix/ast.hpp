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

#ifndef ASPFIX_AST_HPP
#define ASPFIX_AST_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace aspfix {

enum class TermKind { Integer, SymConst, Variable, Anonymous, BinOp, Abs, Interval, Pool };
enum class ArithOp { Add, Sub, Mul, Div };
enum class CmpOp { Eq, Neq, Lt, Le, Gt, Ge };

/// A term of the supported ASP subset. Interval and Pool are only legal in
/// predicate-argument position; the parser enforces this.
struct Term {
  TermKind kind = TermKind::Integer;
  long long value = 0;        // Integer
  std::string name;           // SymConst, Variable
  ArithOp op = ArithOp::Add;  // BinOp
  std::vector<Term> args;     // BinOp: 2, Abs: 1, Interval: 2, Pool: >= 1

  static Term integer(long long v);
  static Term sym(std::string n);
  static Term var(std::string n);
  static Term anon();
  static Term binop(ArithOp o, Term lhs, Term rhs);
  static Term abs(Term inner);
  static Term interval(Term lo, Term hi);
  static Term pool(std::vector<Term> alternatives);
};

struct Atom {
  bool comparison = false;
  std::string pred;          // predicate name; empty for comparisons
  CmpOp cmp = CmpOp::Eq;     // comparisons only
  std::vector<Term> args;    // predicate args, or {lhs, rhs} for comparisons

  static Atom predicate(std::string name, std::vector<Term> args = {});
  static Atom compare_atom(CmpOp op, Term lhs, Term rhs);
  int arity() const { return static_cast<int>(args.size()); }
};

struct Literal {
  Atom atom;
  bool default_neg = false;    // "not a"
  bool classical_neg = false;  // "-a"; never set on comparisons
};

struct ChoiceElement {
  Atom atom;  // always a predicate atom
  std::vector<Literal> condition;
};

enum class HeadKind { None, Atom, Choice };

struct Head {
  HeadKind kind = HeadKind::None;
  Atom atom;                          // HeadKind::Atom
  std::optional<Term> lower, upper;   // HeadKind::Choice
  std::vector<ChoiceElement> elements;

  static Head none();
  static Head of(Atom a);
  static Head choice(std::optional<Term> lower, std::vector<ChoiceElement> elements,
                     std::optional<Term> upper);
};

struct Statement {
  Head head;
  std::vector<Literal> body;
  int line_index = 0;
  std::size_t span_begin = 0, span_end = 0;  // byte range in the source text

  bool is_fact() const { return head.kind == HeadKind::Atom && body.empty(); }
  bool is_constraint() const { return head.kind == HeadKind::None; }
};

struct Program {
  std::vector<Statement> statements;
  std::map<std::string, long long> const_directives;  // #const name = value.
  std::map<std::string, int> predicate_signatures;    // name -> arity
};

// Fixed total order used for normalization and canonical sorting:
// variant tag first, then name/value/operator, then operands recursively.
// line_index and source spans never participate.
std::strong_ordering compare(const Term& a, const Term& b);
std::strong_ordering compare(const Atom& a, const Atom& b);
std::strong_ordering compare(const Literal& a, const Literal& b);
std::strong_ordering compare(const ChoiceElement& a, const ChoiceElement& b);
std::strong_ordering compare(const Head& a, const Head& b);
std::strong_ordering compare(const Statement& a, const Statement& b);

bool equal(const Term& a, const Term& b);
bool equal(const Atom& a, const Atom& b);
bool equal(const Literal& a, const Literal& b);
bool equal(const Head& a, const Head& b);
bool equal(const Statement& a, const Statement& b);
// Structural program equality: statement sequences (modulo spans) plus
// const directives. Predicate signatures are derived data.
bool equal(const Program& a, const Program& b);

}  // namespace aspfix

#endif  // ASPFIX_AST_HPP
