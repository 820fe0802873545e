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

#include <algorithm>
#include <random>
#include <string>

#include "aspfix/ast.hpp"
#include "aspfix/gen.hpp"
#include "aspfix/normalize.hpp"
#include "aspfix/parse.hpp"
#include "aspfix/print.hpp"
#include "doctest.h"

using namespace aspfix;

namespace {

const char* kVertexCoverBuggy =
    "v(X) :- e(X,_).\n"
    "v(X) :- e(_,X).\n"
    "k { sel(X) : v(X) } k.\n"
    ":- not sel(X), not sel(Y), e(X,Y).\n";

}  // namespace

TEST_CASE("parse basic rule anatomy") {
  Program p = parse("a :- b, c, not d.");
  REQUIRE(p.statements.size() == 1);
  const Statement& st = p.statements[0];
  CHECK(st.head.kind == HeadKind::Atom);
  CHECK(st.head.atom.pred == "a");
  CHECK(st.head.atom.arity() == 0);
  REQUIRE(st.body.size() == 3);
  CHECK(st.body[0].atom.pred == "b");
  CHECK_FALSE(st.body[0].default_neg);
  CHECK(st.body[1].atom.pred == "c");
  CHECK(st.body[2].atom.pred == "d");
  CHECK(st.body[2].default_neg);
}

TEST_CASE("parse anonymous variable") {
  Program p = parse("v(X) :- e(X,_).");
  REQUIRE(p.statements.size() == 1);
  const Statement& st = p.statements[0];
  CHECK(st.head.atom.pred == "v");
  REQUIRE(st.head.atom.args.size() == 1);
  CHECK(st.head.atom.args[0].kind == TermKind::Variable);
  CHECK(st.head.atom.args[0].name == "X");
  REQUIRE(st.body.size() == 1);
  REQUIRE(st.body[0].atom.args.size() == 2);
  CHECK(st.body[0].atom.args[0].kind == TermKind::Variable);
  CHECK(st.body[0].atom.args[1].kind == TermKind::Anonymous);
}

TEST_CASE("empty body after ':-' is a syntax error") {
  CHECK_THROWS_AS(parse("a :- ."), SyntaxError);
  CHECK_THROWS_AS(parse(":- ."), SyntaxError);
}

TEST_CASE("comments and const directives") {
  Program p = parse("% a comment\n#const k = 3. % trailing\na :- not b.\n");
  CHECK(p.const_directives.at("k") == 3);
  CHECK(p.statements.size() == 1);
  CHECK(parse("#const n = -2.").const_directives.at("n") == -2);
}

TEST_CASE("unsupported directives are rejected with a clear error") {
  CHECK_THROWS_WITH_AS(parse("#show sel/1."), doctest::Contains("not supported"), SyntaxError);
  CHECK_THROWS_AS(parse("#maximize { 1 }."), SyntaxError);
}

TEST_CASE("arity mismatch is reported") {
  try {
    parse("a(1). b :- a(1,2).");
    FAIL("expected ArityMismatch");
  } catch (const ArityMismatch& e) {
    CHECK(e.predicate() == "a");
  }
}

TEST_CASE("interval and pool only in argument position") {
  Program p = parse("v(1..4). p(1;2;5).");
  CHECK(p.statements[0].head.atom.args[0].kind == TermKind::Interval);
  CHECK(p.statements[1].head.atom.args[0].kind == TermKind::Pool);
  CHECK(p.statements[1].head.atom.args[0].args.size() == 3);
  CHECK_THROWS_AS(parse("a :- X = 1..3."), SyntaxError);
  CHECK_THROWS_AS(parse("2..3 { a } 4."), SyntaxError);
}

TEST_CASE("comparisons parse with precedence arithmetic") {
  Program p = parse(":- q(X,Y), X + 1 * 2 < |Y - 3|.");
  const Literal& cmp = p.statements[0].body[1];
  REQUIRE(cmp.atom.comparison);
  CHECK(cmp.atom.cmp == CmpOp::Lt);
  const Term& lhs = cmp.atom.args[0];
  REQUIRE(lhs.kind == TermKind::BinOp);
  CHECK(lhs.op == ArithOp::Add);
  CHECK(lhs.args[1].op == ArithOp::Mul);
  CHECK(cmp.atom.args[1].kind == TermKind::Abs);
}

TEST_CASE("classical negation allowed on body predicate literals only") {
  Program p = parse("a :- not -b(1).");
  CHECK(p.statements[0].body[0].classical_neg);
  CHECK(p.statements[0].body[0].default_neg);
  CHECK_THROWS_AS(parse("-a :- b."), SyntaxError);
}

TEST_CASE("choice rule with bounds and conditions") {
  Program p = parse("k { sel(X) : v(X) } k :- w.");
  const Head& h = p.statements[0].head;
  REQUIRE(h.kind == HeadKind::Choice);
  REQUIRE(h.lower.has_value());
  CHECK(h.lower->name == "k");
  REQUIRE(h.upper.has_value());
  REQUIRE(h.elements.size() == 1);
  CHECK(h.elements[0].atom.pred == "sel");
  REQUIRE(h.elements[0].condition.size() == 1);
  CHECK(h.elements[0].condition[0].atom.pred == "v");
  CHECK(p.statements[0].body.size() == 1);
}

TEST_CASE("printing canonicalizes spacing") {
  CHECK(to_text(parse("a:-b,not c.").statements[0]) == "a :- b, not c.");
  CHECK(to_text(parse("k{sel(X):v(X)}k.").statements[0]) == "k { sel(X) : v(X) } k.");
  CHECK(print(Program{}) == "");
}

TEST_CASE("vertex cover submission prints to four lines with stable indices") {
  Program p = parse(kVertexCoverBuggy);
  REQUIRE(p.statements.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(p.statements[i].line_index == i);
  std::string printed = print(p);
  CHECK(std::count(printed.begin(), printed.end(), '\n') == 4);
  Program again = parse(printed);
  CHECK(equal(p, again));
  CHECK(p.predicate_signatures.at("e") == 2);
  CHECK(p.predicate_signatures.at("sel") == 1);
}

TEST_CASE("normalize erases zero lower bound") {
  Statement st = parse("0 { sel(X) : v(X) } 1.").statements[0];
  CHECK(to_text(normalize(st)) == "{ sel(X) : v(X) } 1.");
}

TEST_CASE("normalize sorts body literals") {
  Statement st = parse("a :- c, b.").statements[0];
  CHECK(to_text(normalize(st)) == "a :- b, c.");
}

TEST_CASE("normalize orders commutative operands") {
  Statement st = parse("p(Y + X) :- q(X,Y), Y = X.").statements[0];
  Statement n = normalize(st);
  CHECK(to_text(n) == "p(X+Y) :- q(X,Y), X = Y.");
}

namespace {

// Random structure-preserving scrambles: body shuffles, commutative operand
// swaps, and re-inserting an explicit 0 lower bound.
void scramble_term(Term& t, std::mt19937_64& rng) {
  for (Term& a : t.args) scramble_term(a, rng);
  if (t.kind == TermKind::BinOp && (t.op == ArithOp::Add || t.op == ArithOp::Mul) && rng() % 2) {
    std::swap(t.args[0], t.args[1]);
  }
}

void scramble(Statement& st, std::mt19937_64& rng) {
  std::shuffle(st.body.begin(), st.body.end(), rng);
  for (Literal& l : st.body) {
    for (Term& t : l.atom.args) scramble_term(t, rng);
    if (l.atom.comparison && (l.atom.cmp == CmpOp::Eq || l.atom.cmp == CmpOp::Neq) && rng() % 2) {
      std::swap(l.atom.args[0], l.atom.args[1]);
    }
  }
  if (st.head.kind == HeadKind::Choice && !st.head.lower && rng() % 2) {
    st.head.lower = Term::integer(0);
  }
}

}  // namespace

TEST_CASE("round trip and normalization properties over random statements") {
  StatementGenerator gen(20260809);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Statement st = gen.statement();
    CAPTURE(to_text(st));

    // print/parse round trip
    Statement back = parse_statement(to_text(st));
    CHECK(equal(st, back));

    // idempotence
    Statement n1 = normalize(st);
    CHECK(equal(n1, normalize(n1)));

    // equivalence-class stability
    Statement scrambled = st;
    scramble(scrambled, rng);
    CHECK(equal(normalize(scrambled), n1));
  }
}

TEST_CASE("program round trip over random programs") {
  StatementGenerator gen(42);
  for (int i = 0; i < 100; ++i) {
    Program p = gen.program(1 + i % 6);
    Program back = parse(print(p));
    CHECK(equal(p, back));
    for (std::size_t k = 0; k < back.statements.size(); ++k) {
      CHECK(back.statements[k].line_index == static_cast<int>(k));
    }
  }
}

TEST_CASE("statement spans cover the source bytes") {
  std::string src = "a :- b.  % x\nc(1).";
  Program p = parse(src);
  CHECK(src.substr(p.statements[0].span_begin,
                   p.statements[0].span_end - p.statements[0].span_begin) == "a :- b.");
  CHECK(src.substr(p.statements[1].span_begin,
                   p.statements[1].span_end - p.statements[1].span_begin) == "c(1).");
}
