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

#include "aspfix/parse.hpp"

#include <cctype>
#include <utility>

namespace aspfix {

SyntaxError::SyntaxError(std::size_t offset, const std::string& expected)
    : std::runtime_error("syntax error at byte " + std::to_string(offset) + ": expected " +
                         expected),
      offset_(offset),
      expected_(expected) {}

ArityMismatch::ArityMismatch(std::string predicate, int first, int second)
    : std::runtime_error("predicate '" + predicate + "' used with arity " +
                         std::to_string(first) + " and " + std::to_string(second)),
      predicate_(std::move(predicate)),
      first_(first),
      second_(second) {}

namespace {

enum class Tok {
  End, Dot, DotDot, Comma, Semicolon, Colon, ColonDash,
  LParen, RParen, LBrace, RBrace,
  Plus, Minus, Star, Slash, Pipe,
  Eq, Neq, Lt, Le, Gt, Ge,
  Ident, Var, Int, Anon, Directive,
};

struct Token {
  Tok kind = Tok::End;
  std::size_t begin = 0, end = 0;
  std::string text;
  long long value = 0;
};

bool ident_start(char c) { return (c >= 'a' && c <= 'z'); }
bool var_start(char c) { return (c >= 'A' && c <= 'Z'); }
bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0, n = s.size();
  auto push = [&](Tok k, std::size_t b, std::size_t e) {
    Token t;
    t.kind = k;
    t.begin = b;
    t.end = e;
    t.text.assign(s.substr(b, e - b));
    out.push_back(std::move(t));
  };
  while (i < n) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '%') {  // comment to end of line
      while (i < n && s[i] != '\n') ++i;
      continue;
    }
    std::size_t b = i;
    if (c >= '0' && c <= '9') {
      long long v = 0;
      while (i < n && s[i] >= '0' && s[i] <= '9') v = v * 10 + (s[i++] - '0');
      push(Tok::Int, b, i);
      out.back().value = v;
      continue;
    }
    if (ident_start(c) || var_start(c) || c == '_') {
      std::size_t us = i;
      while (us < n && s[us] == '_') ++us;
      if (us > i && (us == n || !ident_char(s[us]))) {  // bare underscores: anonymous
        i = us;
        push(Tok::Anon, b, i);
        continue;
      }
      if (us < n && var_start(s[us]) && us > i) {
        throw SyntaxError(b, "identifier (variables may not start with '_')");
      }
      ++i;
      while (i < n && ident_char(s[i])) ++i;
      push(var_start(c) ? Tok::Var : Tok::Ident, b, i);
      continue;
    }
    if (c == '#') {
      ++i;
      std::size_t nb = i;
      while (i < n && ident_char(s[i])) ++i;
      if (i == nb) throw SyntaxError(b, "directive name after '#'");
      push(Tok::Directive, b, i);
      out.back().text.assign(s.substr(nb, i - nb));
      continue;
    }
    auto two = [&](char a2, Tok k) {
      if (i + 1 < n && s[i + 1] == a2) {
        i += 2;
        push(k, b, i);
        return true;
      }
      return false;
    };
    switch (c) {
      case '.':
        if (two('.', Tok::DotDot)) continue;
        ++i;
        push(Tok::Dot, b, i);
        continue;
      case ':':
        if (two('-', Tok::ColonDash)) continue;
        ++i;
        push(Tok::Colon, b, i);
        continue;
      case ',': ++i; push(Tok::Comma, b, i); continue;
      case ';': ++i; push(Tok::Semicolon, b, i); continue;
      case '(': ++i; push(Tok::LParen, b, i); continue;
      case ')': ++i; push(Tok::RParen, b, i); continue;
      case '{': ++i; push(Tok::LBrace, b, i); continue;
      case '}': ++i; push(Tok::RBrace, b, i); continue;
      case '+': ++i; push(Tok::Plus, b, i); continue;
      case '-': ++i; push(Tok::Minus, b, i); continue;
      case '*': ++i; push(Tok::Star, b, i); continue;
      case '/': ++i; push(Tok::Slash, b, i); continue;
      case '|': ++i; push(Tok::Pipe, b, i); continue;
      case '=':
        if (two('=', Tok::Eq)) continue;
        ++i;
        push(Tok::Eq, b, i);
        continue;
      case '!':
        if (two('=', Tok::Neq)) continue;
        throw SyntaxError(b, "'=' after '!'");
      case '<':
        if (two('=', Tok::Le)) continue;
        ++i;
        push(Tok::Lt, b, i);
        continue;
      case '>':
        if (two('=', Tok::Ge)) continue;
        ++i;
        push(Tok::Gt, b, i);
        continue;
      default:
        throw SyntaxError(b, "token (unexpected character '" + std::string(1, c) + "')");
    }
  }
  Token end;
  end.kind = Tok::End;
  end.begin = end.end = n;
  out.push_back(end);
  return out;
}

bool is_cmp(Tok k) {
  return k == Tok::Eq || k == Tok::Neq || k == Tok::Lt || k == Tok::Le || k == Tok::Gt ||
         k == Tok::Ge;
}

CmpOp cmp_of(Tok k) {
  switch (k) {
    case Tok::Eq: return CmpOp::Eq;
    case Tok::Neq: return CmpOp::Neq;
    case Tok::Lt: return CmpOp::Lt;
    case Tok::Le: return CmpOp::Le;
    case Tok::Gt: return CmpOp::Gt;
    default: return CmpOp::Ge;
  }
}

bool starts_term(Tok k) {
  return k == Tok::Int || k == Tok::Ident || k == Tok::Var || k == Tok::Pipe ||
         k == Tok::LParen || k == Tok::Minus;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Program parse_program() {
    Program prog;
    while (!at(Tok::End)) {
      if (at(Tok::Directive)) {
        parse_directive(prog);
        continue;
      }
      Statement st = parse_stmt();
      st.line_index = static_cast<int>(prog.statements.size());
      prog.statements.push_back(std::move(st));
    }
    collect_signatures(prog);
    return prog;
  }

  Statement parse_single() {
    Statement st = parse_stmt();
    if (!at(Tok::End)) throw SyntaxError(cur().begin, "end of input after statement");
    return st;
  }

  Atom parse_ground() {
    Atom a = parse_pred_atom();
    if (!at(Tok::End)) throw SyntaxError(cur().begin, "end of input after atom");
    return a;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& next() const { return toks_[pos_ + 1 < toks_.size() ? pos_ + 1 : pos_]; }
  bool at(Tok k) const { return cur().kind == k; }
  Token eat() { return toks_[pos_++]; }
  Token expect(Tok k, const char* what) {
    if (!at(k)) throw SyntaxError(cur().begin, what);
    return eat();
  }

  void parse_directive(Program& prog) {
    Token d = eat();
    if (d.text != "const") {
      throw SyntaxError(d.begin, "'#const' (directive '#" + d.text + "' is not supported)");
    }
    Token name = expect(Tok::Ident, "constant name after '#const'");
    expect(Tok::Eq, "'=' in #const directive");
    bool neg = false;
    if (at(Tok::Minus)) {
      eat();
      neg = true;
    }
    Token v = expect(Tok::Int, "integer value in #const directive");
    expect(Tok::Dot, "'.' terminating #const directive");
    prog.const_directives[name.text] = neg ? -v.value : v.value;
  }

  Statement parse_stmt() {
    Statement st;
    st.span_begin = cur().begin;
    if (at(Tok::ColonDash)) {
      eat();
      st.head = Head::none();
      st.body = parse_body();
    } else {
      st.head = parse_head();
      if (at(Tok::ColonDash)) {
        eat();
        st.body = parse_body();
      }
    }
    Token dot = expect(Tok::Dot, "'.' terminating statement");
    st.span_end = dot.end;
    return st;
  }

  Head parse_head() {
    if (at(Tok::LBrace)) return parse_choice(std::nullopt);
    if (starts_term(cur().kind)) {
      std::size_t save = pos_;
      bool ok = true;
      Term lower;
      try {
        lower = parse_term();
      } catch (const SyntaxError&) {
        ok = false;
      }
      if (ok && at(Tok::LBrace)) return parse_choice(std::move(lower));
      pos_ = save;
    }
    if (at(Tok::Minus)) {
      throw SyntaxError(cur().begin, "rule head (classical negation is not allowed in heads)");
    }
    Atom a = parse_pred_atom();
    return Head::of(std::move(a));
  }

  Head parse_choice(std::optional<Term> lower) {
    expect(Tok::LBrace, "'{'");
    std::vector<ChoiceElement> elems;
    for (;;) {
      ChoiceElement e;
      e.atom = parse_pred_atom();
      if (at(Tok::Colon)) {
        eat();
        e.condition.push_back(parse_literal());
        while (at(Tok::Comma)) {
          eat();
          e.condition.push_back(parse_literal());
        }
      }
      elems.push_back(std::move(e));
      if (at(Tok::Semicolon)) {
        eat();
        continue;
      }
      break;
    }
    expect(Tok::RBrace, "'}' closing choice");
    std::optional<Term> upper;
    if (starts_term(cur().kind)) upper = parse_term();
    return Head::choice(std::move(lower), std::move(elems), std::move(upper));
  }

  std::vector<Literal> parse_body() {
    std::vector<Literal> body;
    body.push_back(parse_literal());
    while (at(Tok::Comma)) {
      eat();
      body.push_back(parse_literal());
    }
    return body;
  }

  Literal parse_literal() {
    Literal lit;
    if (at(Tok::Ident) && cur().text == "not") {
      eat();
      if (at(Tok::Ident) && cur().text == "not") {
        throw SyntaxError(cur().begin, "atom (double default negation is not supported)");
      }
      lit.default_neg = true;
    }
    if (at(Tok::Minus) && next().kind == Tok::Ident) {
      eat();
      lit.classical_neg = true;
      lit.atom = parse_pred_atom();
      return lit;
    }
    if (starts_term(cur().kind)) {
      std::size_t save = pos_;
      bool is_comparison = false;
      Term lhs;
      try {
        lhs = parse_term();
        is_comparison = is_cmp(cur().kind);
      } catch (const SyntaxError&) {
      }
      if (is_comparison) {
        CmpOp op = cmp_of(eat().kind);
        Term rhs = parse_term();
        lit.atom = Atom::compare_atom(op, std::move(lhs), std::move(rhs));
        return lit;
      }
      pos_ = save;
    }
    if (at(Tok::Ident)) {
      lit.atom = parse_pred_atom();
      return lit;
    }
    throw SyntaxError(cur().begin, "literal");
  }

  Atom parse_pred_atom() {
    Token name = expect(Tok::Ident, "predicate name");
    std::vector<Term> args;
    if (at(Tok::LParen)) {
      eat();
      args.push_back(parse_pred_term());
      while (at(Tok::Comma)) {
        eat();
        args.push_back(parse_pred_term());
      }
      expect(Tok::RParen, "')' closing argument list");
    }
    return Atom::predicate(name.text, std::move(args));
  }

  // Argument position: plain terms plus '_', intervals, and ';' pools.
  Term parse_pred_term() {
    if (at(Tok::Anon)) {
      eat();
      return Term::anon();
    }
    auto one = [&]() {
      Term t = parse_term();
      if (at(Tok::DotDot)) {
        eat();
        Term hi = parse_term();
        return Term::interval(std::move(t), std::move(hi));
      }
      return t;
    };
    Term first = one();
    if (!at(Tok::Semicolon)) return first;
    std::vector<Term> alts;
    alts.push_back(std::move(first));
    while (at(Tok::Semicolon)) {
      eat();
      alts.push_back(one());
    }
    return Term::pool(std::move(alts));
  }

  Term parse_term() { return parse_addsub(); }

  Term parse_addsub() {
    Term lhs = parse_muldiv();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      ArithOp op = eat().kind == Tok::Plus ? ArithOp::Add : ArithOp::Sub;
      Term rhs = parse_muldiv();
      lhs = Term::binop(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Term parse_muldiv() {
    Term lhs = parse_primary();
    while (at(Tok::Star) || at(Tok::Slash)) {
      ArithOp op = eat().kind == Tok::Star ? ArithOp::Mul : ArithOp::Div;
      Term rhs = parse_primary();
      lhs = Term::binop(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Term parse_primary() {
    switch (cur().kind) {
      case Tok::Int:
        return Term::integer(eat().value);
      case Tok::Minus: {
        eat();
        Token v = expect(Tok::Int, "integer after unary '-'");
        return Term::integer(-v.value);
      }
      case Tok::Ident:
        return Term::sym(eat().text);
      case Tok::Var:
        return Term::var(eat().text);
      case Tok::Pipe: {
        eat();
        Term inner = parse_addsub();
        expect(Tok::Pipe, "'|' closing absolute value");
        return Term::abs(std::move(inner));
      }
      case Tok::LParen: {
        eat();
        Term inner = parse_addsub();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw SyntaxError(cur().begin, "term");
    }
  }

  void collect_signatures(Program& prog) {
    auto note = [&](const Atom& a) {
      if (a.comparison) return;
      auto [it, inserted] = prog.predicate_signatures.emplace(a.pred, a.arity());
      if (!inserted && it->second != a.arity()) {
        throw ArityMismatch(a.pred, it->second, a.arity());
      }
    };
    for (const Statement& st : prog.statements) {
      if (st.head.kind == HeadKind::Atom) note(st.head.atom);
      for (const ChoiceElement& e : st.head.elements) {
        note(e.atom);
        for (const Literal& l : e.condition) note(l.atom);
      }
      for (const Literal& l : st.body) note(l.atom);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse(std::string_view text) { return Parser(text).parse_program(); }

Statement parse_statement(std::string_view text) { return Parser(text).parse_single(); }

Atom parse_ground_atom(std::string_view text) { return Parser(text).parse_ground(); }

}  // namespace aspfix
