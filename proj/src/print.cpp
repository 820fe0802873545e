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

#include "aspfix/print.hpp"

#include <string>

namespace aspfix {

namespace {

const char* arith_sym(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return "+";
    case ArithOp::Sub: return "-";
    case ArithOp::Mul: return "*";
    case ArithOp::Div: return "/";
  }
  return "?";
}

const char* cmp_sym(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Neq: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

int precedence(const Term& t) {
  if (t.kind != TermKind::BinOp) return 9;
  return (t.op == ArithOp::Add || t.op == ArithOp::Sub) ? 1 : 2;
}

void term_text(const Term& t, std::string& out) {
  switch (t.kind) {
    case TermKind::Integer:
      out += std::to_string(t.value);
      return;
    case TermKind::SymConst:
    case TermKind::Variable:
      out += t.name;
      return;
    case TermKind::Anonymous:
      out += '_';
      return;
    case TermKind::Abs:
      out += '|';
      term_text(t.args[0], out);
      out += '|';
      return;
    case TermKind::Interval:
      term_text(t.args[0], out);
      out += "..";
      term_text(t.args[1], out);
      return;
    case TermKind::Pool:
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ';';
        term_text(t.args[i], out);
      }
      return;
    case TermKind::BinOp: {
      int prec = precedence(t);
      bool lparen = precedence(t.args[0]) < prec;
      bool rparen = precedence(t.args[1]) <= prec;
      if (lparen) out += '(';
      term_text(t.args[0], out);
      if (lparen) out += ')';
      out += arith_sym(t.op);
      if (rparen) out += '(';
      term_text(t.args[1], out);
      if (rparen) out += ')';
      return;
    }
  }
}

void atom_text(const Atom& a, std::string& out) {
  if (a.comparison) {
    term_text(a.args[0], out);
    out += ' ';
    out += cmp_sym(a.cmp);
    out += ' ';
    term_text(a.args[1], out);
    return;
  }
  out += a.pred;
  if (!a.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i) out += ',';
      term_text(a.args[i], out);
    }
    out += ')';
  }
}

void literal_text(const Literal& l, std::string& out) {
  if (l.default_neg) out += "not ";
  if (l.classical_neg) out += '-';
  atom_text(l.atom, out);
}

void head_text(const Head& h, std::string& out) {
  switch (h.kind) {
    case HeadKind::None:
      return;
    case HeadKind::Atom:
      atom_text(h.atom, out);
      return;
    case HeadKind::Choice: {
      if (h.lower) {
        term_text(*h.lower, out);
        out += ' ';
      }
      out += "{ ";
      for (std::size_t i = 0; i < h.elements.size(); ++i) {
        if (i) out += "; ";
        atom_text(h.elements[i].atom, out);
        if (!h.elements[i].condition.empty()) {
          out += " : ";
          for (std::size_t j = 0; j < h.elements[i].condition.size(); ++j) {
            if (j) out += ", ";
            literal_text(h.elements[i].condition[j], out);
          }
        }
      }
      out += " }";
      if (h.upper) {
        out += ' ';
        term_text(*h.upper, out);
      }
      return;
    }
  }
}

}  // namespace

std::string to_text(const Term& t) {
  std::string s;
  term_text(t, s);
  return s;
}

std::string to_text(const Atom& a) {
  std::string s;
  atom_text(a, s);
  return s;
}

std::string to_text(const Literal& l) {
  std::string s;
  literal_text(l, s);
  return s;
}

std::string to_text(const Head& h) {
  std::string s;
  head_text(h, s);
  return s;
}

std::string to_text(const Statement& st) {
  std::string s;
  head_text(st.head, s);
  if (!st.body.empty()) {
    if (st.head.kind != HeadKind::None) s += ' ';
    s += ":- ";
    for (std::size_t i = 0; i < st.body.size(); ++i) {
      if (i) s += ", ";
      literal_text(st.body[i], s);
    }
  }
  s += '.';
  return s;
}

std::string print(const Program& p) {
  std::string out;
  for (const auto& [name, value] : p.const_directives) {
    out += "#const " + name + " = " + std::to_string(value) + ".\n";
  }
  for (const Statement& st : p.statements) {
    out += to_text(st);
    out += '\n';
  }
  return out;
}

}  // namespace aspfix
