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

#include "aspfix/gen.hpp"

#include <algorithm>

namespace aspfix {

namespace {
constexpr const char* kPredNames[] = {"p", "q", "r", "s", "t", "u"};
constexpr const char* kVarNames[] = {"X", "Y", "Z", "W"};
constexpr const char* kConstNames[] = {"a", "b", "c"};
}  // namespace

struct GenImpl {
  StatementGenerator& g;
  std::mt19937_64& rng;
  const StatementGenerator::Options& o;

  int pick(int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }
  bool chance(int percent) { return pick(100) < percent; }

  Term term(int depth, const std::vector<std::string>& vars) {
    if (depth > 0 && o.arithmetic && chance(25)) {
      int k = pick(5);
      if (k == 4) return Term::abs(term(depth - 1, vars));
      return Term::binop(static_cast<ArithOp>(k), term(depth - 1, vars), term(depth - 1, vars));
    }
    switch (pick(3)) {
      case 0: return Term::integer(pick(5));
      case 1: return Term::sym(g.consts_[static_cast<std::size_t>(pick(
                  static_cast<int>(g.consts_.size())))]);
      default:
        if (vars.empty()) return Term::integer(pick(5));
        return Term::var(vars[static_cast<std::size_t>(pick(static_cast<int>(vars.size())))]);
    }
  }

  Term arg_term(const std::vector<std::string>& vars, bool ground_extras) {
    if (ground_extras && o.intervals_and_pools && chance(15)) {
      if (chance(50)) {
        Term lo = Term::integer(pick(4));
        Term hi = Term::integer(lo.value + pick(4));
        return Term::interval(std::move(lo), std::move(hi));
      }
      std::vector<Term> alts;
      int n = 2 + pick(2);
      for (int i = 0; i < n; ++i) alts.push_back(Term::integer(pick(6)));
      return Term::pool(std::move(alts));
    }
    if (!o.solver_safe && chance(10)) return Term::anon();
    return term(o.max_term_depth, vars);
  }

  Atom pred_atom(const std::vector<std::string>& vars, bool ground_extras) {
    auto& [name, arity] = g.preds_[static_cast<std::size_t>(pick(
        static_cast<int>(g.preds_.size())))];
    std::vector<Term> args;
    for (int i = 0; i < arity; ++i) args.push_back(arg_term(vars, ground_extras));
    return Atom::predicate(name, std::move(args));
  }

  Atom ground_fact_atom() {
    auto& [name, arity] = g.preds_[static_cast<std::size_t>(pick(
        static_cast<int>(g.preds_.size())))];
    std::vector<Term> args;
    for (int i = 0; i < arity; ++i) {
      if (o.intervals_and_pools && chance(20)) {
        args.push_back(arg_term({}, true));
      } else {
        args.push_back(chance(70) ? Term::integer(pick(4))
                                  : Term::sym(g.consts_[static_cast<std::size_t>(
                                        pick(static_cast<int>(g.consts_.size())))]));
      }
    }
    return Atom::predicate(name, std::move(args));
  }

  Literal body_literal(const std::vector<std::string>& vars, bool allow_neg) {
    Literal l;
    if (o.comparisons && !vars.empty() && chance(15)) {
      l.atom = Atom::compare_atom(static_cast<CmpOp>(pick(6)), term(1, vars), term(1, vars));
      l.default_neg = allow_neg && chance(10);
      return l;
    }
    l.atom = pred_atom(vars, false);
    l.default_neg = allow_neg && chance(30);
    l.classical_neg = o.classical_negation && chance(5);
    return l;
  }

  // Positive literals first so every used variable has a binding occurrence.
  Statement rule() {
    Statement st;
    std::vector<std::string> scope;
    int nvars = 1 + pick(2);
    for (int i = 0; i < nvars; ++i) scope.push_back(g.vars_[static_cast<std::size_t>(i)]);

    int npos = 1 + pick(2);
    std::vector<Literal> body;
    for (int i = 0; i < npos; ++i) {
      Literal l;
      auto& [name, arity] = g.preds_[static_cast<std::size_t>(pick(
          static_cast<int>(g.preds_.size())))];
      std::vector<Term> args;
      for (int j = 0; j < arity; ++j) {
        args.push_back(Term::var(scope[static_cast<std::size_t>(pick(
            static_cast<int>(scope.size())))]));
      }
      l.atom = Atom::predicate(name, std::move(args));
      body.push_back(std::move(l));
    }
    if (o.solver_safe) {
      // Drop variables with no positive binding occurrence from the scope.
      std::vector<std::string> bound;
      for (const auto& v : scope) {
        bool found = false;
        for (const auto& l : body) {
          for (const auto& t : l.atom.args) {
            if (t.kind == TermKind::Variable && t.name == v) found = true;
          }
        }
        if (found) bound.push_back(v);
      }
      scope = bound.empty() ? std::vector<std::string>{} : bound;
    }
    int nextra = pick(o.max_body);
    for (int i = 0; i < nextra; ++i) body.push_back(body_literal(scope, true));

    switch (o.choice_rules ? pick(4) : pick(3)) {
      case 0:
        st.head = Head::none();
        break;
      case 1:
      case 2:
        st.head = Head::of(pred_atom(scope, false));
        break;
      default: {
        std::vector<ChoiceElement> elems;
        ChoiceElement e;
        e.atom = pred_atom(scope, false);
        if (chance(60)) e.condition.push_back(body_literal(scope, false));
        elems.push_back(std::move(e));
        std::optional<Term> lower, upper;
        if (chance(50)) lower = Term::integer(pick(3));
        if (chance(70)) upper = Term::integer(pick(3) + 1);
        st.head = Head::choice(std::move(lower), std::move(elems), std::move(upper));
        break;
      }
    }
    st.body = std::move(body);
    return st;
  }

  Statement fact() {
    Statement st;
    st.head = Head::of(ground_fact_atom());
    return st;
  }
};

StatementGenerator::StatementGenerator(std::uint64_t seed, Options opts)
    : rng_(seed), opts_(opts) {
  int npred = 3 + static_cast<int>(rng_() % 3);
  for (int i = 0; i < npred; ++i) {
    preds_.emplace_back(kPredNames[i], static_cast<int>(rng_() % 3));
  }
  for (const char* v : kVarNames) vars_.emplace_back(v);
  for (const char* c : kConstNames) consts_.emplace_back(c);
}

Statement StatementGenerator::statement() {
  GenImpl impl{*this, rng_, opts_};
  return impl.chance(25) ? impl.fact() : impl.rule();
}

Program StatementGenerator::program(int lines) {
  GenImpl impl{*this, rng_, opts_};
  Program p;
  for (int i = 0; i < lines; ++i) {
    Statement st = (i < (lines + 1) / 2 && impl.chance(70)) ? impl.fact() : statement();
    st.line_index = static_cast<int>(p.statements.size());
    p.statements.push_back(std::move(st));
  }
  for (const Statement& st : p.statements) {
    auto note = [&](const Atom& a) {
      if (!a.comparison) p.predicate_signatures.emplace(a.pred, a.arity());
    };
    if (st.head.kind == HeadKind::Atom) note(st.head.atom);
    for (const ChoiceElement& e : st.head.elements) {
      note(e.atom);
      for (const Literal& l : e.condition) note(l.atom);
    }
    for (const Literal& l : st.body) note(l.atom);
  }
  return p;
}

}  // namespace aspfix
