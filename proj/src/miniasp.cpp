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
//
// Grounder and stable-model enumerator for the supported subset:
//  - grounding by least-fixpoint domain computation over positive bodies;
//  - stable models found by guessing over atoms that occur under default
//    negation or as choice-element instances, then checking that the least
//    model of the corresponding reduct reproduces the guess;
//  - choice bounds and integrity constraints filter candidate models.

#include "aspfix/miniasp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "aspfix/ast.hpp"
#include "aspfix/normalize.hpp"
#include "aspfix/parse.hpp"
#include "aspfix/print.hpp"

namespace aspfix::miniasp {

namespace {

struct GroundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Subst = std::map<std::string, Term>;

// ---------------------------------------------------------------------------
// #show preprocessing

struct ShowSet {
  bool any = false;
  std::set<std::pair<std::string, int>> sigs;
};

// Removes `#show name/arity.` directives wherever they occur outside
// comments, collecting the projection signature.
std::string strip_shows(std::string_view text, ShowSet& shows) {
  std::string out;
  std::size_t i = 0, n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '%') {
      while (i < n && text[i] != '\n') out += text[i++];
      continue;
    }
    if (c == '#' && text.compare(i, 5, "#show") == 0) {
      std::size_t j = i + 5;
      while (j < n && (text[j] == ' ' || text[j] == '\t')) ++j;
      std::string name;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        name.push_back(text[j++]);
      }
      if (j >= n || text[j] != '/') throw GroundError("malformed #show directive");
      ++j;
      int arity = 0;
      bool digits = false;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) {
        arity = arity * 10 + (text[j++] - '0');
        digits = true;
      }
      while (j < n && (text[j] == ' ' || text[j] == '\t')) ++j;
      if (!digits || name.empty() || j >= n || text[j] != '.') {
        throw GroundError("malformed #show directive");
      }
      i = j + 1;
      shows.any = true;
      shows.sigs.emplace(name, arity);
      continue;
    }
    out += c;
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Term utilities

bool is_ground_leaf(const Term& t) {
  return t.kind == TermKind::Integer || t.kind == TermKind::SymConst;
}

void subst_consts(Term& t, const std::map<std::string, long long>& consts) {
  if (t.kind == TermKind::SymConst) {
    auto it = consts.find(t.name);
    if (it != consts.end()) t = Term::integer(it->second);
    return;
  }
  for (Term& a : t.args) subst_consts(a, consts);
}

void fresh_anon(Term& t, int& counter) {
  if (t.kind == TermKind::Anonymous) {
    t = Term::var("_Anon" + std::to_string(counter++));
    return;
  }
  for (Term& a : t.args) fresh_anon(a, counter);
}

// Evaluates a term under a substitution. Returns nullopt when an arithmetic
// operation is undefined (symbolic operand, division by zero); the enclosing
// instance is then dropped, mirroring grounder behavior.
std::optional<Term> eval_term(const Term& t, const Subst& s) {
  switch (t.kind) {
    case TermKind::Integer:
    case TermKind::SymConst:
      return t;
    case TermKind::Variable: {
      auto it = s.find(t.name);
      if (it == s.end()) throw GroundError("unsafe variable '" + t.name + "'");
      return it->second;
    }
    case TermKind::Anonymous:
      throw GroundError("anonymous term outside matched position");
    case TermKind::Abs: {
      auto v = eval_term(t.args[0], s);
      if (!v || v->kind != TermKind::Integer) return std::nullopt;
      return Term::integer(v->value < 0 ? -v->value : v->value);
    }
    case TermKind::BinOp: {
      auto l = eval_term(t.args[0], s);
      auto r = eval_term(t.args[1], s);
      if (!l || !r || l->kind != TermKind::Integer || r->kind != TermKind::Integer) {
        return std::nullopt;
      }
      switch (t.op) {
        case ArithOp::Add: return Term::integer(l->value + r->value);
        case ArithOp::Sub: return Term::integer(l->value - r->value);
        case ArithOp::Mul: return Term::integer(l->value * r->value);
        case ArithOp::Div:
          if (r->value == 0) return std::nullopt;
          return Term::integer(l->value / r->value);
      }
      return std::nullopt;
    }
    case TermKind::Interval:
    case TermKind::Pool:
      throw GroundError("interval/pool in unsupported position");
  }
  return std::nullopt;
}

// Total order on ground leaves: integers first by value, then symbols.
std::strong_ordering ground_order(const Term& a, const Term& b) {
  bool ai = a.kind == TermKind::Integer, bi = b.kind == TermKind::Integer;
  if (ai != bi) return ai ? std::strong_ordering::less : std::strong_ordering::greater;
  if (ai) return a.value <=> b.value;
  return a.name.compare(b.name) <=> 0;
}

bool eval_cmp(CmpOp op, const Term& l, const Term& r) {
  auto c = ground_order(l, r);
  switch (op) {
    case CmpOp::Eq: return c == std::strong_ordering::equal;
    case CmpOp::Neq: return c != std::strong_ordering::equal;
    case CmpOp::Lt: return c == std::strong_ordering::less;
    case CmpOp::Le: return c != std::strong_ordering::greater;
    case CmpOp::Gt: return c == std::strong_ordering::greater;
    case CmpOp::Ge: return c != std::strong_ordering::less;
  }
  return false;
}

std::string pred_key(const std::string& name, bool classical) {
  return classical ? "-" + name : name;
}

// ---------------------------------------------------------------------------
// Ground program representation

struct AtomTable {
  std::map<std::string, int> index;        // rendered atom -> id
  std::vector<std::string> text;           // id -> rendered atom
  std::vector<std::pair<std::string, int>> sig;  // id -> (pred key, arity)

  int intern(const std::string& key, const std::string& pred, int arity) {
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(text.size());
    index.emplace(key, id);
    text.push_back(key);
    sig.emplace_back(pred, arity);
    return id;
  }
};

struct GroundLits {
  std::vector<int> pos, neg;
};

struct GroundRule {  // head < 0 means integrity constraint
  int head = -1;
  GroundLits body;
};

struct GroundChoiceElem {
  int atom = -1;
  GroundLits cond;
};

struct GroundChoice {
  std::optional<long long> lower, upper;
  std::vector<GroundChoiceElem> elements;
  GroundLits body;
};

struct GroundProgram {
  AtomTable atoms;
  std::vector<GroundRule> rules;        // with heads
  std::vector<GroundRule> constraints;  // head < 0
  std::vector<GroundChoice> choices;
  std::vector<int> facts;
};

std::string render_atom(const std::string& pred_key_str, const std::vector<Term>& args) {
  std::string s = pred_key_str;
  if (!args.empty()) {
    s += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) s += ',';
      s += to_text(args[i]);
    }
    s += ')';
  }
  return s;
}

// ---------------------------------------------------------------------------
// Grounder

class Grounder {
 public:
  explicit Grounder(const Program& prog) : prog_(prog) {}

  GroundProgram ground() {
    collect_facts();
    compute_domain();
    instantiate_rules();
    add_classical_consistency();
    return std::move(gp_);
  }

 private:
  using Tuple = std::vector<Term>;
  struct TupleLess {
    bool operator()(const Tuple& a, const Tuple& b) const {
      std::size_t n = a.size() < b.size() ? a.size() : b.size();
      for (std::size_t i = 0; i < n; ++i) {
        auto c = compare(a[i], b[i]);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
      }
      return a.size() < b.size();
    }
  };
  using TupleSet = std::set<Tuple, TupleLess>;

  const Program& prog_;
  GroundProgram gp_;
  std::map<std::string, TupleSet> domain_;  // pred key -> ground tuples
  std::set<std::string> fact_keys_;

  static bool ground_tuple(const Tuple& t) {
    for (const Term& x : t) {
      if (!is_ground_leaf(x)) return false;
    }
    return true;
  }

  void expand_args(const std::vector<Term>& args, std::size_t i, Tuple& acc,
                   std::vector<Tuple>& out) {
    if (i == args.size()) {
      out.push_back(acc);
      return;
    }
    const Term& a = args[i];
    switch (a.kind) {
      case TermKind::Interval: {
        auto lo = eval_term(a.args[0], {}), hi = eval_term(a.args[1], {});
        if (!lo || !hi || lo->kind != TermKind::Integer || hi->kind != TermKind::Integer) {
          throw GroundError("interval bounds must be integers in facts");
        }
        for (long long v = lo->value; v <= hi->value; ++v) {
          acc.push_back(Term::integer(v));
          expand_args(args, i + 1, acc, out);
          acc.pop_back();
        }
        return;
      }
      case TermKind::Pool:
        for (const Term& alt : a.args) {
          std::vector<Term> sub{alt};  // an alternative may itself be an interval
          std::vector<Tuple> expanded;
          Tuple tmp;
          expand_args(sub, 0, tmp, expanded);
          for (Tuple& e : expanded) {
            acc.push_back(e[0]);
            expand_args(args, i + 1, acc, out);
            acc.pop_back();
          }
        }
        return;
      default: {
        auto v = eval_term(a, {});
        if (!v) return;  // undefined arithmetic: drop instance
        acc.push_back(*v);
        expand_args(args, i + 1, acc, out);
        acc.pop_back();
        return;
      }
    }
  }

  void collect_facts() {
    for (const Statement& st : prog_.statements) {
      if (!st.is_fact()) continue;
      const Atom& a = st.head.atom;
      std::vector<Tuple> tuples;
      Tuple acc;
      expand_args(a.args, 0, acc, tuples);
      for (const Tuple& t : tuples) {
        if (!ground_tuple(t)) throw GroundError("unsafe variable in fact " + to_text(a));
        add_domain(pred_key(a.pred, false), t);
        std::string key = render_atom(a.pred, t);
        int id = gp_.atoms.intern(key, a.pred, static_cast<int>(t.size()));
        if (fact_keys_.insert(key).second) gp_.facts.push_back(id);
      }
    }
  }

  void add_domain(const std::string& key, const Tuple& t) { domain_[key].insert(t); }

  bool in_domain(const std::string& key, const Tuple& t) const {
    auto it = domain_.find(key);
    return it != domain_.end() && it->second.count(t) > 0;
  }

  // Matches pattern args against a ground tuple, extending the substitution.
  static bool match_args(const std::vector<Term>& pattern, const Tuple& tuple, Subst& s) {
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      const Term& p = pattern[i];
      if (p.kind == TermKind::Variable) {
        auto it = s.find(p.name);
        if (it == s.end()) {
          s.emplace(p.name, tuple[i]);
          continue;
        }
        if (ground_order(it->second, tuple[i]) != std::strong_ordering::equal) return false;
        continue;
      }
      Term value;
      try {
        auto v = eval_term(p, s);
        if (!v) return false;
        value = *v;
      } catch (const GroundError&) {
        return false;  // unbound inside arithmetic; caller may retry later
      }
      if (ground_order(value, tuple[i]) != std::strong_ordering::equal) return false;
    }
    return true;
  }

  // Enumerates substitutions satisfying the positive predicate literals.
  void join_positive(const std::vector<const Literal*>& pos, std::size_t i, Subst& s,
                     const std::function<void(const Subst&)>& emit) {
    if (i == pos.size()) {
      emit(s);
      return;
    }
    const Atom& a = pos[i]->atom;
    auto it = domain_.find(pred_key(a.pred, pos[i]->classical_neg));
    if (it == domain_.end()) return;
    for (const Tuple& t : it->second) {
      Subst saved = s;
      if (match_args(a.args, t, s)) join_positive(pos, i + 1, s, emit);
      s = std::move(saved);
    }
  }

  // Splits literals; comparison literals are evaluated under the final
  // substitution, so variables they use must be bound positively.
  struct SplitBody {
    std::vector<const Literal*> pos, neg, cmp;
  };

  static SplitBody split(const std::vector<Literal>& lits) {
    SplitBody sb;
    for (const Literal& l : lits) {
      if (l.atom.comparison) {
        sb.cmp.push_back(&l);
      } else if (l.default_neg) {
        sb.neg.push_back(&l);
      } else {
        sb.pos.push_back(&l);
      }
    }
    // Literals whose arguments are all plain (variables or ground leaves)
    // first, so arithmetic arguments see their variables bound.
    std::stable_sort(sb.pos.begin(), sb.pos.end(), [](const Literal* a, const Literal* b) {
      auto plain = [](const Literal* l) {
        for (const Term& t : l->atom.args) {
          if (!(t.kind == TermKind::Variable || is_ground_leaf(t))) return 0;
        }
        return 1;
      };
      return plain(a) > plain(b);
    });
    return sb;
  }

  bool cmps_hold(const std::vector<const Literal*>& cmps, const Subst& s) {
    for (const Literal* l : cmps) {
      auto lv = eval_term(l->atom.args[0], s);
      auto rv = eval_term(l->atom.args[1], s);
      if (!lv || !rv) return false;
      bool val = eval_cmp(l->atom.cmp, *lv, *rv);
      if (l->default_neg) val = !val;
      if (!val) return false;
    }
    return true;
  }

  std::optional<std::pair<std::string, Tuple>> ground_atom(const Atom& a, bool classical,
                                                           const Subst& s) {
    Tuple t;
    for (const Term& arg : a.args) {
      auto v = eval_term(arg, s);
      if (!v) return std::nullopt;
      t.push_back(*v);
    }
    return std::make_pair(pred_key(a.pred, classical), std::move(t));
  }

  int intern(const std::string& key, const Tuple& t) {
    return gp_.atoms.intern(render_atom(key, t), key, static_cast<int>(t.size()));
  }

  // Ground literals for the reduced rule body. Negative literals over atoms
  // outside the domain are dropped (they can never be derived).
  std::optional<GroundLits> ground_body(const SplitBody& sb, const Subst& s) {
    if (!cmps_hold(sb.cmp, s)) return std::nullopt;
    GroundLits gl;
    for (const Literal* l : sb.pos) {
      auto ga = ground_atom(l->atom, l->classical_neg, s);
      if (!ga) return std::nullopt;
      gl.pos.push_back(intern(ga->first, ga->second));
    }
    for (const Literal* l : sb.neg) {
      auto ga = ground_atom(l->atom, l->classical_neg, s);
      if (!ga) return std::nullopt;
      if (!in_domain(ga->first, ga->second)) continue;
      gl.neg.push_back(intern(ga->first, ga->second));
    }
    return gl;
  }

  // Domain fixpoint: assume negative literals hold, collect possible heads.
  void compute_domain() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Statement& st : prog_.statements) {
        if (st.is_fact() || st.head.kind == HeadKind::None) continue;
        SplitBody sb = split(st.body);
        Subst start;
        join_positive(sb.pos, 0, start, [&](const Subst& s) {
          if (!cmps_hold(sb.cmp, s)) return;
          if (st.head.kind == HeadKind::Atom) {
            auto ga = ground_atom(st.head.atom, false, s);
            if (!ga) return;
            if (!in_domain(ga->first, ga->second)) {
              add_domain(ga->first, ga->second);
              changed = true;
            }
            return;
          }
          for (const ChoiceElement& e : st.head.elements) {
            SplitBody cb = split(e.condition);
            Subst inner = s;
            join_positive(cb.pos, 0, inner, [&](const Subst& s2) {
              if (!cmps_hold(cb.cmp, s2)) return;
              auto ga = ground_atom(e.atom, false, s2);
              if (!ga) return;
              if (!in_domain(ga->first, ga->second)) {
                add_domain(ga->first, ga->second);
                changed = true;
              }
            });
          }
        });
      }
    }
  }

  void instantiate_rules() {
    for (const Statement& st : prog_.statements) {
      if (st.is_fact()) continue;
      SplitBody sb = split(st.body);
      Subst start;
      join_positive(sb.pos, 0, start, [&](const Subst& s) {
        auto body = ground_body(sb, s);
        if (!body) return;
        switch (st.head.kind) {
          case HeadKind::None: {
            GroundRule gr;
            gr.head = -1;
            gr.body = std::move(*body);
            gp_.constraints.push_back(std::move(gr));
            return;
          }
          case HeadKind::Atom: {
            auto ga = ground_atom(st.head.atom, false, s);
            if (!ga) return;
            GroundRule gr;
            gr.head = intern(ga->first, ga->second);
            gr.body = std::move(*body);
            gp_.rules.push_back(std::move(gr));
            return;
          }
          case HeadKind::Choice: {
            GroundChoice gc;
            if (st.head.lower) {
              auto v = eval_term(*st.head.lower, s);
              if (!v || v->kind != TermKind::Integer) {
                throw GroundError("choice lower bound is not an integer");
              }
              gc.lower = v->value;
            }
            if (st.head.upper) {
              auto v = eval_term(*st.head.upper, s);
              if (!v || v->kind != TermKind::Integer) {
                throw GroundError("choice upper bound is not an integer");
              }
              gc.upper = v->value;
            }
            gc.body = std::move(*body);
            for (const ChoiceElement& e : st.head.elements) {
              SplitBody cb = split(e.condition);
              Subst inner = s;
              join_positive(cb.pos, 0, inner, [&](const Subst& s2) {
                auto cond = ground_body(cb, s2);
                if (!cond) return;
                auto ga = ground_atom(e.atom, false, s2);
                if (!ga) return;
                GroundChoiceElem ge;
                ge.atom = intern(ga->first, ga->second);
                ge.cond = std::move(*cond);
                gc.elements.push_back(std::move(ge));
              });
            }
            gp_.choices.push_back(std::move(gc));
            return;
          }
        }
      });
    }
  }

  // p(t) and -p(t) may not hold together.
  void add_classical_consistency() {
    for (const auto& [key, tuples] : domain_) {
      if (key.empty() || key[0] != '-') continue;
      std::string positive = key.substr(1);
      for (const Tuple& t : tuples) {
        if (!in_domain(positive, t)) continue;
        GroundRule gr;
        gr.head = -1;
        gr.body.pos.push_back(intern(key, t));
        gr.body.pos.push_back(intern(positive, t));
        gp_.constraints.push_back(std::move(gr));
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Stable-model search

class Search {
 public:
  Search(const GroundProgram& gp, const ShowSet& shows, const Options& opts)
      : gp_(gp), shows_(shows), opts_(opts) {}

  Result run() {
    Result res;
    const int n = static_cast<int>(gp_.atoms.text.size());
    std::vector<char> is_fact(n, 0);
    for (int f : gp_.facts) is_fact[f] = 1;

    std::vector<char> derivable(n, 0);
    for (int f : gp_.facts) derivable[f] = 1;
    for (const GroundRule& r : gp_.rules) derivable[r.head] = 1;
    for (const GroundChoice& c : gp_.choices) {
      for (const GroundChoiceElem& e : c.elements) derivable[e.atom] = 1;
    }

    std::set<int> guess_set;
    auto note_negs = [&](const GroundLits& gl) {
      for (int a : gl.neg) {
        if (derivable[a] && !is_fact[a]) guess_set.insert(a);
      }
    };
    for (const GroundRule& r : gp_.rules) note_negs(r.body);
    for (const GroundRule& r : gp_.constraints) note_negs(r.body);
    for (const GroundChoice& c : gp_.choices) {
      note_negs(c.body);
      for (const GroundChoiceElem& e : c.elements) {
        note_negs(e.cond);
        if (!is_fact[e.atom]) guess_set.insert(e.atom);
      }
    }
    std::vector<int> guess(guess_set.begin(), guess_set.end());
    if (guess.size() > 22) {
      res.status = Result::Status::Error;
      res.error = "program requires guessing over " + std::to_string(guess.size()) +
                  " atoms; miniasp caps at 22";
      return res;
    }

    std::vector<char> truth(n, 0);
    std::vector<char> in_model(n, 0);
    std::set<std::vector<std::string>> seen;
    const std::uint64_t total = 1ull << guess.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      for (char& c : truth) c = 0;
      for (int f : gp_.facts) truth[f] = 1;
      for (std::size_t i = 0; i < guess.size(); ++i) {
        truth[guess[i]] = (mask >> i) & 1 ? 1 : 0;
      }
      if (!least_model(truth, is_fact, guess, mask, in_model)) continue;
      if (!checks_pass(in_model)) continue;

      std::vector<std::string> model = render(in_model);
      if (opts_.project && shows_.any) {
        if (!seen.insert(model).second) continue;
      }
      res.models.push_back(std::move(model));
      if (opts_.max_models > 0 && static_cast<int>(res.models.size()) >= opts_.max_models) {
        res.exhausted = mask + 1 == total;
        res.status = Result::Status::Sat;
        return res;
      }
    }
    res.exhausted = true;
    res.status = res.models.empty() ? Result::Status::Unsat : Result::Status::Sat;
    return res;
  }

 private:
  bool sat_neg(const GroundLits& gl, const std::vector<char>& truth) const {
    for (int a : gl.neg) {
      if (truth[a]) return false;
    }
    return true;
  }

  static bool sat_pos(const GroundLits& gl, const std::vector<char>& m) {
    for (int a : gl.pos) {
      if (!m[a]) return false;
    }
    return true;
  }

  // Least model of the reduct induced by `truth` over the guessed atoms;
  // returns false when the model disagrees with the guess.
  bool least_model(const std::vector<char>& truth, const std::vector<char>& is_fact,
                   const std::vector<int>& guess, std::uint64_t mask,
                   std::vector<char>& m) const {
    std::fill(m.begin(), m.end(), 0);
    for (int f : gp_.facts) m[f] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const GroundRule& r : gp_.rules) {
        if (m[r.head] || !sat_neg(r.body, truth) || !sat_pos(r.body, m)) continue;
        m[r.head] = 1;
        changed = true;
      }
      for (const GroundChoice& c : gp_.choices) {
        if (!sat_neg(c.body, truth) || !sat_pos(c.body, m)) continue;
        for (const GroundChoiceElem& e : c.elements) {
          if (m[e.atom] || !truth[e.atom]) continue;
          if (!sat_neg(e.cond, truth) || !sat_pos(e.cond, m)) continue;
          m[e.atom] = 1;
          changed = true;
        }
      }
    }
    for (std::size_t i = 0; i < guess.size(); ++i) {
      bool guessed = (mask >> i) & 1;
      if (static_cast<bool>(m[guess[i]]) != guessed) return false;
    }
    return true;
  }

  bool checks_pass(const std::vector<char>& m) const {
    for (const GroundRule& r : gp_.constraints) {
      if (sat_pos(r.body, m) && sat_neg(r.body, m)) return false;
    }
    for (const GroundChoice& c : gp_.choices) {
      if (!c.lower && !c.upper) continue;
      if (!sat_pos(c.body, m) || !sat_neg(c.body, m)) continue;
      long long count = 0;
      for (const GroundChoiceElem& e : c.elements) {
        if (m[e.atom] && sat_pos(e.cond, m) && sat_neg(e.cond, m)) ++count;
      }
      if (c.lower && count < *c.lower) return false;
      if (c.upper && count > *c.upper) return false;
    }
    return true;
  }

  std::vector<std::string> render(const std::vector<char>& m) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (shows_.any) {
        if (!shows_.sigs.count(gp_.atoms.sig[i])) continue;
      }
      out.push_back(gp_.atoms.text[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const GroundProgram& gp_;
  const ShowSet& shows_;
  const Options& opts_;
};

void apply_consts(Program& prog) {
  if (prog.const_directives.empty()) return;
  auto fix_atom = [&](Atom& a) {
    for (Term& t : a.args) subst_consts(t, prog.const_directives);
  };
  for (Statement& st : prog.statements) {
    if (st.head.kind == HeadKind::Atom) fix_atom(st.head.atom);
    if (st.head.kind == HeadKind::Choice) {
      if (st.head.lower) subst_consts(*st.head.lower, prog.const_directives);
      if (st.head.upper) subst_consts(*st.head.upper, prog.const_directives);
      for (ChoiceElement& e : st.head.elements) {
        fix_atom(e.atom);
        for (Literal& l : e.condition) fix_atom(l.atom);
      }
    }
    for (Literal& l : st.body) fix_atom(l.atom);
  }
}

void rename_anon(Program& prog) {
  int counter = 0;
  auto fix_atom = [&](Atom& a) {
    for (Term& t : a.args) fresh_anon(t, counter);
  };
  for (Statement& st : prog.statements) {
    if (st.head.kind == HeadKind::Atom && !st.is_fact()) fix_atom(st.head.atom);
    if (st.head.kind == HeadKind::Choice) {
      for (ChoiceElement& e : st.head.elements) {
        fix_atom(e.atom);
        for (Literal& l : e.condition) fix_atom(l.atom);
      }
    }
    for (Literal& l : st.body) fix_atom(l.atom);
  }
}

}  // namespace

Result solve_text(std::string_view text, const Options& opts) {
  Result res;
  try {
    ShowSet shows;
    std::string clean = strip_shows(text, shows);
    Program prog = parse(clean);
    apply_consts(prog);
    rename_anon(prog);
    Grounder grounder(prog);
    GroundProgram gp = grounder.ground();
    Search search(gp, shows, opts);
    return search.run();
  } catch (const std::exception& e) {
    res.status = Result::Status::Error;
    res.error = e.what();
    return res;
  }
}

}  // namespace aspfix::miniasp
