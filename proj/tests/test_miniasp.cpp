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
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "aspfix/miniasp.hpp"
#include "doctest.h"

using aspfix::miniasp::Options;
using aspfix::miniasp::Result;
using aspfix::miniasp::solve_text;

namespace {

Options all_models() {
  Options o;
  o.max_models = 0;
  o.project = true;
  return o;
}

std::set<std::vector<std::string>> model_set(const Result& r) {
  return {r.models.begin(), r.models.end()};
}

}  // namespace

TEST_CASE("grounding of the basic positive program") {
  Result r = solve_text("b(X) :- a(X). a(1). a(2).", all_models());
  REQUIRE(r.status == Result::Status::Sat);
  REQUIRE(r.models.size() == 1);
  CHECK(r.models[0] == std::vector<std::string>{"a(1)", "a(2)", "b(1)", "b(2)"});
  CHECK(r.exhausted);
}

TEST_CASE("projection via #show") {
  Result r = solve_text("b(X) :- a(X). a(1). a(2). #show b/1.", all_models());
  REQUIRE(r.models.size() == 1);
  CHECK(r.models[0] == std::vector<std::string>{"b(1)", "b(2)"});
}

TEST_CASE("direct contradiction is unsat") {
  Result r = solve_text(":- a. a.", all_models());
  CHECK(r.status == Result::Status::Unsat);
  CHECK(r.models.empty());
  CHECK(solve_text(":- not a.", all_models()).status == Result::Status::Unsat);
  CHECK(solve_text("a. :- not a.", all_models()).status == Result::Status::Sat);
}

TEST_CASE("even negation loop yields two models") {
  Result r = solve_text("a :- not b. b :- not a.", all_models());
  auto ms = model_set(r);
  CHECK(ms == std::set<std::vector<std::string>>{{"a"}, {"b"}});
}

TEST_CASE("positive recursion stays out of the least model") {
  Result r = solve_text("p :- q. q :- p.", all_models());
  REQUIRE(r.models.size() == 1);
  CHECK(r.models[0].empty());
}

TEST_CASE("choice bounds act as constraints") {
  CHECK(model_set(solve_text("2 { a ; b } 2.", all_models())) ==
        std::set<std::vector<std::string>>{{"a", "b"}});
  CHECK(model_set(solve_text("{ a ; b } 1.", all_models())) ==
        std::set<std::vector<std::string>>{{}, {"a"}, {"b"}});
  CHECK(model_set(solve_text("1 { a ; b }.", all_models())) ==
        std::set<std::vector<std::string>>{{"a"}, {"b"}, {"a", "b"}});
  CHECK(solve_text("3 { a ; b } 3.", all_models()).status == Result::Status::Unsat);
}

TEST_CASE("comparisons and arithmetic during grounding") {
  Result r = solve_text("q(1). q(2). r(X,Y) :- q(X), q(Y), X < Y.", all_models());
  REQUIRE(r.models.size() == 1);
  CHECK(std::count(r.models[0].begin(), r.models[0].end(), "r(1,2)") == 1);
  CHECK(std::count(r.models[0].begin(), r.models[0].end(), "r(2,1)") == 0);

  Result r2 = solve_text("q(2). p(X+1) :- q(X). #show p/1.", all_models());
  CHECK(r2.models[0] == std::vector<std::string>{"p(3)"});
}

TEST_CASE("interval and pool facts expand") {
  Result r = solve_text("v(1..3). p(5;7). #show v/1. #show p/1.", all_models());
  REQUIRE(r.models.size() == 1);
  CHECK(r.models[0] == std::vector<std::string>{"p(5)", "p(7)", "v(1)", "v(2)", "v(3)"});
}

TEST_CASE("classical negation consistency") {
  CHECK(solve_text("p(1). -p(1).", all_models()).status == Result::Status::Unsat);
  CHECK(solve_text("p(1). -p(2).", all_models()).status == Result::Status::Sat);
}

TEST_CASE("unsafe variables are grounding errors") {
  CHECK(solve_text("p(X).", all_models()).status == Result::Status::Error);
  CHECK(solve_text("p(X) :- not q(X). q(1).", all_models()).status == Result::Status::Error);
}

TEST_CASE("const directives substitute into bounds and terms") {
  Result r = solve_text("#const k = 2. v(1..3). k { s(X) : v(X) } k. #show s/1.", all_models());
  CHECK(r.models.size() == 3);  // all 2-subsets of {1,2,3}
  for (const auto& m : r.models) CHECK(m.size() == 2);
}

TEST_CASE("vertex cover reference enumerates the paper test case") {
  const char* prog =
      "v(X) :- e(X,_).\n"
      "v(X) :- e(_,X).\n"
      "{ sel(X) : v(X) } k.\n"
      ":- not sel(X), not sel(Y), e(X,Y).\n"
      "#const k=3.\n"
      "e(1,2).\n"
      "#show sel/1.\n";
  Result r = solve_text(prog, all_models());
  auto ms = model_set(r);
  CHECK(ms == std::set<std::vector<std::string>>{{"sel(1)"}, {"sel(2)"}, {"sel(1)", "sel(2)"}});
}

TEST_CASE("buggy vertex cover submission has no answer sets") {
  const char* prog =
      "v(X) :- e(X,_).\n"
      "v(X) :- e(_,X).\n"
      "k { sel(X) : v(X) } k.\n"
      ":- not sel(X), not sel(Y), e(X,Y).\n"
      "#const k=3.\n"
      "e(1,2).\n";
  CHECK(solve_text(prog, all_models()).status == Result::Status::Unsat);
}

TEST_CASE("relaxed vertex cover satisfiability pattern") {
  // Validated against clingo 5.8.1: only dropping the choice line admits the
  // forced answer set {sel(2)}.
  auto relaxed = [](std::set<int> enabled) {
    std::string p =
        "v(X) :- e(X,_), _sel(0).\n"
        "v(X) :- e(_,X), _sel(1).\n"
        "k { sel(X) : v(X) } k :- _sel(2).\n"
        ":- not sel(X), not sel(Y), e(X,Y), _sel(3).\n"
        "#const k=3.\ne(1,2).\nsel(2).\n:- not sel(2).\n"
        "_in_sel(2).\n:- sel(X1), not _in_sel(X1).\n";
    for (int i : enabled) p += "_sel(" + std::to_string(i) + ").\n";
    return solve_text(p, Options{1, false}).status;
  };
  CHECK(relaxed({0, 1, 2, 3}) == Result::Status::Unsat);
  CHECK(relaxed({0, 1, 3}) == Result::Status::Sat);
  CHECK(relaxed({1, 2, 3}) == Result::Status::Unsat);
  CHECK(relaxed({0, 1, 2}) == Result::Status::Unsat);
  CHECK(relaxed({2, 3}) == Result::Status::Unsat);
}

// ---------------------------------------------------------------------------
// Textbook oracle: for random propositional normal programs, stable models
// are exactly the sets M with M = least model of the reduct P^M.

namespace {

struct PropRule {
  int head;  // -1 for constraint
  std::vector<int> pos, neg;
};

std::vector<std::set<int>> stable_by_definition(const std::vector<PropRule>& rules, int natoms) {
  std::vector<std::set<int>> out;
  for (int mask = 0; mask < (1 << natoms); ++mask) {
    std::set<int> m;
    for (int a = 0; a < natoms; ++a) {
      if (mask & (1 << a)) m.insert(a);
    }
    // reduct + least model
    std::set<int> lm;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const PropRule& r : rules) {
        if (r.head < 0) continue;
        bool negok = true;
        for (int a : r.neg) {
          if (m.count(a)) negok = false;
        }
        if (!negok || lm.count(r.head)) continue;
        bool posok = true;
        for (int a : r.pos) {
          if (!lm.count(a)) posok = false;
        }
        if (posok) {
          lm.insert(r.head);
          changed = true;
        }
      }
    }
    if (lm != m) continue;
    bool violated = false;
    for (const PropRule& r : rules) {
      if (r.head >= 0) continue;
      bool posok = true, negok = true;
      for (int a : r.pos) {
        if (!m.count(a)) posok = false;
      }
      for (int a : r.neg) {
        if (m.count(a)) negok = false;
      }
      if (posok && negok) violated = true;
    }
    if (!violated) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("random propositional programs match the stable-model definition") {
  std::mt19937_64 rng(99);
  const char* names[] = {"a", "b", "c", "d", "e"};
  for (int iter = 0; iter < 300; ++iter) {
    int natoms = 3 + static_cast<int>(rng() % 3);
    int nrules = 2 + static_cast<int>(rng() % 5);
    std::vector<PropRule> rules;
    std::string text;
    for (int i = 0; i < nrules; ++i) {
      PropRule r;
      r.head = static_cast<int>(rng() % (natoms + 1)) - 1;  // -1 = constraint
      int nbody = static_cast<int>(rng() % 3);
      if (r.head < 0 && nbody == 0) nbody = 1;
      std::set<int> used;
      for (int b = 0; b < nbody; ++b) {
        int a = static_cast<int>(rng() % natoms);
        if (!used.insert(a).second) continue;
        if (rng() % 2) {
          r.neg.push_back(a);
        } else {
          r.pos.push_back(a);
        }
      }
      std::string line = r.head >= 0 ? names[r.head] : "";
      if (!r.pos.empty() || !r.neg.empty()) {
        line += r.head >= 0 ? " :- " : ":- ";
        bool first = true;
        for (int a : r.pos) {
          if (!first) line += ", ";
          line += names[a];
          first = false;
        }
        for (int a : r.neg) {
          if (!first) line += ", ";
          line += std::string("not ") + names[a];
          first = false;
        }
      }
      line += ".";
      text += line + "\n";
      rules.push_back(std::move(r));
    }
    CAPTURE(text);

    auto expected = stable_by_definition(rules, natoms);
    Result got = solve_text(text, all_models());
    REQUIRE(got.status != Result::Status::Error);
    std::set<std::set<std::string>> exp_set, got_set;
    for (const auto& m : expected) {
      std::set<std::string> s;
      for (int a : m) s.insert(names[a]);
      exp_set.insert(std::move(s));
    }
    for (const auto& m : got.models) got_set.insert({m.begin(), m.end()});
    CHECK(exp_set == got_set);
  }
}
