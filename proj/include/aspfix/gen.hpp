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

#ifndef ASPFIX_GEN_HPP
#define ASPFIX_GEN_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "aspfix/ast.hpp"

namespace aspfix {

/// Seeded random generator for statements and small programs, used by the
/// property suites and the benchmark harness.
class StatementGenerator {
 public:
  struct Options {
    int max_body = 3;
    int max_args = 2;
    int max_term_depth = 2;
    bool arithmetic = true;
    bool comparisons = true;
    bool choice_rules = true;
    bool intervals_and_pools = true;
    bool classical_negation = true;
    // Restrict to statements the bundled solver grounds: no intervals/pools
    // outside facts, every variable bound by a positive body literal.
    bool solver_safe = false;
  };

  explicit StatementGenerator(std::uint64_t seed) : StatementGenerator(seed, Options{}) {}
  StatementGenerator(std::uint64_t seed, Options opts);

  Statement statement();
  /// A vocabulary-consistent program of `lines` statements. When
  /// opts.solver_safe is set, the result grounds cleanly and has a small
  /// Herbrand universe.
  Program program(int lines);

  std::mt19937_64& rng() { return rng_; }

 private:
  friend struct GenImpl;
  std::mt19937_64 rng_;
  Options opts_;
  std::vector<std::pair<std::string, int>> preds_;
  std::vector<std::string> vars_;
  std::vector<std::string> consts_;
};

}  // namespace aspfix

#endif  // ASPFIX_GEN_HPP
