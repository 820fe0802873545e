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

#ifndef ASPFIX_MINIASP_HPP
#define ASPFIX_MINIASP_HPP

#include <string>
#include <string_view>
#include <vector>

namespace aspfix::miniasp {

struct Options {
  int max_models = 1;   // 0 = all
  bool project = false; // deduplicate models over the #show signature
};

struct Result {
  enum class Status { Sat, Unsat, Error };
  Status status = Status::Unsat;
  // One entry per model: canonically sorted atom renderings.
  std::vector<std::vector<std::string>> models;
  bool exhausted = false;  // full search space covered
  std::string error;
};

/// Grounds and enumerates stable models of a program in the supported ASP
/// subset (plus `#show name/arity.` directives). Backend engine for the
/// bundled `miniasp` executable; not used by the pipeline directly.
Result solve_text(std::string_view text, const Options& opts);

}  // namespace aspfix::miniasp

#endif  // ASPFIX_MINIASP_HPP
