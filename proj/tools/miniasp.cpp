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
// Bundled fallback ASP solver. Reads a program on stdin and emits models in
// the clingo text format, so it is interchangeable with a real clingo binary
// for programs inside the supported subset.

#include <cstring>
#include <iostream>
#include <sstream>
#include <string>

#include "aspfix/miniasp.hpp"

int main(int argc, char** argv) {
  aspfix::miniasp::Options opts;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg.rfind("--models=", 0) == 0) {
      opts.max_models = std::atoi(arg.c_str() + 9);
    } else if (arg == "-n" && i + 1 < argc) {
      opts.max_models = std::atoi(argv[++i]);
    } else if (arg.rfind("--project", 0) == 0) {
      opts.project = arg != "--project=no";
    } else if (arg.rfind("--warn", 0) == 0 || arg.rfind("--seed", 0) == 0 ||
               arg.rfind("-W", 0) == 0) {
      // accepted for clingo compatibility
    } else if (arg == "--version") {
      std::cout << "miniasp version 0.1.0\n";
      return 0;
    } else {
      std::cerr << "miniasp: unknown option " << arg << "\n";
      return 65;
    }
  }

  std::ostringstream buf;
  buf << std::cin.rdbuf();
  auto res = aspfix::miniasp::solve_text(buf.str(), opts);

  using Status = aspfix::miniasp::Result::Status;
  if (res.status == Status::Error) {
    std::cerr << "miniasp: error: " << res.error << "\n";
    return 65;
  }

  std::cout << "miniasp version 0.1.0\nReading from stdin\nSolving...\n";
  int i = 0;
  for (const auto& model : res.models) {
    std::cout << "Answer: " << ++i << "\n";
    for (std::size_t k = 0; k < model.size(); ++k) {
      if (k) std::cout << ' ';
      std::cout << model[k];
    }
    std::cout << "\n";
  }
  bool sat = res.status == Status::Sat;
  std::cout << (sat ? "SATISFIABLE" : "UNSATISFIABLE") << "\n\n";
  std::cout << "Models       : " << res.models.size() << (res.exhausted ? "" : "+") << "\n";
  if (!sat) return 20;
  return res.exhausted ? 30 : 10;
}
