// Copyright 2026 The iwg Authors. All Rights Reserved.
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

// Command-line front end.

#ifndef IWG_CLI_HPP_
#define IWG_CLI_HPP_

#include <iostream>

namespace iwg::cli {

enum ExitCode {
  kSuccess = 0,
  kCheckedFailure = 1,
  kUsage = 2,
  kInconclusive = 3,
};

// Verbs: verify, iwg, index, ltt, id-diagram, pnp, glue, pipeline, example.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

inline int run(int argc, const char* const* argv) {
  return run(argc, argv, std::cin, std::cout, std::cerr);
}

}  // namespace iwg::cli

#endif  // IWG_CLI_HPP_
