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

// Shared test data.

#ifndef IWG_TESTS_FIXTURES_HPP_
#define IWG_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "iwg/direction.hpp"
#include "iwg/labeled_graph.hpp"
#include "oracles.hpp"

namespace fixtures {

// The nine rank-3 generators in edge form, first applied first.
inline const std::vector<std::string>& example_edge_forms() {
  static const std::vector<std::string> forms = {
      "[a->ab-]", "[b->a-b]", "[c->cb-]", "[c->ca]",  "[b->c-b]",
      "[a->ab-]", "[a->ac]",  "[b->a-b]", "[b->c-b]"};
  return forms;
}

// Oracle versions of the nine steps, typed in by hand.
inline std::vector<oracle::Map> example_oracle_steps() {
  using oracle::elementary;
  return {elementary(3, 'a', "aB"), elementary(3, 'b', "Ab"),
          elementary(3, 'c', "cB"), elementary(3, 'c', "ca"),
          elementary(3, 'b', "Cb"), elementary(3, 'a', "aB"),
          elementary(3, 'a', "ac"), elementary(3, 'b', "Ab"),
          elementary(3, 'b', "Cb")};
}

inline const std::vector<std::string>& phi_images() {
  static const std::vector<std::string> images = {
      "acb-cab-cacacb-ca", "a-c-bc-a-c-a-c-b", "cacb-cab-cac"};
  return images;
}

inline iwg::Direction dir(const std::string& s, int rank = 26) {
  return iwg::Direction::parse(s, rank);
}

inline iwg::Turn turn(const std::string& a, const std::string& b) {
  return iwg::Turn(dir(a), dir(b));
}

// The library graph as an oracle graph on direction codes.
inline oracle::Graph to_oracle(const iwg::ColoredPairLabeledGraph& g) {
  oracle::Graph o;
  o.n = 2 * g.rank();
  for (const iwg::Edge& e : g.edges()) {
    o.edges.insert({e.ends.first().code(), e.ends.second().code()});
  }
  return o;
}

}  // namespace fixtures

#endif  // IWG_TESTS_FIXTURES_HPP_
