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

#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "iwg/error.hpp"
#include "iwg/nielsen_paths.hpp"
#include "iwg/synthesis.hpp"

using namespace iwg;
using fixtures::dir;
using fixtures::turn;

namespace {

std::string trace(const BranchTrace& b) {
  std::string s;
  for (const Extension& e : b.extensions) {
    s += std::string(1, e.side) + e.edge.to_string() + "@" +
         std::to_string(e.step) + " ";
  }
  return s;
}

}  // namespace

TEST_SUITE("nielsen_paths") {
  TEST_CASE("one pass over the square kills every branch") {
    SearchBounds one;
    one.max_passes = 1;
    SearchResult r = search_inps(nine_step_example().power(2), one);
    CHECK(r.verdict == Verdict::NoneLegalized);
    CHECK(r.steps_per_pass == 18);
    CHECK(r.rotationless_exponent == 1);
    CHECK(r.deepest_step == 15);
    REQUIRE(r.branches.size() == 6);
    int at6 = 0;
    int at15 = 0;
    for (const BranchTrace& b : r.branches) {
      CHECK(b.fate == BranchFate::legalized);
      CHECK(b.start == turn("a-", "b"));
      REQUIRE(b.final_turn.has_value());
      CHECK(*b.final_turn == turn("a-", "b"));
      at6 += b.death_step == 6;
      at15 += b.death_step == 15;
    }
    CHECK(at6 == 4);
    CHECK(at15 == 2);
  }

  TEST_CASE("the worked branch dies before the seventh generator") {
    SearchBounds one;
    one.max_passes = 1;
    SearchResult r = search_inps(nine_step_example().power(2), one);
    auto it = std::find_if(r.branches.begin(), r.branches.end(),
                           [](const BranchTrace& b) {
                             return b.rho1.to_string() == "a-c-b" &&
                                    b.rho2.to_string() == "ba-c-";
                           });
    REQUIRE(it != r.branches.end());
    CHECK(trace(*it) == "Qa-@1 Pc-@2 Qc-@4 Pb@5 ");
    CHECK(it->death_step == 6);
    CHECK(it->fate == BranchFate::legalized);
  }

  TEST_CASE("a single pass of the plain sequence is not enough") {
    SearchBounds one;
    one.max_passes = 1;
    SearchResult r = search_inps(nine_step_example(), one);
    CHECK(r.verdict == Verdict::Inconclusive);
    int open = 0;
    for (const BranchTrace& b : r.branches) {
      open += b.fate == BranchFate::open;
    }
    CHECK(open == 2);
    CHECK(search_inps(nine_step_example()).verdict == Verdict::NoneLegalized);
  }

  TEST_CASE("a geometric map has a periodic Nielsen path") {
    // The boundary word of the once-punctured torus is fixed.
    GraphMap g = GraphMap::parse(2, {"ab", "bab"});
    SearchResult r = search_inps(g);
    CHECK(r.verdict == Verdict::Found);
    REQUIRE(r.rho.has_value());
    CHECK(r.rho->to_string() == "bab-a-");
    Word fixed = r.rho.value();
    for (int i = 0; i < r.period; ++i) {
      fixed = g.apply(fixed);
    }
    CHECK(fixed == *r.rho);
    std::optional<Turn> any;
    for (const BranchTrace& b : r.branches) {
      if (b.fate == BranchFate::found) {
        any = b.start;
      }
    }
    CHECK(any.has_value());
  }

  TEST_CASE("search preconditions and bounds") {
    CHECK_THROWS_AS(search_inps(GraphMap::parse(2, {"ab", "a-b"})),
                    NotTrainTrack);
    SearchBounds tiny;
    tiny.max_len = 2;
    SearchResult r = search_inps(nine_step_example().power(2), tiny);
    CHECK(r.verdict == Verdict::Inconclusive);
    bool cut = std::any_of(r.branches.begin(), r.branches.end(),
                           [](const BranchTrace& b) {
                             return b.fate == BranchFate::cut_off;
                           });
    CHECK(cut);
  }

  TEST_CASE("prevention sequences and certificates") {
    Decomposition d = nine_step_example();
    CHECK_FALSE(is_legalizing_prevention_sequence(d));
    SearchResult t;
    CHECK(is_legalizing_prevention_sequence(d.power(2), &t));
    CHECK(t.verdict == Verdict::NoneLegalized);
    auto c = certify_pnp_free(d.power(2));
    REQUIRE(c.has_value());
    CHECK(c->legalizing);
    CHECK(c->power == 1);
    CHECK(certifies(*c, d.power(2)));
    CHECK(c->fingerprint == fingerprint(d.power(2)));
    CHECK(fingerprint(d).rfind("rank 3: ", 0) == 0);
    auto plain = certify_pnp_free(d);
    REQUIRE(plain.has_value());
    CHECK_FALSE(plain->legalizing);
  }
}
