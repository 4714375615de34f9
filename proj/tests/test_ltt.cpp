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

#include "doctest.h"
#include "fixtures.hpp"
#include "iwg/error.hpp"
#include "iwg/ltt.hpp"
#include "iwg/synthesis.hpp"

using namespace iwg;
using fixtures::dir;
using fixtures::turn;

namespace {

bool has_axiom(const std::vector<AxiomViolation>& v, Axiom a) {
  for (const auto& x : v) {
    if (x.axiom == a) {
      return true;
    }
  }
  return false;
}

LttStructure example_ltt() {
  return LttStructure::from_parts(
      3, dir("b"), dir("c"),
      {turn("a", "c-"), turn("a-", "b-"), turn("a-", "c"), turn("b-", "c-")});
}

}  // namespace

TEST_SUITE("ltt") {
  TEST_CASE("structure of the example") {
    LttStructure s = example_ltt();
    CHECK(s.red_vertex() == dir("b"));
    CHECK(s.red_end() == dir("c"));
    CHECK(s.doubled() == dir("c-"));
    CHECK(s.generator().to_string() == "[b->c-b]");
    CHECK(s.to_string() == "red b|c purple {a,c-} {a-,b-} {a-,c} {b-,c-}");
    CHECK(validate(s).empty());
    CHECK(is_birecurrent(s));
    CHECK(s.purple_graph().vertex_count() == 5);
    CHECK(s.graph().edge_set(Color::black).size() == 3);
  }

  TEST_CASE("build_ltt reproduces the example structure") {
    Decomposition d = nine_step_example().power(2);
    auto cert = certify_pnp_free(d);
    REQUIRE(cert.has_value());
    LttStructure s = build_ltt(d, *cert);
    CHECK(s == example_ltt());
    CHECK(build_ltt(MapProfile::of(d)) == s);
    // The red data is the last generator's.
    CHECK(s.generator() == d.effective_steps().back());
  }

  TEST_CASE("relabeling, extension and restriction") {
    LttStructure s = example_ltt();
    LttStructure e = s.extended(5);
    CHECK(e.rank() == 5);
    CHECK(e.graph().has_vertex(dir("e-")));
    CHECK(e.graph().has_edge(dir("d"), dir("d-"), Color::black));
    CHECK(e.restricted(3) == s);
    PairPermutation p(3, {dir("c"), dir("a"), dir("b")});
    LttStructure r = s.relabeled(p);
    CHECK(r.red_vertex() == dir("a"));
    CHECK(validate(r).empty());
    CHECK(is_birecurrent(r));
  }

  TEST_CASE("axiom violations") {
    // A second red edge.
    ColoredPairLabeledGraph g = example_ltt().graph();
    g.add_edge(dir("b"), dir("a"), Color::red);
    CHECK(has_axiom(validate(LttStructure::raw(g)), Axiom::VI));

    // An isolated purple vertex: a- loses all its purple edges.
    LttStructure iso = LttStructure::from_parts(
        3, dir("b"), dir("c"), {turn("a", "c-"), turn("b-", "c-")});
    CHECK(has_axiom(validate(iso), Axiom::I));

    // A missing black edge.
    ColoredPairLabeledGraph nb = example_ltt().graph();
    nb.remove_edge(Edge{turn("a", "a-"), Color::black});
    CHECK_FALSE(validate(LttStructure::raw(nb)).empty());

    // No red vertex at all.
    ColoredPairLabeledGraph nored(3);
    for (Direction d : all_directions(3)) {
      nored.add_vertex(d);
    }
    CHECK_THROWS_AS(LttStructure::raw(nored).red_vertex(), Error);
    CHECK_FALSE(validate(LttStructure::raw(nored)).empty());
  }

  TEST_CASE("birecurrence fails when an edge cannot be crossed") {
    // b- has no colored edge, so no smooth loop crosses the black edge of b.
    LttStructure s = LttStructure::from_parts(
        3, dir("b"), dir("c-"),
        {turn("a", "c-"), turn("a-", "c")});
    CHECK_FALSE(is_birecurrent(s));
  }
}
