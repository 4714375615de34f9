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
#include "iwg/synthesis.hpp"

using namespace iwg;
using fixtures::dir;

namespace {

// The example normalized so its red edge is [a, b], via a -> c, b -> a,
// c -> b.
GluingSpec unit_spec(const std::set<int>& shared) {
  Decomposition d = nine_step_example().power(2);
  PairPermutation s(3, {dir("c"), dir("a"), dir("b")});
  Decomposition u = d.relabeled(s);
  LttStructure l = build_ltt(u, *certify_pnp_free(u));
  return GluingSpec{u, l, u, l, shared};
}

}  // namespace

TEST_SUITE("synthesis") {
  TEST_CASE("normalized unit has red edge [a, b]") {
    GluingSpec spec = unit_spec({0, 1});
    CHECK(spec.left_ltt.red_edge() == fixtures::turn("a", "b"));
  }

  TEST_CASE("rank arithmetic and relabeling") {
    GluingSpec spec = unit_spec({0, 1});
    CHECK(glued_rank(spec) == 4);
    PairPermutation p = right_relabeling(spec);
    CHECK(p.to_string() == "a->a b->b c->d");
    GluingSpec all = unit_spec({0, 1, 2});
    CHECK(glued_rank(all) == 3);
  }

  TEST_CASE("malformed gluing input") {
    GluingSpec missing = unit_spec({0});
    CHECK_THROWS_AS(right_relabeling(missing), SpecError);
    GluingSpec mismatched = unit_spec({0, 1});
    Decomposition d = nine_step_example().power(2);
    mismatched.right_ltt = build_ltt(d, *certify_pnp_free(d));
    CHECK_THROWS_AS(glue_graphs(mismatched), SpecError);
  }

  TEST_CASE("glued graph of two units") {
    GluingSpec spec = unit_spec({0, 1});
    ColoredPairLabeledGraph g = glue_graphs(spec);
    CHECK(g.rank() == 4);
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_set(Color::red).empty());
    CHECK(connected_components(g).size() == 1);
    CHECK_FALSE(cut_vertices(g).empty());
  }

  TEST_CASE("realizing the glued graph") {
    GlueResult r = realize_glued(unit_spec({0, 1}));
    CHECK(r.rank == 4);
    CHECK(r.admissible);
    CHECK(r.irreducible);
    CHECK(r.turns_taken);
    CHECK(r.pnp_free);
    CHECK(r.ideal_matches);
    CHECK(r.granted);
    CHECK(r.failure.empty());
    CHECK(is_isomorphic(r.ideal, r.glued, LabelMode::exact, false));
  }

  TEST_CASE("normalizing power") {
    auto m = normalizing_power(nine_step_example());
    REQUIRE(m.has_value());
    CHECK(*m >= 1);
    CHECK(*m <= 12);
  }

  TEST_CASE("pipeline at ranks three to six") {
    for (int r = 3; r <= 6; ++r) {
      PipelineResult p = cut_vertex_pipeline(r);
      CHECK(p.granted());
      CHECK(p.ideal.vertex_count() == static_cast<std::size_t>(2 * r - 1));
      CHECK(p.iw_connected);
      REQUIRE(p.index.size() == 1);
      CHECK(p.index[0] == HalfInteger::from_twice(3 - 2 * r));
      CHECK_FALSE(p.cut.empty());
    }
    PipelineResult four = cut_vertex_pipeline(4);
    CHECK(four.cut == std::set<Direction>{dir("a-"), dir("b-")});
    CHECK(four.glued_labels ==
          std::set<Direction>{dir("a-"), dir("b"), dir("b-")});
    CHECK(four.ideal.edge_set(Color::purple) ==
          TurnSet{fixtures::turn("a-", "b-"), fixtures::turn("a-", "c-"),
                  fixtures::turn("a-", "d-"), fixtures::turn("b", "c-"),
                  fixtures::turn("b", "d-"), fixtures::turn("b-", "c"),
                  fixtures::turn("b-", "d")});
    CHECK_THROWS_AS(cut_vertex_pipeline(2), Error);
  }
}
