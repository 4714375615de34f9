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
#include "iwg/diagram.hpp"
#include "iwg/synthesis.hpp"

using namespace iwg;
using fixtures::dir;
using fixtures::turn;

namespace {

LttStructure seed() {
  Decomposition d = nine_step_example().power(2);
  return build_ltt(d, *certify_pnp_free(d));
}

}  // namespace

TEST_SUITE("moves_and_diagrams") {
  TEST_CASE("predecessors are generating triples") {
    LttStructure s = seed();
    auto preds = predecessors(s);
    REQUIRE_FALSE(preds.empty());
    for (const GeneratingTriple& t : preds) {
      CHECK(t.target == s);
      CHECK(t.generator == s.generator());
      CHECK(is_generating_triple(t));
      CHECK(validate(t.source).empty());
      CHECK(is_birecurrent(t.source));
      CHECK(t.determining_edge.contains(s.doubled()));
    }
  }

  TEST_CASE("extension keeps the red vertex, switch moves it") {
    LttStructure s = seed();
    for (const Turn& t : s.purple_edges()) {
      if (!t.contains(s.doubled())) {
        continue;
      }
      Direction other = t.other(s.doubled());
      if (auto e = extension(s, t)) {
        CHECK(e->kind == MoveKind::extension);
        CHECK(e->source.red_vertex() == s.red_vertex());
        CHECK(e->source.red_end() == other);
      }
      if (auto w = switch_move(s, t)) {
        CHECK(w->kind == MoveKind::switch_move);
        CHECK(w->source.red_vertex() == s.doubled());
        CHECK(w->source.red_end() == other);
      }
    }
    // Not an edge at d^a.
    CHECK_FALSE(extension(s, turn("a-", "b-")).has_value());
  }

  TEST_CASE("the diagram component of the example") {
    IdDiagram id = build_id_diagram(seed());
    CHECK_FALSE(id.truncated);
    CHECK(id.nodes.size() == 8);
    CHECK(id.arrows.size() == 20);
    CHECK(id.seed_nodes.size() == 8);
    CHECK(id.seed_arrows.size() == 20);
    CHECK(id.nontrivial_components == 1);
    CHECK(id.contains(seed()));
    CHECK(id.index_of(seed()) == 0);
    for (int v : id.seed_nodes) {
      CHECK(diagram_path(id, 0, v).has_value());
      CHECK(diagram_path(id, v, 0).has_value());
    }
    IdDiagram shuffled = build_id_diagram(seed(), 100000, 99);
    CHECK(shuffled.seed_nodes.size() == 8);
    CHECK(shuffled.seed_arrows.size() == 20);
    for (const LttStructure& n : id.nodes) {
      CHECK(shuffled.contains(n));
    }
  }

  TEST_CASE("the realizing loop is certified") {
    Decomposition d = nine_step_example().power(2);
    auto loop = realizing_loop(d, seed());
    REQUIRE(loop.has_value());
    CHECK(loop->size() == 18);
    CHECK(admissible_composition_check(*loop));
    CHECK(loop_decomposition(*loop).effective_steps() == d.effective_steps());
    LoopCertificate c = check_representative_loop(*loop);
    CHECK(c.granted);
    CHECK(c.admissible);
    CHECK(c.train_track);
    CHECK(c.condition_a);
    CHECK(c.condition_b);
    CHECK(c.condition_c);
    CHECK(c.ltt_matches);
  }

  TEST_CASE("loops through every node are certified") {
    Decomposition d = nine_step_example().power(2);
    IdDiagram id = build_id_diagram(seed());
    auto base = realizing_loop(d, seed());
    REQUIRE(base.has_value());
    for (int v : id.seed_nodes) {
      auto loop = loop_through(id, *base, v);
      REQUIRE(loop.has_value());
      CHECK(admissible_composition_check(*loop));
      LoopCertificate c = check_representative_loop(*loop);
      CHECK_MESSAGE(c.granted, "node " << v << ": " << c.reason);
    }
  }

  TEST_CASE("extended compositions") {
    Decomposition d = nine_step_example().power(2);
    auto loop = realizing_loop(d, seed());
    REQUIRE(loop.has_value());
    auto ext = extend_composition(*loop, 5);
    REQUIRE(ext.size() == loop->size());
    CHECK(ext.front().generator.to_string() ==
          loop->front().generator.to_string());
    CHECK(ext.front().source.rank() == 5);
    CHECK(ext.front().source.graph().has_edge(dir("e"), dir("e-"),
                                               Color::black));
    // The new labels are isolated in the purple graph, so only the
    // restriction to the native rank can satisfy the axioms.
    CHECK(admissible_composition_check(ext, 3));
    CHECK_FALSE(admissible_composition_check(ext));
    CHECK(loop_decomposition(ext).effective_steps() ==
          d.extended(5).effective_steps());
  }

  TEST_CASE("broken compositions are rejected") {
    Decomposition d = nine_step_example().power(2);
    auto loop = realizing_loop(d, seed());
    REQUIRE(loop.has_value());
    auto broken = *loop;
    std::swap(broken[0], broken[1]);
    CHECK_FALSE(admissible_composition_check(broken));
    CHECK_FALSE(admissible_composition_check({}));
  }
}
