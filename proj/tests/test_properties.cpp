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
#include "iwg/error.hpp"
#include "iwg/ltt.hpp"
#include "iwg/synthesis.hpp"
#include "iwg/whitehead.hpp"
#include "oracles.hpp"
#include "corpus.hpp"

using namespace iwg;

namespace {

using corpus::oracle_segment;
using corpus::to_turns;

std::vector<Decomposition> corpus_sequences() { return corpus::sequences(); }

void check_cut(const ColoredPairLabeledGraph& g) {
  if (g.vertex_count() > 10) {
    return;
  }
  std::set<int> lib;
  for (Direction v : cut_vertices(g)) {
    lib.insert(v.code());
  }
  CHECK(lib == oracle::cut_vertices(fixtures::to_oracle(g)));
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("corpus is admissible") {
    for (const Decomposition& d : corpus_sequences()) {
      CHECK(is_admissible(d));
      CHECK(d.rank() <= 4);
      CHECK(d.size() <= 12);
    }
  }

  TEST_CASE("limited Whitehead recursion equals the direct computation") {
    for (const Decomposition& d : corpus_sequences()) {
      TurnSet rec = limited_whitehead_turns(d);
      CHECK(rec == limited_whitehead_turns_direct(d));
      oracle::Map o = oracle_segment(d, 0, d.size() - 1);
      CHECK(rec == to_turns(oracle::limited_turns(o)));
    }
  }

  TEST_CASE("every segment image of an edge contains the edge") {
    for (const Decomposition& d : corpus_sequences()) {
      for (std::size_t m = 0; m < d.size(); ++m) {
        for (std::size_t n = m; n < d.size(); ++n) {
          oracle::Map o = oracle_segment(d, m, n);
          for (int e = 0; e < d.rank(); ++e) {
            CHECK(o.images[e].find(static_cast<char>('a' + e)) !=
                  std::string::npos);
          }
        }
      }
      GraphMap g = d.compose_words();
      oracle::Map o = oracle_segment(d, 0, d.size() - 1);
      for (int e = 0; e < d.rank(); ++e) {
        CHECK(oracle::from_lib(g.images()[e].to_string()) == o.images[e]);
      }
    }
  }

  TEST_CASE("cut vertices on generated graphs") {
    int checked = 0;
    for (const Decomposition& d : corpus_sequences()) {
      MapProfile p = MapProfile::of(d);
      check_cut(local_whitehead_graph(p));
      check_cut(stable_whitehead_graph(p));
      checked += 2;
    }
    IdDiagram id = build_id_diagram(build_ltt(
        MapProfile::of(nine_step_example().power(2))));
    for (const LttStructure& s : id.nodes) {
      check_cut(s.purple_graph());
      check_cut(s.colored_graph().without_color(Color::red));
      ++checked;
    }
    CHECK(checked > 200);
  }

  TEST_CASE("build_ltt output satisfies the axioms") {
    int built = 0;
    for (const Decomposition& base : corpus_sequences()) {
      for (int m : {1, 2, 3}) {
        Decomposition d = base.power(m);
        if (!is_cyclically_admissible(d) || !is_train_track(d)) {
          continue;
        }
        LttStructure s;
        try {
          s = build_ltt(MapProfile::of(d));
        } catch (const Error&) {
          continue;
        }
        ++built;
        auto v = validate(s);
        CHECK_MESSAGE(v.empty(), d.to_string() << " gives " << s.to_string());
        CHECK_MESSAGE(is_birecurrent(s), s.to_string());
      }
    }
    LttStructure example = build_ltt(MapProfile::of(nine_step_example().power(2)));
    CHECK(validate(example).empty());
    CHECK(is_birecurrent(example));
    CHECK(built > 0);
  }
}
