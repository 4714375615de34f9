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
#include "iwg/nielsen_paths.hpp"
#include "iwg/synthesis.hpp"
#include "iwg/whitehead.hpp"

using namespace iwg;
using fixtures::dir;
using fixtures::turn;

TEST_SUITE("whitehead") {
  TEST_CASE("local and stable Whitehead graphs") {
    MapProfile p = MapProfile::of(nine_step_example());
    ColoredPairLabeledGraph lw = local_whitehead_graph(p);
    CHECK(lw.vertex_count() == 6);
    CHECK(lw.edge_set(Color::purple) ==
          TurnSet{turn("a", "c-"), turn("a-", "b-"), turn("a-", "c"),
                  turn("b", "c"), turn("b-", "c-")});
    ColoredPairLabeledGraph sw = stable_whitehead_graph(p);
    CHECK_FALSE(sw.has_vertex(dir("b")));
    CHECK(sw.vertex_count() == 5);
  }

  TEST_CASE("limited turns by recursion and directly") {
    Decomposition d = nine_step_example();
    CHECK(limited_whitehead_turns(d) == limited_whitehead_turns_direct(d));
    CHECK(limited_whitehead_turns(d) ==
          limited_whitehead_turns(d.compose_words()));
  }

  TEST_CASE("ideal Whitehead graph of the example") {
    Decomposition d = nine_step_example().power(2);
    auto cert = certify_pnp_free(d);
    REQUIRE(cert.has_value());
    ColoredPairLabeledGraph iw = ideal_whitehead_graph(d, &*cert);
    std::set<Direction> vertices;
    for (const auto& [v, c] : iw.vertices()) {
      vertices.insert(v);
    }
    CHECK(vertices == std::set<Direction>{dir("a"), dir("a-"), dir("b-"),
                                          dir("c"), dir("c-")});
    CHECK(iw.edge_set(Color::purple) ==
          TurnSet{turn("a", "c-"), turn("a-", "b-"), turn("a-", "c"),
                  turn("b-", "c-")});
    CHECK(connected_components(iw).size() == 1);
    CHECK(cut_vertices(iw) ==
          std::set<Direction>{dir("a-"), dir("b-"), dir("c-")});
    auto index = index_list(iw);
    REQUIRE(index.size() == 1);
    CHECK(index[0] == HalfInteger::from_twice(-3));
    CHECK(index[0].to_string() == "-3/2");
  }

  TEST_CASE("ideal Whitehead graph needs a matching certificate") {
    Decomposition d = nine_step_example();
    CHECK_THROWS_AS(ideal_whitehead_graph(d, nullptr), MissingCertificate);
    auto cert = certify_pnp_free(d.power(2));
    REQUIRE(cert.has_value());
    CHECK_FALSE(certifies(*cert, d.rotated(1)));
    CHECK_THROWS_AS(ideal_whitehead_graph(d.rotated(1), &*cert),
                    MissingCertificate);
  }

  TEST_CASE("half integers") {
    CHECK(HalfInteger::from_twice(-7).to_string() == "-7/2");
    CHECK(HalfInteger::from_twice(-2).to_string() == "-1");
    CHECK(HalfInteger::from_twice(0).to_string() == "0");
    ColoredPairLabeledGraph two(3);
    two.add_edge(dir("a"), dir("b"));
    two.add_edge(dir("c"), dir("c-"));
    two.add_edge(dir("c"), dir("a-"));
    auto idx = index_list(two);
    REQUIRE(idx.size() == 2);
    CHECK(idx[0].to_string() == "-1/2");
    CHECK(idx[1].to_string() == "0");
  }
}
