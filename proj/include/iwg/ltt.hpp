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

// Lamination train track structures.
//
// A structure on the rank-r labels has one vertex per direction, a black edge
// for each pair {x, bar(x)}, a single red vertex d^u with a single red edge
// [d^u, bar(d^a)], and purple edges among the remaining 2r - 1 vertices.

#ifndef IWG_LTT_HPP_
#define IWG_LTT_HPP_

#include <string>
#include <vector>

#include "iwg/labeled_graph.hpp"
#include "iwg/nielsen.hpp"
#include "iwg/nielsen_paths.hpp"
#include "iwg/profile.hpp"

namespace iwg {

enum class Axiom { I, II, III, IV, V, VI };

std::string to_string(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  std::string detail;
};

class LttStructure {
 public:
  LttStructure() = default;

  // Black edges for every pair, the red edge [red_vertex, red_end] and the
  // given purple edges.  Nothing is validated.
  static LttStructure from_parts(int rank, Direction red_vertex,
                                 Direction red_end, const TurnSet& purple);
  // Any colored graph, for building negative examples.
  static LttStructure raw(ColoredPairLabeledGraph g);

  int rank() const { return graph_.rank(); }
  const ColoredPairLabeledGraph& graph() const { return graph_; }

  // The red vertex; throws Error if there is none.
  Direction red_vertex() const;
  // The purple end of the red edge; throws Error if there is no red edge.
  Direction red_end() const;
  Turn red_edge() const { return Turn(red_vertex(), red_end()); }
  // d^a, the direction whose bar ends the red edge.
  Direction doubled() const { return red_end().bar(); }
  // The Nielsen generator [d^u -> d^a d^u] this structure asks for.
  NielsenGenerator generator() const {
    return NielsenGenerator(red_vertex(), doubled());
  }

  TurnSet purple_edges() const { return graph_.edge_set(Color::purple); }
  // Purple vertices and purple edges.
  ColoredPairLabeledGraph purple_graph() const;
  // Without the black edges.
  ColoredPairLabeledGraph colored_graph() const {
    return graph_.without_color(Color::black);
  }

  LttStructure relabeled(const PairPermutation& p) const;
  // Adds purple vertices and black edges for the new labels.
  LttStructure extended(int rank) const;
  // Induced on the labels of the first `rank` edges.
  LttStructure restricted(int rank) const;

  // "red b|c purple {a,c-} {a-,b-}"
  std::string to_string() const;

  auto operator<=>(const LttStructure&) const = default;

 private:
  ColoredPairLabeledGraph graph_;
};

// Empty iff the structure satisfies axioms I-VI.
std::vector<AxiomViolation> validate(const LttStructure& s);

// Some strongly connected class of smooth dart transitions (black and colored
// edges alternating, never turning back on the same edge) crosses every edge.
bool is_birecurrent(const LttStructure& s);

// From a train track profile: the closure of its rotationless power supplies
// the colored edges, the unique nonperiodic direction is the red vertex.
// Throws Error when the map is reducible or not expanding, or when the red
// data is not unique.
LttStructure build_ltt(const MapProfile& p);
// As above; the red data must agree with the final generator.  Checks the
// certificate and the train track property.
LttStructure build_ltt(const Decomposition& d, const PnpCertificate& cert);

}  // namespace iwg

#endif  // IWG_LTT_HPP_
