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

// Local, stable, limited and ideal Whitehead graphs, and index lists.

#ifndef IWG_WHITEHEAD_HPP_
#define IWG_WHITEHEAD_HPP_

#include <compare>
#include <string>
#include <vector>

#include "iwg/graph_map.hpp"
#include "iwg/labeled_graph.hpp"
#include "iwg/nielsen.hpp"
#include "iwg/nielsen_paths.hpp"
#include "iwg/profile.hpp"

namespace iwg {

// Vertices: all 2r directions.  Edges: nondegenerate closure turns.
ColoredPairLabeledGraph local_whitehead_graph(const MapProfile& p);
ColoredPairLabeledGraph local_whitehead_graph(const GraphMap& g);

// Induced on the periodic directions.
ColoredPairLabeledGraph stable_whitehead_graph(const MapProfile& p);
ColoredPairLabeledGraph stable_whitehead_graph(const GraphMap& g);

// Turns taken by the edge images of one application of the map.
TurnSet limited_whitehead_turns(const GraphMap& g);
// Through the explicit composite.
TurnSet limited_whitehead_turns_direct(const Decomposition& d);
// By the recursion W_L(g_{k,1}) = W_L(g_k) ∪ Dg_k(W_L(g_{k-1,1})).
TurnSet limited_whitehead_turns(const Decomposition& d);

// Stable Whitehead graph of the rotationless power.  Needs a certificate for
// this very decomposition (MissingCertificate) and a train track composite
// (NotTrainTrack).
ColoredPairLabeledGraph ideal_whitehead_graph(const Decomposition& d,
                                              const PnpCertificate* cert);

// k/2 for an integer k.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  constexpr int twice() const { return twice_; }
  // "-3/2", "0", "-1"
  std::string to_string() const;

  auto operator<=>(const HalfInteger&) const = default;

 private:
  int twice_ = 0;
};

// 1 - k/2 for each component with k vertices, sorted.
std::vector<HalfInteger> index_list(const ColoredPairLabeledGraph& iw);

}  // namespace iwg

#endif  // IWG_WHITEHEAD_HPP_
