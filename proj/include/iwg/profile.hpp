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

// Composable summaries of graph maps.
//
// Long Nielsen sequences have composites whose edge images run to hundreds of
// millions of letters.  Everything the invariants need survives composition
// in a summary: the direction map, the limited turn set W_L(g), the
// transition matrix, and whether any cancellation happened along the way.

#ifndef IWG_PROFILE_HPP_
#define IWG_PROFILE_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "iwg/direction.hpp"
#include "iwg/graph_map.hpp"
#include "iwg/nielsen.hpp"

namespace iwg {

class MapProfile {
 public:
  MapProfile() = default;

  static MapProfile identity(int rank);
  // Read off an explicit map.
  static MapProfile of(const GraphMap& g);
  static MapProfile of(const NielsenGenerator& n, int rank);
  // Folded step by step with compose(), never building the words.
  static MapProfile of(const Decomposition& d);

  int rank() const { return dg_.rank(); }
  const DirectionMap& direction_map() const { return dg_; }
  // Turns taken by the single edge images g(E_i).
  const TurnSet& limited_turns() const { return limited_; }
  const TransitionMatrix& transition_matrix() const { return matrix_; }
  // Some composed image cancelled, or a turn of the inner limited set was
  // collapsed by the outer direction map.
  bool tightened() const { return tightened_; }
  // Sum of the image lengths (saturating).
  std::uint64_t total_length() const;

  bool operator==(const MapProfile&) const = default;

  // outer o inner
  friend MapProfile compose(const MapProfile& outer, const MapProfile& inner);

 private:
  DirectionMap dg_;
  TurnSet limited_;
  TransitionMatrix matrix_;
  bool tightened_ = false;
};

MapProfile compose(const MapProfile& outer, const MapProfile& inner);
MapProfile power(const MapProfile& p, int exponent);

// Smallest R with every periodic direction fixed by Dg^R, the lcm of the
// cycle lengths of the direction map.
struct RotationlessPower {
  int exponent = 1;
  std::vector<int> cycle_lengths;
};

RotationlessPower rotationless_power(const DirectionMap& dg);
RotationlessPower rotationless_power(const MapProfile& p);
RotationlessPower rotationless_power(const GraphMap& g);

// Least fixed point of T = W_L(g) ∪ Dg(T).  Degenerate turns produced by a
// collapse stay in the set; they witness illegality but are never graph
// edges.
class TurnClosure {
 public:
  static TurnClosure of(const MapProfile& p);
  static TurnClosure of(const GraphMap& g) { return of(MapProfile::of(g)); }

  const TurnSet& turns() const { return turns_; }
  // Round in which a turn first appeared; W_L(g) is round 0.
  int generation(const Turn& t) const { return generation_.at(t); }
  const std::map<Turn, int>& generations() const { return generation_; }
  int rounds() const { return rounds_; }
  bool contains(const Turn& t) const { return turns_.count(t) > 0; }
  TurnSet nondegenerate() const;

 private:
  TurnSet turns_;
  std::map<Turn, int> generation_;
  int rounds_ = 0;
};

TurnClosure turn_closure(const MapProfile& p);
TurnClosure turn_closure(const GraphMap& g);

// No turn of the closure is illegal, and no cancellation happened while
// composing.
bool is_train_track(const MapProfile& p);
bool is_train_track(const GraphMap& g);
bool is_train_track(const Decomposition& d);

}  // namespace iwg

#endif  // IWG_PROFILE_HPP_
