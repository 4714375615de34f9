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

#include "iwg/whitehead.hpp"

#include <algorithm>
#include <set>

#include "iwg/error.hpp"

namespace iwg {

ColoredPairLabeledGraph local_whitehead_graph(const MapProfile& p) {
  ColoredPairLabeledGraph g(p.rank());
  for (Direction d : all_directions(p.rank())) {
    g.add_vertex(d);
  }
  for (const Turn& t : TurnClosure::of(p).nondegenerate()) {
    g.add_edge(t.first(), t.second());
  }
  return g;
}

ColoredPairLabeledGraph local_whitehead_graph(const GraphMap& g) {
  return local_whitehead_graph(MapProfile::of(g));
}

ColoredPairLabeledGraph stable_whitehead_graph(const MapProfile& p) {
  auto periodic = p.direction_map().periodic();
  return local_whitehead_graph(p).induced(
      std::set<Direction>(periodic.begin(), periodic.end()));
}

ColoredPairLabeledGraph stable_whitehead_graph(const GraphMap& g) {
  return stable_whitehead_graph(MapProfile::of(g));
}

TurnSet limited_whitehead_turns(const GraphMap& g) {
  TurnSet out;
  for (const Word& w : g.images()) {
    TurnSet t = taken_turns(w);
    out.insert(t.begin(), t.end());
  }
  return out;
}

TurnSet limited_whitehead_turns_direct(const Decomposition& d) {
  return limited_whitehead_turns(d.compose_words());
}

TurnSet limited_whitehead_turns(const Decomposition& d) {
  return MapProfile::of(d).limited_turns();
}

ColoredPairLabeledGraph ideal_whitehead_graph(const Decomposition& d,
                                              const PnpCertificate* cert) {
  if (cert == nullptr) {
    throw MissingCertificate("no Nielsen path certificate supplied");
  }
  if (!certifies(*cert, d)) {
    throw MissingCertificate("certificate was issued for " +
                             cert->fingerprint + ", not " + fingerprint(d));
  }
  MapProfile p = MapProfile::of(d);
  if (!is_train_track(p)) {
    throw NotTrainTrack("composite of " + fingerprint(d) +
                        " is not a train track map");
  }
  return stable_whitehead_graph(power(p, rotationless_power(p).exponent));
}

std::string HalfInteger::to_string() const {
  if (twice_ % 2 == 0) {
    return std::to_string(twice_ / 2);
  }
  return std::to_string(twice_) + "/2";
}

std::vector<HalfInteger> index_list(const ColoredPairLabeledGraph& iw) {
  std::vector<HalfInteger> out;
  for (const auto& comp : connected_components(iw)) {
    out.push_back(HalfInteger::from_twice(2 - static_cast<int>(comp.size())));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace iwg
