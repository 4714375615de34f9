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

#include "iwg/profile.hpp"

#include <numeric>
#include <set>

namespace iwg {

MapProfile MapProfile::identity(int rank) {
  MapProfile p;
  p.dg_ = DirectionMap::identity(rank);
  p.matrix_ = TransitionMatrix::identity(rank);
  return p;
}

MapProfile MapProfile::of(const GraphMap& g) {
  MapProfile p;
  p.dg_ = g.direction_map();
  p.matrix_ = g.transition_matrix();
  for (const Word& w : g.images()) {
    TurnSet t = taken_turns(w);
    p.limited_.insert(t.begin(), t.end());
  }
  p.tightened_ = g.tightened();
  return p;
}

MapProfile MapProfile::of(const NielsenGenerator& n, int rank) {
  return of(n.to_map(rank));
}

MapProfile MapProfile::of(const Decomposition& d) {
  MapProfile p = identity(d.rank());
  for (const NielsenGenerator& n : d.effective_steps()) {
    p = compose(of(n, d.rank()), p);
  }
  return p;
}

std::uint64_t MapProfile::total_length() const {
  std::uint64_t n = 0;
  for (int j = 0; j < matrix_.rank(); ++j) {
    std::uint64_t c = matrix_.column_sum(j);
    n = n + c < n ? TransitionMatrix::kSaturated : n + c;
  }
  return n;
}

MapProfile compose(const MapProfile& outer, const MapProfile& inner) {
  MapProfile p;
  p.dg_ = compose(outer.dg_, inner.dg_);
  p.matrix_ = outer.matrix_ * inner.matrix_;
  p.limited_ = outer.limited_;
  p.tightened_ = outer.tightened_ || inner.tightened_;
  for (const Turn& t : inner.limited_) {
    Turn image = outer.dg_(t);
    if (image.degenerate()) {
      p.tightened_ = true;
    }
    p.limited_.insert(image);
  }
  return p;
}

MapProfile power(const MapProfile& p, int exponent) {
  MapProfile out = MapProfile::identity(p.rank());
  for (int i = 0; i < exponent; ++i) {
    out = compose(p, out);
  }
  return out;
}

RotationlessPower rotationless_power(const DirectionMap& dg) {
  RotationlessPower out;
  std::set<Direction> seen;
  for (Direction d : dg.periodic()) {
    if (seen.count(d)) {
      continue;
    }
    int len = 0;
    Direction x = d;
    do {
      seen.insert(x);
      x = dg(x);
      ++len;
    } while (x != d);
    out.cycle_lengths.push_back(len);
    out.exponent = std::lcm(out.exponent, len);
  }
  return out;
}

RotationlessPower rotationless_power(const MapProfile& p) {
  return rotationless_power(p.direction_map());
}

RotationlessPower rotationless_power(const GraphMap& g) {
  return rotationless_power(g.direction_map());
}

TurnClosure TurnClosure::of(const MapProfile& p) {
  TurnClosure c;
  std::vector<Turn> frontier(p.limited_turns().begin(),
                             p.limited_turns().end());
  for (const Turn& t : frontier) {
    c.turns_.insert(t);
    c.generation_[t] = 0;
  }
  const DirectionMap& dg = p.direction_map();
  while (!frontier.empty()) {
    ++c.rounds_;
    std::vector<Turn> next;
    for (const Turn& t : frontier) {
      Turn image = dg(t);
      if (c.turns_.insert(image).second) {
        c.generation_[image] = c.rounds_;
        next.push_back(image);
      }
    }
    frontier = std::move(next);
  }
  --c.rounds_;
  if (c.rounds_ < 0) {
    c.rounds_ = 0;
  }
  return c;
}

TurnSet TurnClosure::nondegenerate() const {
  TurnSet out;
  for (const Turn& t : turns_) {
    if (!t.degenerate()) {
      out.insert(t);
    }
  }
  return out;
}

TurnClosure turn_closure(const MapProfile& p) { return TurnClosure::of(p); }
TurnClosure turn_closure(const GraphMap& g) { return TurnClosure::of(g); }

bool is_train_track(const MapProfile& p) {
  if (p.tightened()) {
    return false;
  }
  TurnClosure closure = TurnClosure::of(p);
  for (const Turn& t : closure.turns()) {
    if (is_illegal(p.direction_map(), t)) {
      return false;
    }
  }
  return true;
}

bool is_train_track(const GraphMap& g) {
  return is_train_track(MapProfile::of(g));
}

bool is_train_track(const Decomposition& d) {
  return is_train_track(MapProfile::of(d));
}

}  // namespace iwg
