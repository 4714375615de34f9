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

// Standard Nielsen generators and decompositions into them.
//
// A generator is stored in prepend normal form [x -> y x] over the 2r
// directions: x is the direction that loses its preimage (d^u) and y the one
// that gains a second preimage (d^a).  For x = E_i this is E_i -> y E_i; for
// x = bar(E_i) it is E_i -> E_i bar(y).

#ifndef IWG_NIELSEN_HPP_
#define IWG_NIELSEN_HPP_

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "iwg/direction.hpp"
#include "iwg/graph_map.hpp"

namespace iwg {

class NielsenGenerator {
 public:
  // Prepend form.  Throws InvalidLetter if x and y share an edge.
  NielsenGenerator(Direction x, Direction y);

  static NielsenGenerator prepend(Direction x, Direction y) {
    return NielsenGenerator(x, y);
  }
  // [k -> k y] becomes [bar(k) -> bar(y) bar(k)].
  static NielsenGenerator append(Direction k, Direction y) {
    return NielsenGenerator(k.bar(), y.bar());
  }
  // "b->a-b", "a->ab-", "[c -> c a]".  The left side is one letter, the right
  // side that letter with one letter prepended or appended.
  static NielsenGenerator parse(std::string_view text, int rank);

  Direction x() const { return x_; }
  Direction y() const { return y_; }
  Direction missing() const { return x_; }
  Direction doubled() const { return y_; }
  Turn illegal_turn() const { return Turn(x_, y_); }
  int max_edge() const { return std::max(x_.edge(), y_.edge()); }

  // Image of the oriented edge whose initial direction is d.
  Word image(Direction d) const;
  Direction operator()(Direction d) const { return d == x_ ? y_ : d; }
  GraphMap to_map(int rank) const;
  DirectionMap direction_map(int rank) const;

  NielsenGenerator relabeled(const PairPermutation& p) const {
    return NielsenGenerator(p(x_), p(y_));
  }

  // Edge form, e.g. "[a->ab-]" or "[b->a-b]".
  std::string to_string() const;

  auto operator<=>(const NielsenGenerator&) const = default;

 private:
  Direction x_;
  Direction y_;
};

GraphMap generator_to_map(const NielsenGenerator& n, int rank);
Turn illegal_turn_of_generator(const NielsenGenerator& n);

// (x' = x and y' != bar(y)) or (y' = x and x' != bar(y)).
bool is_admissible_pair(const NielsenGenerator& first,
                        const NielsenGenerator& second);

// g = g_n o ... o g_1, applied first to last.  `origin` rotates the cyclic
// order: the effective sequence starts at steps()[origin].
class Decomposition {
 public:
  Decomposition() = default;
  Decomposition(int rank, std::vector<NielsenGenerator> steps, int origin = 0);

  int rank() const { return rank_; }
  const std::vector<NielsenGenerator>& steps() const { return steps_; }
  int origin() const { return origin_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  // Steps in application order, starting at the origin.
  std::vector<NielsenGenerator> effective_steps() const;
  // Same sequence re-based at origin 0.
  Decomposition normalized() const;
  // Effective sequence started k steps later.
  Decomposition rotated(int k) const;
  Decomposition power(int m) const;
  // Identity on the added edges.
  Decomposition extended(int rank) const;
  Decomposition relabeled(const PairPermutation& p) const;
  // First this, then `after`.
  Decomposition then(const Decomposition& after) const;
  Decomposition prefix(std::size_t k) const;

  // Explicit composite of the effective steps; see GraphMap::tightened().
  GraphMap compose_words() const;

  std::string to_string() const;

  bool operator==(const Decomposition&) const = default;

 private:
  int rank_ = 0;
  std::vector<NielsenGenerator> steps_;
  int origin_ = 0;
};

// Every consecutive pair of the effective sequence is admissible.
bool is_admissible(const Decomposition& d);
// Also the closing pair (g_n, g_1).  Empty sequences are not admissible.
bool is_cyclically_admissible(const Decomposition& d);

}  // namespace iwg

#endif  // IWG_NIELSEN_HPP_
