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

// Graph maps on the rose: direction maps, transition matrices and the
// explicit edge-image representation.

#ifndef IWG_GRAPH_MAP_HPP_
#define IWG_GRAPH_MAP_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "iwg/direction.hpp"

namespace iwg {

// A self-map of the 2r directions, e.g. Dg for a graph map g.
class DirectionMap {
 public:
  DirectionMap() = default;
  explicit DirectionMap(std::vector<Direction> images);

  static DirectionMap identity(int rank);

  int rank() const { return static_cast<int>(images_.size() / 2); }
  Direction operator()(Direction d) const { return images_[d.code()]; }
  Turn operator()(const Turn& t) const {
    return Turn((*this)(t.first()), (*this)(t.second()));
  }
  const std::vector<Direction>& images() const { return images_; }

  // Directions with no preimage.
  std::vector<Direction> missing() const;
  // Directions with two or more preimages.
  std::vector<Direction> doubled() const;

  // Directions lying on a cycle of the map.
  std::vector<Direction> periodic() const;
  bool is_periodic(Direction d) const;
  // Cycle length of a periodic direction, 0 for a nonperiodic one.
  int period(Direction d) const;

  auto operator<=>(const DirectionMap&) const = default;

 private:
  std::vector<Direction> images_;
};

// outer ∘ inner
DirectionMap compose(const DirectionMap& outer, const DirectionMap& inner);

// True iff the two directions of `t` collide under some iterate Dg^p with
// 1 <= p <= p_max.  Degenerate turns are illegal.  p_max <= 0 selects the
// default bound 2r + 2r, past which direction orbits have entered their cycle.
bool is_illegal(const DirectionMap& dg, const Turn& t, int p_max = 0);

// Nonnegative r x r matrix; entry (i, j) counts occurrences of E_i and its
// inverse in g(E_j).  Arithmetic saturates at kSaturated so that long
// composites keep their positivity pattern without overflow.
class TransitionMatrix {
 public:
  static constexpr std::uint64_t kSaturated = UINT64_MAX;

  TransitionMatrix() = default;
  explicit TransitionMatrix(int rank);
  static TransitionMatrix identity(int rank);

  int rank() const { return rank_; }
  std::uint64_t operator()(int i, int j) const { return cells_[i * rank_ + j]; }
  std::uint64_t& at(int i, int j) { return cells_[i * rank_ + j]; }

  // Sum of column j, i.e. the length of g(E_j) (saturating).
  std::uint64_t column_sum(int j) const;
  bool all_positive() const;

  auto operator<=>(const TransitionMatrix&) const = default;

  friend TransitionMatrix operator*(const TransitionMatrix& lhs,
                                    const TransitionMatrix& rhs);

 private:
  int rank_ = 0;
  std::vector<std::uint64_t> cells_;
};

TransitionMatrix power(const TransitionMatrix& m, int exponent);

// Irreducible: the digraph E_j -> E_i for positive entries (i, j) is strongly
// connected.
bool is_irreducible(const TransitionMatrix& m);
bool is_strictly_irreducible(const TransitionMatrix& m);
// length(g^n(E_j)) -> infinity for every j.  Decided on the transition
// digraph: the walk weight from j is unbounded unless every cyclic strongly
// connected component reachable from j is a closed simple cycle of unit
// weights.
bool is_expanding(const TransitionMatrix& m);

// Explicit graph map: each positive edge E_i has a reduced nonempty image.
//
// `tightened()` records whether free reduction cancelled letters at any point
// while this map was built by composition; such a composite is not a graph map
// of the underlying sequence even if the reduced images look fine.
class GraphMap {
 public:
  GraphMap() = default;
  GraphMap(int rank, std::vector<Word> images);

  static GraphMap identity(int rank);
  // One image per edge, in edge order, in the usual word syntax.
  static GraphMap parse(int rank, const std::vector<std::string>& images);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  bool tightened() const { return tightened_; }

  // g(d) for a direction: the image of the oriented edge starting with d.
  Word image(Direction d) const;
  // Letter-by-letter substitution without reduction.
  std::vector<Direction> substitute(const Word& w) const;
  Word apply(const Word& w) const;

  DirectionMap direction_map() const;
  TransitionMatrix transition_matrix() const;

  // Total number of letters over all edge images.
  std::uint64_t total_length() const;

  bool operator==(const GraphMap& other) const {
    return rank_ == other.rank_ && images_ == other.images_;
  }

  std::string to_string() const;

 private:
  friend GraphMap compose(const GraphMap& outer, const GraphMap& inner);

  int rank_ = 0;
  std::vector<Word> images_;
  bool tightened_ = false;
};

// outer ∘ inner: substitute, then freely reduce.  Throws RankError.
GraphMap compose(const GraphMap& outer, const GraphMap& inner);

GraphMap power(const GraphMap& g, int exponent);

Word apply(const GraphMap& g, const Word& w);
DirectionMap direction_map(const GraphMap& g);
TransitionMatrix transition_matrix(const GraphMap& g);

// Abelianized determinant; +-1 for homotopy equivalences.
long long abelian_determinant(const GraphMap& g);

}  // namespace iwg

#endif  // IWG_GRAPH_MAP_HPP_
