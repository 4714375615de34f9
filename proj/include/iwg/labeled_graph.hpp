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

// Colored graphs whose vertices are labeled by directions of a rank-r rose.

#ifndef IWG_LABELED_GRAPH_HPP_
#define IWG_LABELED_GRAPH_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iwg/direction.hpp"

namespace iwg {

enum class Color { black, red, purple };

std::string to_string(Color c);

struct Edge {
  Turn ends;
  Color color;

  auto operator<=>(const Edge&) const = default;
};

// Vertices carry a color (purple or red); edges are unordered label pairs
// with a color.  Self-loops are rejected.  Two edges may join the same pair
// only if their colors differ.
class ColoredPairLabeledGraph {
 public:
  explicit ColoredPairLabeledGraph(int rank = 0);

  int rank() const { return rank_; }

  void add_vertex(Direction d, Color c = Color::purple);
  // Adds missing endpoints as purple vertices.  Throws Error on a self-loop.
  void add_edge(Direction a, Direction b, Color c = Color::purple);
  void remove_edge(const Edge& e) { edges_.erase(e); }
  // Drops the vertex and every edge at it.
  void remove_vertex(Direction d);

  bool has_vertex(Direction d) const { return vertices_.count(d) > 0; }
  bool has_edge(Direction a, Direction b) const;
  bool has_edge(Direction a, Direction b, Color c) const {
    return edges_.count(Edge{Turn(a, b), c}) > 0;
  }
  Color vertex_color(Direction d) const { return vertices_.at(d); }
  const std::map<Direction, Color>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Edges counted with multiplicity.
  int valence(Direction d) const;
  // Distinct neighbours, sorted.
  std::vector<Direction> neighbors(Direction d) const;
  // Edge ends of the given color, as a turn set.
  TurnSet edge_set(Color c) const;

  ColoredPairLabeledGraph induced(const std::set<Direction>& keep) const;
  ColoredPairLabeledGraph without_color(Color c) const;
  ColoredPairLabeledGraph relabeled(const PairPermutation& p) const;

  auto operator<=>(const ColoredPairLabeledGraph&) const = default;

 private:
  int rank_ = 0;
  std::map<Direction, Color> vertices_;
  std::set<Edge> edges_;
};

// How an isomorphism must treat labels.
enum class LabelMode {
  // Identity on labels: plain equality.
  exact,
  // Any relabeling commuting with bar.
  edge_pairs,
  // Any bijection of vertex sets.
  free,
};

// Returns a vertex bijection g1 -> g2 carrying edges onto edges (with colors
// when asked), or nothing.
std::optional<std::map<Direction, Direction>> find_isomorphism(
    const ColoredPairLabeledGraph& g1, const ColoredPairLabeledGraph& g2,
    LabelMode mode, bool respect_colors = true);

bool is_isomorphic(const ColoredPairLabeledGraph& g1,
                   const ColoredPairLabeledGraph& g2, LabelMode mode,
                   bool respect_colors = true);

// Articulation points, per component.
std::set<Direction> cut_vertices(const ColoredPairLabeledGraph& g);

// Components as sorted label sets, ordered by least label.
std::vector<std::set<Direction>> connected_components(
    const ColoredPairLabeledGraph& g);

// Sorted, byte-stable DOT.
std::string to_dot(const ColoredPairLabeledGraph& g,
                   const std::string& name = "G");

}  // namespace iwg

#endif  // IWG_LABELED_GRAPH_HPP_
